#pragma once

// Letters, signed letters and free-group words.
//
// Letters are interned process-wide: each distinct (name, kind, sector, copy)
// tuple receives a small positive id. A signed letter is stored as a plain
// int32 whose sign is the exponent, so words are flat integer vectors and
// comparison / cancellation are single integer operations.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownLetter : public Error {
 public:
  explicit UnknownLetter(const std::string& token)
      : Error("unknown letter '" + token + "'"), token_(token) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class LetterClash : public Error {
 public:
  using Error::Error;
};

enum class LetterKind { tape, state, rule, kappa, special };

std::string_view to_string(LetterKind kind);

struct Letter {
  std::string name;
  LetterKind kind = LetterKind::tape;
  std::optional<int> sector;
  std::string copy_tag;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// "name[.copy_tag][@sector]"
std::string display(const Letter& letter);

/// Inverse of display(); kind is supplied by the caller's context.
Letter parse_letter(std::string_view text, LetterKind kind);

using LetterId = std::uint32_t;

/// A signed letter: +id for exponent +1, -id for exponent -1.
using Sym = std::int32_t;

constexpr Sym pos(LetterId id) noexcept { return static_cast<Sym>(id); }
constexpr Sym neg(LetterId id) noexcept { return -static_cast<Sym>(id); }
constexpr LetterId letter_of(Sym s) noexcept {
  return static_cast<LetterId>(s < 0 ? -s : s);
}
constexpr int exponent(Sym s) noexcept { return s < 0 ? -1 : 1; }

/// Interns a letter. Two letters with the same display string but different
/// kinds cannot coexist, since the textual syntax could not tell them apart.
LetterId intern(const Letter& letter);
LetterId intern(std::string_view display_text, LetterKind kind);

const Letter& letter(LetterId id);
std::optional<LetterId> find_letter(std::string_view display_text);
std::string display(LetterId id);
std::string display(Sym s);

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Sym> symbols) : syms_(std::move(symbols)), reduced_(syms_.size() < 2) {}
  Word(std::initializer_list<Sym> symbols) : Word(std::vector<Sym>(symbols)) {}

  std::span<const Sym> symbols() const noexcept { return syms_; }
  const std::vector<Sym>& vec() const noexcept { return syms_; }
  std::size_t size() const noexcept { return syms_.size(); }
  bool empty() const noexcept { return syms_.empty(); }
  Sym operator[](std::size_t i) const { return syms_[i]; }
  auto begin() const noexcept { return syms_.begin(); }
  auto end() const noexcept { return syms_.end(); }

  /// Cached flag; false means "not known to be reduced".
  bool reduced_flag() const noexcept { return reduced_; }

  friend bool operator==(const Word& a, const Word& b) { return a.syms_ == b.syms_; }
  friend auto operator<=>(const Word& a, const Word& b) { return a.syms_ <=> b.syms_; }

 private:
  friend Word reduce(const Word& w);
  friend Word reduce_product(std::initializer_list<std::span<const Sym>> parts);
  static Word make_reduced(std::vector<Sym> symbols) {
    Word w(std::move(symbols));
    w.reduced_ = true;
    return w;
  }

  std::vector<Sym> syms_;
  bool reduced_ = true;
};

Word reduce(const Word& w);

/// Free reduction of the juxtaposition of several symbol runs, in one pass.
Word reduce_product(std::initializer_list<std::span<const Sym>> parts);

Word invert(const Word& w);

enum class Reduce { yes, no };
Word concat(const Word& a, const Word& b, Reduce mode = Reduce::yes);

bool is_positive(const Word& w);
bool is_reduced(const Word& w);

/// Sum of exponents.
long algebraic_degree_sum(const Word& w);

/// Word of `count` copies of one signed letter.
Word power(Sym s, long count);

/// Whitespace-separated tokens, `x^-1` for inverses, `1` for the empty word.
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
  std::size_t operator()(std::span<const Sym> s) const noexcept;
};

}  // namespace smw
