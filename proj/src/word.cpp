#include "smw/word.hpp"

#include <charconv>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace smw {

std::string_view to_string(LetterKind kind) {
  switch (kind) {
    case LetterKind::tape: return "tape";
    case LetterKind::state: return "state";
    case LetterKind::rule: return "rule";
    case LetterKind::kappa: return "kappa";
    case LetterKind::special: return "special";
  }
  return "?";
}

std::string display(const Letter& letter) {
  std::string out = letter.name;
  if (!letter.copy_tag.empty()) {
    out += '.';
    out += letter.copy_tag;
  }
  if (letter.sector) {
    out += '@';
    out += std::to_string(*letter.sector);
  }
  return out;
}

Letter parse_letter(std::string_view text, LetterKind kind) {
  Letter l;
  l.kind = kind;
  auto at = text.find('@');
  std::string_view head = text.substr(0, at);
  if (at != std::string_view::npos) {
    auto tail = text.substr(at + 1);
    int sector = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), sector);
    if (ec != std::errc{} || ptr != tail.data() + tail.size())
      throw Error("bad sector tag in letter '" + std::string(text) + "'");
    l.sector = sector;
  }
  auto dot = head.find('.');
  l.name = std::string(head.substr(0, dot));
  if (dot != std::string_view::npos) l.copy_tag = std::string(head.substr(dot + 1));
  if (l.name.empty() || l.name == "1" || l.name.find_first_of(" \t\n^") != std::string::npos)
    throw Error("invalid letter name '" + std::string(text) + "'");
  return l;
}

namespace {

class LetterTable {
 public:
  LetterId intern(const Letter& l) {
    std::string key = display(l);
    {
      std::shared_lock lock(mutex_);
      if (auto id = lookup(key, l)) return *id;
    }
    std::unique_lock lock(mutex_);
    if (auto id = lookup(key, l)) return *id;
    letters_.push_back(l);
    auto id = static_cast<LetterId>(letters_.size());
    by_display_.emplace(std::move(key), id);
    return id;
  }

  const Letter& get(LetterId id) const {
    std::shared_lock lock(mutex_);
    if (id == 0 || id > letters_.size()) throw Error("letter id out of range");
    return letters_[id - 1];
  }

  std::optional<LetterId> find(std::string_view key) const {
    std::shared_lock lock(mutex_);
    auto it = by_display_.find(std::string(key));
    if (it == by_display_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::optional<LetterId> lookup(const std::string& key, const Letter& l) const {
    auto it = by_display_.find(key);
    if (it == by_display_.end()) return std::nullopt;
    const Letter& existing = letters_[it->second - 1];
    if (existing != l)
      throw LetterClash("letter '" + key + "' already interned as " +
                        std::string(to_string(existing.kind)));
    return it->second;
  }

  mutable std::shared_mutex mutex_;
  std::deque<Letter> letters_;  // deque: references stay valid on growth
  std::unordered_map<std::string, LetterId> by_display_;
};

LetterTable& table() {
  static LetterTable t;
  return t;
}

}  // namespace

LetterId intern(const Letter& letter) { return table().intern(letter); }

LetterId intern(std::string_view display_text, LetterKind kind) {
  return intern(parse_letter(display_text, kind));
}

const Letter& letter(LetterId id) { return table().get(id); }

std::optional<LetterId> find_letter(std::string_view display_text) {
  return table().find(display_text);
}

std::string display(LetterId id) { return display(letter(id)); }

std::string display(Sym s) {
  auto text = display(letter_of(s));
  if (s < 0) text += "^-1";
  return text;
}

Word reduce(const Word& w) {
  if (w.reduced_) return w;
  std::vector<Sym> out;
  out.reserve(w.size());
  for (Sym s : w.syms_) {
    if (!out.empty() && out.back() == -s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return Word::make_reduced(std::move(out));
}

Word reduce_product(std::initializer_list<std::span<const Sym>> parts) {
  std::size_t total = 0;
  for (auto p : parts) total += p.size();
  std::vector<Sym> out;
  out.reserve(total);
  for (auto p : parts)
    for (Sym s : p) {
      if (!out.empty() && out.back() == -s)
        out.pop_back();
      else
        out.push_back(s);
    }
  return Word::make_reduced(std::move(out));
}

Word invert(const Word& w) {
  std::vector<Sym> out(w.vec().rbegin(), w.vec().rend());
  for (Sym& s : out) s = -s;
  Word r(std::move(out));
  return w.reduced_flag() ? reduce(r) : r;
}

Word concat(const Word& a, const Word& b, Reduce mode) {
  if (mode == Reduce::yes) return reduce_product({a.symbols(), b.symbols()});
  std::vector<Sym> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

bool is_positive(const Word& w) {
  for (Sym s : w)
    if (s < 0) return false;
  return true;
}

bool is_reduced(const Word& w) {
  if (w.reduced_flag()) return true;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

long algebraic_degree_sum(const Word& w) {
  long sum = 0;
  for (Sym s : w) sum += exponent(s);
  return sum;
}

Word power(Sym s, long count) {
  if (count < 0) {
    s = -s;
    count = -count;
  }
  return reduce(Word(std::vector<Sym>(static_cast<std::size_t>(count), s)));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += display(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Sym> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  bool saw_identity = false;
  while (in >> tok) {
    if (tok == "1") {
      saw_identity = true;
      continue;
    }
    bool inverse = false;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      inverse = true;
      tok.resize(tok.size() - 3);
    }
    auto id = find_letter(tok);
    if (!id) throw UnknownLetter(tok);
    out.push_back(inverse ? neg(*id) : pos(*id));
  }
  if (saw_identity && !out.empty()) throw Error("'1' mixed with letters in word '" + std::string(text) + "'");
  return Word(std::move(out));
}

std::size_t WordHash::operator()(std::span<const Sym> s) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Sym x : s) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::size_t WordHash::operator()(const Word& w) const noexcept { return (*this)(w.symbols()); }

}  // namespace smw
