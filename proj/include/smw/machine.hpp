#pragma once

// S-machine hardware, admissible words, S-rules and the computation runner.
//
// Indexing is 0-based throughout the C++ API: a machine with n tape sectors
// has state parts 0..n, and sector j lies between part j and part j+1. Files
// and reports use the 1-based Q_i / Y_i convention.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smw/word.hpp"

namespace smw {

class NotAdmissible : public Error {
 public:
  NotAdmissible(std::size_t position, const std::string& reason)
      : Error("not admissible at " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(reason) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class RuleShapeError : public Error {
 public:
  using Error::Error;
};

class HardwareError : public Error {
 public:
  using Error::Error;
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<LetterId> letters);

  bool contains(LetterId id) const;
  const std::vector<LetterId>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<LetterId> letters_;  // sorted, unique
};

/// (Y, Q): n tape alphabets and n+1 pairwise disjoint state alphabets.
class Hardware {
 public:
  Hardware(std::vector<Alphabet> tape, std::vector<Alphabet> state);

  std::size_t sectors() const noexcept { return tape_.size(); }
  std::size_t parts() const noexcept { return state_.size(); }
  const Alphabet& tape(std::size_t sector) const { return tape_.at(sector); }
  const Alphabet& state(std::size_t part) const { return state_.at(part); }
  const std::vector<Alphabet>& tape_alphabets() const noexcept { return tape_; }
  const std::vector<Alphabet>& state_alphabets() const noexcept { return state_; }

  /// Part index housing a state letter, if any.
  std::optional<std::size_t> part_of(LetterId id) const;
  bool is_tape_letter(LetterId id) const;
  std::vector<LetterId> all_tape_letters() const;

  friend bool operator==(const Hardware& a, const Hardware& b) {
    return a.tape_ == b.tape_ && a.state_ == b.state_;
  }

 private:
  std::vector<Alphabet> tape_;
  std::vector<Alphabet> state_;
  std::map<LetterId, std::size_t> part_index_;
};

/// q_0 u_0 q_1 ... u_{n-1} q_n with every u_j freely reduced over Y_j.
class AdmissibleWord {
 public:
  AdmissibleWord() = default;
  AdmissibleWord(std::vector<LetterId> states, std::vector<Word> sectors);

  const std::vector<LetterId>& states() const noexcept { return states_; }
  const std::vector<Word>& sectors() const noexcept { return sectors_; }
  LetterId state(std::size_t part) const { return states_.at(part); }
  const Word& sector(std::size_t j) const { return sectors_.at(j); }

  std::size_t length() const;
  std::size_t a_length() const;
  Word flat() const;

  friend bool operator==(const AdmissibleWord&, const AdmissibleWord&) = default;

 private:
  std::vector<LetterId> states_;
  std::vector<Word> sectors_;
};

AdmissibleWord parse_admissible(const Hardware& h, const Word& w);
AdmissibleWord parse_admissible(const Hardware& h, std::string_view text);
std::string to_string(const AdmissibleWord& w);

/// The (Q_i, Q_j)-subword q_i u_i ... q_j, parts given 0-based with i < j.
Word subword(const AdmissibleWord& w, std::size_t i, std::size_t j);

/// One side of a substitution: v q_l w_l ... q_r u, where v is a suffix of the
/// sector left of part l and u a prefix of the sector right of part r.
struct SubstitutionSide {
  Word left;
  std::vector<LetterId> states;
  std::vector<Word> inner;
  Word right;

  Word flat() const;
  friend bool operator==(const SubstitutionSide&, const SubstitutionSide&) = default;
};

struct Substitution {
  std::size_t first_part = 0;
  SubstitutionSide from;
  SubstitutionSide to;

  std::size_t last_part() const { return first_part + from.states.size() - 1; }
  friend bool operator==(const Substitution&, const Substitution&) = default;
};

Substitution parse_substitution(const Hardware& h, std::string_view pattern,
                                std::string_view replacement);

enum class Polarity { positive, negative };

struct SRule {
  std::string name;
  std::vector<Substitution> substitutions;
  /// sector -> permitted tape letters; absent sector means the full Y_j.
  std::map<std::size_t, Alphabet> domain;
  Polarity polarity = Polarity::positive;

  std::string display_name() const;
  bool touches(std::size_t part) const;
  friend bool operator==(const SRule&, const SRule&) = default;
};

SRule invert_rule(const SRule& r);

/// Throws RuleShapeError unless the rule type-checks against the hardware.
void check_rule(const Hardware& h, const SRule& r);

bool applicable(const SRule& r, const AdmissibleWord& w);

/// Applies every substitution simultaneously and re-reduces the affected
/// sectors. Each substitution acts as conjugation by the rule letter:
/// the left sector becomes x v^-1 v', the right one u' u^-1 y.
AdmissibleWord apply_rule(const SRule& r, const AdmissibleWord& w);

/// Length of apply_rule(r, w) without materializing it; w must satisfy applicable().
std::size_t applied_length(const SRule& r, const AdmissibleWord& w);

/// Declared rules plus their formal inverses. Rule index i < declared_count()
/// is declared; index i + declared_count() is its inverse.
class Machine {
 public:
  Machine(Hardware hardware, std::vector<SRule> declared);

  const Hardware& hardware() const noexcept { return hardware_; }
  const std::vector<SRule>& rules() const noexcept { return rules_; }
  const SRule& rule(std::size_t i) const { return rules_.at(i); }
  std::size_t declared_count() const noexcept { return rules_.size() / 2; }
  std::size_t inverse_index(std::size_t i) const {
    return i < declared_count() ? i + declared_count() : i - declared_count();
  }
  std::optional<std::size_t> find_rule(std::string_view display_name) const;

  std::vector<std::string> notes;

 private:
  Hardware hardware_;
  std::vector<SRule> rules_;
};

struct Step {
  std::size_t rule = 0;
  /// Flat offset of the leftmost state letter the rule touches in the source word.
  std::size_t position = 0;
};

struct Computation {
  std::vector<AdmissibleWord> words;
  std::vector<Step> steps;

  std::size_t length() const noexcept { return steps.size(); }
  const AdmissibleWord& front() const { return words.front(); }
  const AdmissibleWord& back() const { return words.back(); }
};

std::size_t touch_position(const SRule& r, const AdmissibleWord& w);

/// words[i+1] == apply_rule(steps[i], words[i]) for every i.
bool validate(const Machine& m, const Computation& c);

/// W_t -> ... -> W_0 using inverse rules.
Computation reversed(const Machine& m, const Computation& c);

struct Deterministic {
  /// Rule indices in priority order; empty means declared rules in order.
  std::vector<std::size_t> priority;
  /// Skip applications that would make the word longer.
  bool length_guard = false;
};

struct SearchTarget {
  std::size_t visited_capacity = 10'000'000;
  /// Prune words longer than this during exploration.
  std::optional<std::size_t> max_length;
};

using Strategy = std::variant<Deterministic, SearchTarget>;
using WordPredicate = std::function<bool(const AdmissibleWord&)>;

enum class Halt { target_reached, no_applicable_rule, budget_exhausted, not_found, capacity_exhausted };
std::string_view to_string(Halt h);

struct RunResult {
  Computation computation;
  Halt halt = Halt::no_applicable_rule;
};

/// Deterministic: the maximal run (stopping early at `target` if given) up to
/// `budget` steps. SearchTarget: a shortest computation to a word satisfying
/// `target`, by breadth-first search over all rules and inverses, with path
/// length at most `budget`.
RunResult run(const Machine& m, const AdmissibleWord& start, const Strategy& strategy,
              std::size_t budget, const WordPredicate& target = {});

/// Predicate: `pattern` occurs as a contiguous block of the flat word.
WordPredicate contains_subword(Word pattern);

}  // namespace smw
