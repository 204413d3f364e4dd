#include "smw/machine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace smw {

Alphabet::Alphabet(std::vector<LetterId> letters) : letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end());
  letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
}

bool Alphabet::contains(LetterId id) const {
  return std::binary_search(letters_.begin(), letters_.end(), id);
}

Hardware::Hardware(std::vector<Alphabet> tape, std::vector<Alphabet> state)
    : tape_(std::move(tape)), state_(std::move(state)) {
  if (state_.size() != tape_.size() + 1)
    throw HardwareError("need exactly one more state alphabet than tape alphabets");
  for (std::size_t i = 0; i < state_.size(); ++i) {
    if (state_[i].empty()) throw HardwareError("Q_" + std::to_string(i + 1) + " is empty");
    for (LetterId id : state_[i].letters()) {
      if (letter(id).kind != LetterKind::state)
        throw HardwareError("'" + display(id) + "' in Q_" + std::to_string(i + 1) + " is not a state letter");
      if (!part_index_.emplace(id, i).second)
        throw HardwareError("state alphabets overlap at '" + display(id) + "'");
    }
  }
  for (std::size_t j = 0; j < tape_.size(); ++j)
    for (LetterId id : tape_[j].letters()) {
      if (part_index_.count(id))
        throw HardwareError("'" + display(id) + "' is both a tape and a state letter");
      auto kind = letter(id).kind;
      if (kind != LetterKind::tape && kind != LetterKind::special)
        throw HardwareError("'" + display(id) + "' in Y_" + std::to_string(j + 1) + " is not a tape letter");
    }
}

std::optional<std::size_t> Hardware::part_of(LetterId id) const {
  auto it = part_index_.find(id);
  if (it == part_index_.end()) return std::nullopt;
  return it->second;
}

bool Hardware::is_tape_letter(LetterId id) const {
  return std::any_of(tape_.begin(), tape_.end(), [id](const Alphabet& a) { return a.contains(id); });
}

std::vector<LetterId> Hardware::all_tape_letters() const {
  std::vector<LetterId> out;
  for (const auto& a : tape_) out.insert(out.end(), a.letters().begin(), a.letters().end());
  return Alphabet(std::move(out)).letters();
}

AdmissibleWord::AdmissibleWord(std::vector<LetterId> states, std::vector<Word> sectors)
    : states_(std::move(states)), sectors_(std::move(sectors)) {
  if (states_.size() != sectors_.size() + 1) throw Error("admissible word shape mismatch");
}

std::size_t AdmissibleWord::length() const { return states_.size() + a_length(); }

std::size_t AdmissibleWord::a_length() const {
  std::size_t n = 0;
  for (const auto& s : sectors_) n += s.size();
  return n;
}

Word AdmissibleWord::flat() const {
  std::vector<Sym> out;
  out.reserve(length());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    out.push_back(pos(states_[i]));
    if (i < sectors_.size()) out.insert(out.end(), sectors_[i].begin(), sectors_[i].end());
  }
  return Word(std::move(out));
}

namespace {

std::string q_name(std::size_t part) { return "Q_" + std::to_string(part + 1); }
std::string y_name(std::size_t sector) { return "Y_" + std::to_string(sector + 1); }

}  // namespace

AdmissibleWord parse_admissible(const Hardware& h, const Word& w) {
  std::vector<LetterId> states;
  std::vector<Word> sectors;
  std::vector<Sym> current;
  std::size_t part = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Sym s = w[i];
    LetterId id = letter_of(s);
    if (auto p = h.part_of(id)) {
      if (*p != part) {
        if (part == h.parts()) throw NotAdmissible(i, "trailing letters after " + q_name(part - 1) + "-letter");
        throw NotAdmissible(i, "expected " + q_name(part) + "-letter, found '" + display(s) + "' from " + q_name(*p));
      }
      if (s < 0) throw NotAdmissible(i, "state letter with exponent -1");
      if (part > 0) sectors.emplace_back(std::move(current));
      current = {};
      states.push_back(id);
      ++part;
      continue;
    }
    if (part == 0) throw NotAdmissible(i, "expected " + q_name(0) + "-letter, found '" + display(s) + "'");
    if (part == h.parts()) throw NotAdmissible(i, "trailing letters after " + q_name(part - 1) + "-letter");
    std::size_t sector = part - 1;
    if (!h.tape(sector).contains(id))
      throw NotAdmissible(i, "tape letter '" + display(s) + "' outside " + y_name(sector));
    if (!current.empty() && current.back() == -s) throw NotAdmissible(i, "unreduced sector " + y_name(sector));
    current.push_back(s);
  }
  if (part != h.parts()) throw NotAdmissible(w.size(), "missing " + q_name(part) + "-letter");
  for (auto& sector : sectors) sector = reduce(sector);  // already reduced; sets the cache flag
  return AdmissibleWord(std::move(states), std::move(sectors));
}

AdmissibleWord parse_admissible(const Hardware& h, std::string_view text) {
  return parse_admissible(h, parse_word(text));
}

std::string to_string(const AdmissibleWord& w) { return to_string(w.flat()); }

Word subword(const AdmissibleWord& w, std::size_t i, std::size_t j) {
  if (!(i < j && j < w.states().size()))
    throw IndexOutOfRange("(Q_i,Q_j)-subword needs i < j <= n+1");
  std::vector<Sym> out;
  for (std::size_t k = i; k <= j; ++k) {
    out.push_back(pos(w.state(k)));
    if (k < j) out.insert(out.end(), w.sector(k).begin(), w.sector(k).end());
  }
  return Word(std::move(out));
}

Word SubstitutionSide::flat() const {
  std::vector<Sym> out(left.begin(), left.end());
  for (std::size_t k = 0; k < states.size(); ++k) {
    out.push_back(pos(states[k]));
    if (k < inner.size()) out.insert(out.end(), inner[k].begin(), inner[k].end());
  }
  out.insert(out.end(), right.begin(), right.end());
  return Word(std::move(out));
}

namespace {

struct ParsedSide {
  std::size_t first_part;
  SubstitutionSide side;
};

ParsedSide parse_side(const Hardware& h, const Word& w, std::string_view text) {
  ParsedSide out{0, {}};
  std::vector<Sym> run;
  bool seen_state = false;
  std::size_t expected = 0;
  for (Sym s : w) {
    auto part = h.part_of(letter_of(s));
    if (!part) {
      run.push_back(s);
      continue;
    }
    if (s < 0) throw RuleShapeError("inverted state letter in '" + std::string(text) + "'");
    if (!seen_state) {
      out.first_part = *part;
      out.side.left = Word(std::move(run));
      seen_state = true;
    } else {
      if (*part != expected)
        throw RuleShapeError("state letters of '" + std::string(text) + "' are not consecutive parts");
      out.side.inner.emplace_back(std::move(run));
    }
    run = {};
    out.side.states.push_back(letter_of(s));
    expected = *part + 1;
  }
  if (!seen_state) throw RuleShapeError("'" + std::string(text) + "' contains no state letter");
  out.side.right = Word(std::move(run));
  return out;
}

}  // namespace

Substitution parse_substitution(const Hardware& h, std::string_view pattern, std::string_view replacement) {
  auto from = parse_side(h, parse_word(pattern), pattern);
  auto to = parse_side(h, parse_word(replacement), replacement);
  if (from.first_part != to.first_part || from.side.states.size() != to.side.states.size())
    throw RuleShapeError("'" + std::string(pattern) + "' and '" + std::string(replacement) +
                         "' span different parts");
  return Substitution{from.first_part, std::move(from.side), std::move(to.side)};
}

std::string SRule::display_name() const {
  return polarity == Polarity::positive ? name : name + "^-1";
}

bool SRule::touches(std::size_t part) const {
  return std::any_of(substitutions.begin(), substitutions.end(), [part](const Substitution& s) {
    return s.first_part <= part && part <= s.last_part();
  });
}

SRule invert_rule(const SRule& r) {
  SRule inv = r;
  for (auto& s : inv.substitutions) std::swap(s.from, s.to);
  inv.polarity = r.polarity == Polarity::positive ? Polarity::negative : Polarity::positive;
  return inv;
}

namespace {

void check_tape_word(const Hardware& h, const SRule& r, const Word& w, std::size_t sector,
                     const std::string& what) {
  if (!is_reduced(w)) throw RuleShapeError(r.name + ": " + what + " is not reduced");
  for (Sym s : w) {
    LetterId id = letter_of(s);
    if (!h.tape(sector).contains(id))
      throw RuleShapeError(r.name + ": '" + display(s) + "' is not in " + y_name(sector));
    auto d = r.domain.find(sector);
    if (d != r.domain.end() && !d->second.contains(id))
      throw RuleShapeError(r.name + ": '" + display(s) + "' is outside " + y_name(sector) + "(" + r.name + ")");
  }
}

void check_side(const Hardware& h, const SRule& r, std::size_t first, const SubstitutionSide& side) {
  std::size_t span = side.states.size();
  if (span == 0) throw RuleShapeError(r.name + ": empty substitution");
  std::size_t last = first + span - 1;
  if (last >= h.parts()) throw RuleShapeError(r.name + ": substitution runs past Q_n+1");
  if (side.inner.size() != span - 1) throw RuleShapeError(r.name + ": inner sector count mismatch");
  for (std::size_t k = 0; k < span; ++k)
    if (!h.state(first + k).contains(side.states[k]))
      throw RuleShapeError(r.name + ": '" + display(side.states[k]) + "' is not in " + q_name(first + k));
  for (std::size_t k = 0; k + 1 < span; ++k) check_tape_word(h, r, side.inner[k], first + k, "inner sector");
  if (first == 0) {
    if (!side.left.empty()) throw RuleShapeError(r.name + ": tape letters left of Q_1");
  } else {
    check_tape_word(h, r, side.left, first - 1, "left context");
  }
  if (last + 1 == h.parts()) {
    if (!side.right.empty()) throw RuleShapeError(r.name + ": tape letters right of Q_n+1");
  } else {
    check_tape_word(h, r, side.right, last, "right context");
  }
}

}  // namespace

void check_rule(const Hardware& h, const SRule& r) {
  for (const auto& [sector, alphabet] : r.domain) {
    if (sector >= h.sectors()) throw RuleShapeError(r.name + ": domain names a missing sector");
    for (LetterId id : alphabet.letters())
      if (!h.tape(sector).contains(id))
        throw RuleShapeError(r.name + ": domain letter '" + display(id) + "' is not in " + y_name(sector));
  }
  for (std::size_t i = 0; i < r.substitutions.size(); ++i) {
    const auto& s = r.substitutions[i];
    if (s.from.states.size() != s.to.states.size())
      throw RuleShapeError(r.name + ": U and V span different parts");
    check_side(h, r, s.first_part, s.from);
    check_side(h, r, s.first_part, s.to);
    if (i > 0 && !(r.substitutions[i - 1].last_part() < s.first_part))
      throw RuleShapeError(r.name + ": substitutions overlap or are out of order");
  }
}

bool applicable(const SRule& r, const AdmissibleWord& w) {
  for (const auto& s : r.substitutions) {
    if (s.last_part() >= w.states().size()) return false;
    for (std::size_t k = 0; k < s.from.states.size(); ++k)
      if (w.state(s.first_part + k) != s.from.states[k]) return false;
    for (std::size_t k = 0; k < s.from.inner.size(); ++k)
      if (w.sector(s.first_part + k) != s.from.inner[k]) return false;
  }
  for (const auto& [sector, alphabet] : r.domain) {
    if (sector >= w.sectors().size()) return false;
    for (Sym x : w.sector(sector))
      if (!alphabet.contains(letter_of(x))) return false;
  }
  return true;
}

namespace {

// Left and right multipliers for one sector: new = reduce(prefix x suffix).
struct SectorEdit {
  std::vector<Sym> prefix;
  std::vector<Sym> suffix;
  const Word* replacement = nullptr;
  bool touched = false;
};

void append_inverse(std::vector<Sym>& out, const Word& w) {
  for (auto it = w.vec().rbegin(); it != w.vec().rend(); ++it) out.push_back(-*it);
}

std::vector<SectorEdit> sector_edits(const SRule& r, std::size_t sectors) {
  std::vector<SectorEdit> edits(sectors);
  for (const auto& s : r.substitutions) {
    if (s.first_part > 0) {
      auto& e = edits[s.first_part - 1];
      append_inverse(e.suffix, s.from.left);
      e.suffix.insert(e.suffix.end(), s.to.left.begin(), s.to.left.end());
      e.touched = true;
    }
    for (std::size_t k = 0; k < s.to.inner.size(); ++k) {
      edits[s.first_part + k].replacement = &s.to.inner[k];
      edits[s.first_part + k].touched = true;
    }
    if (s.last_part() < sectors) {
      auto& e = edits[s.last_part()];
      e.prefix.insert(e.prefix.end(), s.to.right.begin(), s.to.right.end());
      append_inverse(e.prefix, s.from.right);
      e.touched = true;
    }
  }
  return edits;
}

std::size_t reduced_length(std::initializer_list<std::span<const Sym>> parts) {
  thread_local std::vector<Sym> stack;
  stack.clear();
  for (auto p : parts)
    for (Sym s : p) {
      if (!stack.empty() && stack.back() == -s)
        stack.pop_back();
      else
        stack.push_back(s);
    }
  return stack.size();
}

}  // namespace

AdmissibleWord apply_rule(const SRule& r, const AdmissibleWord& w) {
  if (!applicable(r, w)) throw NotApplicable(r.display_name() + " is not applicable to " + to_string(w));
  std::vector<LetterId> states = w.states();
  std::vector<Word> sectors = w.sectors();
  for (const auto& s : r.substitutions)
    for (std::size_t k = 0; k < s.to.states.size(); ++k) states[s.first_part + k] = s.to.states[k];
  auto edits = sector_edits(r, sectors.size());
  for (std::size_t j = 0; j < sectors.size(); ++j) {
    const auto& e = edits[j];
    if (!e.touched) continue;
    if (e.replacement)
      sectors[j] = reduce(*e.replacement);
    else
      sectors[j] = reduce_product({e.prefix, sectors[j].symbols(), e.suffix});
  }
  return AdmissibleWord(std::move(states), std::move(sectors));
}

std::size_t applied_length(const SRule& r, const AdmissibleWord& w) {
  auto edits = sector_edits(r, w.sectors().size());
  std::size_t total = w.states().size();
  for (std::size_t j = 0; j < w.sectors().size(); ++j) {
    const auto& e = edits[j];
    if (!e.touched)
      total += w.sector(j).size();
    else if (e.replacement)
      total += e.replacement->size();
    else
      total += reduced_length({e.prefix, w.sector(j).symbols(), e.suffix});
  }
  return total;
}

Machine::Machine(Hardware hardware, std::vector<SRule> declared) : hardware_(std::move(hardware)) {
  for (const auto& r : declared) check_rule(hardware_, r);
  rules_ = declared;
  for (const auto& r : declared) rules_.push_back(invert_rule(r));
}

std::optional<std::size_t> Machine::find_rule(std::string_view display_name) const {
  for (std::size_t i = 0; i < rules_.size(); ++i)
    if (rules_[i].display_name() == display_name) return i;
  return std::nullopt;
}

std::size_t touch_position(const SRule& r, const AdmissibleWord& w) {
  if (r.substitutions.empty()) return 0;
  std::size_t part = r.substitutions.front().first_part;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < part; ++j) offset += 1 + w.sector(j).size();
  return offset;
}

bool validate(const Machine& m, const Computation& c) {
  if (c.words.size() != c.steps.size() + 1) return false;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    if (c.steps[i].rule >= m.rules().size()) return false;
    const auto& r = m.rule(c.steps[i].rule);
    if (!applicable(r, c.words[i])) return false;
    if (apply_rule(r, c.words[i]) != c.words[i + 1]) return false;
  }
  return true;
}

Computation reversed(const Machine& m, const Computation& c) {
  Computation out;
  out.words.assign(c.words.rbegin(), c.words.rend());
  for (std::size_t i = c.steps.size(); i-- > 0;) {
    std::size_t inv = m.inverse_index(c.steps[i].rule);
    out.steps.push_back({inv, touch_position(m.rule(inv), c.words[i + 1])});
  }
  return out;
}

std::string_view to_string(Halt h) {
  switch (h) {
    case Halt::target_reached: return "target_reached";
    case Halt::no_applicable_rule: return "no_applicable_rule";
    case Halt::budget_exhausted: return "budget_exhausted";
    case Halt::not_found: return "not_found";
    case Halt::capacity_exhausted: return "capacity_exhausted";
  }
  return "?";
}

namespace {

RunResult run_deterministic(const Machine& m, const AdmissibleWord& start, const Deterministic& d,
                            std::size_t budget, const WordPredicate& target) {
  std::vector<std::size_t> priority = d.priority;
  if (priority.empty())
    for (std::size_t i = 0; i < m.declared_count(); ++i) priority.push_back(i);

  RunResult result;
  auto& c = result.computation;
  c.words.push_back(start);
  while (true) {
    const AdmissibleWord& cur = c.words.back();
    if (target && target(cur)) {
      result.halt = Halt::target_reached;
      return result;
    }
    if (c.steps.size() >= budget) {
      result.halt = Halt::budget_exhausted;
      return result;
    }
    std::optional<std::size_t> chosen;
    for (std::size_t idx : priority) {
      const auto& r = m.rule(idx);
      if (!applicable(r, cur)) continue;
      if (d.length_guard && applied_length(r, cur) > cur.length()) continue;
      chosen = idx;
      break;
    }
    if (!chosen) {
      result.halt = Halt::no_applicable_rule;
      return result;
    }
    const auto& r = m.rule(*chosen);
    Step step{*chosen, touch_position(r, cur)};
    AdmissibleWord next = apply_rule(r, cur);
    c.steps.push_back(step);
    c.words.push_back(std::move(next));
  }
}

RunResult run_search(const Machine& m, const AdmissibleWord& start, const SearchTarget& s, std::size_t budget,
                     const WordPredicate& target) {
  if (!target) throw Error("breadth-first search needs a target predicate");
  RunResult result;
  result.computation.words.push_back(start);
  if (target(start)) {
    result.halt = Halt::target_reached;
    return result;
  }

  struct Node {
    AdmissibleWord word;
    std::size_t parent;
    std::size_t rule;
    std::size_t depth;
  };
  std::deque<Node> nodes;
  std::unordered_set<Word, WordHash> visited;
  nodes.push_back({start, 0, 0, 0});
  visited.insert(start.flat());
  bool depth_limited = false;

  auto reconstruct = [&](std::size_t leaf) {
    std::vector<std::size_t> chain;
    for (std::size_t i = leaf; i != 0; i = nodes[i].parent) chain.push_back(i);
    Computation c;
    c.words.push_back(start);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const Node& n = nodes[*it];
      c.steps.push_back({n.rule, touch_position(m.rule(n.rule), c.words.back())});
      c.words.push_back(n.word);
    }
    return c;
  };

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= budget) {
      depth_limited = true;
      continue;
    }
    AdmissibleWord cur = nodes[head].word;
    std::size_t depth = nodes[head].depth;
    for (std::size_t i = 0; i < m.rules().size(); ++i) {
      const auto& r = m.rule(i);
      if (!applicable(r, cur)) continue;
      if (s.max_length && applied_length(r, cur) > *s.max_length) continue;
      AdmissibleWord next = apply_rule(r, cur);
      if (!visited.insert(next.flat()).second) continue;
      if (visited.size() > s.visited_capacity) {
        result.halt = Halt::capacity_exhausted;
        return result;
      }
      nodes.push_back({std::move(next), head, i, depth + 1});
      if (target(nodes.back().word)) {
        result.computation = reconstruct(nodes.size() - 1);
        result.halt = Halt::target_reached;
        return result;
      }
    }
  }
  result.halt = depth_limited ? Halt::budget_exhausted : Halt::not_found;
  return result;
}

}  // namespace

RunResult run(const Machine& m, const AdmissibleWord& start, const Strategy& strategy, std::size_t budget,
              const WordPredicate& target) {
  if (const auto* d = std::get_if<Deterministic>(&strategy)) return run_deterministic(m, start, *d, budget, target);
  return run_search(m, start, std::get<SearchTarget>(strategy), budget, target);
}

WordPredicate contains_subword(Word pattern) {
  return [pattern = std::move(pattern)](const AdmissibleWord& w) {
    Word flat = w.flat();
    return std::search(flat.begin(), flat.end(), pattern.begin(), pattern.end()) != flat.end();
  };
}

}  // namespace smw
