#include "smw/presentation.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace smw {

std::string_view to_string(RelatorTag t) {
  switch (t) {
    case RelatorTag::transition: return "transition";
    case RelatorTag::fixing: return "fixing";
    case RelatorTag::auxiliary: return "auxiliary";
    case RelatorTag::hub: return "hub";
  }
  return "?";
}

namespace {

// Symbol order used for canonical rotations: (display, exponent).
struct SymOrder {
  std::unordered_map<Sym, std::string> names;
  const std::string& name(Sym s) {
    auto it = names.find(s);
    if (it == names.end()) it = names.emplace(s, display(letter_of(s))).first;
    return it->second;
  }
  bool less(Sym a, Sym b) {
    if (letter_of(a) == letter_of(b)) return exponent(a) < exponent(b);
    return name(a) < name(b);
  }
  // Compares rotation i of a with rotation j of b (same length).
  bool less(const std::vector<Sym>& a, std::size_t i, const std::vector<Sym>& b, std::size_t j) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
      Sym x = a[(i + k) % n], y = b[(j + k) % n];
      if (x == y) continue;
      return less(x, y);
    }
    return false;
  }
};

SymOrder& order() {
  thread_local SymOrder o;
  return o;
}

std::vector<Sym> rotate_left(const std::vector<Sym>& v, std::size_t k) {
  std::vector<Sym> out(v.begin() + static_cast<long>(k), v.end());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<long>(k));
  return out;
}

std::size_t least_shift(const std::vector<Sym>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (order().less(v, i, v, best)) best = i;
  return best;
}

}  // namespace

Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  const auto& v = r.vec();
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == -v[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Sym>(v.begin() + static_cast<long>(lo), v.begin() + static_cast<long>(hi)));
}

Word least_rotation(const Word& w) {
  if (w.size() < 2) return w;
  return Word(rotate_left(w.vec(), least_shift(w.vec())));
}

Word relator_key(const Word& w) {
  Word a = least_rotation(cyclic_reduce(w));
  Word b = least_rotation(invert(a));
  return order().less(b.vec(), 0, a.vec(), 0) ? b : a;
}

std::size_t GroupPresentation::count(RelatorTag t) const {
  return static_cast<std::size_t>(std::count_if(relators.begin(), relators.end(), [t](const Relator& r) { return r.tag == t; }));
}

void GroupPresentation::index() {
  by_key_.clear();
  for (std::size_t i = 0; i < relators.size(); ++i) by_key_.emplace(relator_key(relators[i].word), i);
}

std::optional<std::size_t> GroupPresentation::find(const Word& w) const {
  auto it = by_key_.find(relator_key(w));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

LetterId kappa(std::size_t j) { return intern(Letter{"kappa" + std::to_string(j), LetterKind::kappa, std::nullopt, {}}); }

std::vector<LetterId> default_specials() {
  std::vector<LetterId> out;
  for (const char* name : {"alpha", "omega", "delta"})
    out.push_back(intern(Letter{name, LetterKind::special, std::nullopt, {}}));
  return out;
}

Word hub_word_unreduced(const Word& u, std::size_t n) {
  if (n == 0) throw Error("hub word needs N >= 1");
  for (Sym s : u)
    if (letter(letter_of(s)).kind == LetterKind::kappa)
      throw KappaCollision("'" + display(s) + "' is a kappa letter");
  const Word ui = invert(u);
  std::vector<Sym> first, second;
  for (std::size_t j = 1; j <= 2 * n; ++j) {
    const Word& w = j % 2 == 1 ? ui : u;
    first.insert(first.end(), w.begin(), w.end());
    first.push_back(pos(kappa(j)));
  }
  for (std::size_t j = 2 * n; j >= 1; --j) {
    second.push_back(pos(kappa(j)));
    const Word& w = j % 2 == 0 ? ui : u;
    second.insert(second.end(), w.begin(), w.end());
  }
  Word tail = invert(Word(std::move(second)));
  first.insert(first.end(), tail.begin(), tail.end());
  return Word(std::move(first));
}

Word hub_word(const Word& u, std::size_t n) { return reduce(hub_word_unreduced(u, n)); }

LetterId rule_letter(const SRule& r) { return intern(Letter{r.name, LetterKind::rule, std::nullopt, {}}); }

GroupPresentation generate_presentation(const Machine& m, const HubParams& hub, const std::vector<LetterId>& specials) {
  const Hardware& h = m.hardware();
  if (hub.n == 0) throw Error("hub needs N >= 1");
  AdmissibleWord w0 = parse_admissible(h, hub.w0.flat());

  GroupPresentation p;
  std::set<LetterId> seen;
  auto add_gen = [&](LetterId id) {
    if (seen.insert(id).second) p.generators.push_back(id);
  };
  for (const auto& q : h.state_alphabets())
    for (LetterId id : q.letters()) add_gen(id);
  std::vector<LetterId> commuting = h.all_tape_letters();
  for (LetterId id : commuting) add_gen(id);
  for (LetterId id : specials) {
    if (letter(id).kind != LetterKind::special && letter(id).kind != LetterKind::tape)
      throw Error("'" + display(id) + "' cannot be a special letter");
    if (std::find(commuting.begin(), commuting.end(), id) == commuting.end()) commuting.push_back(id);
    add_gen(id);
  }
  for (std::size_t j = 1; j <= 2 * hub.n; ++j) add_gen(kappa(j));
  std::vector<LetterId> rule_ids;
  for (std::size_t i = 0; i < m.declared_count(); ++i) {
    rule_ids.push_back(rule_letter(m.rule(i)));
    add_gen(rule_ids.back());
  }

  std::unordered_set<Word, WordHash> stored;
  auto add = [&](std::vector<Sym> raw, RelatorTag tag, const std::string& origin) {
    Word w = least_rotation(cyclic_reduce(Word(std::move(raw))));
    if (w.empty() || !stored.insert(w).second) return;
    p.relators.push_back({std::move(w), tag, origin});
  };

  for (std::size_t i = 0; i < m.declared_count(); ++i) {
    const SRule& r = m.rule(i);
    const Sym t = pos(rule_ids[i]);
    for (const auto& s : r.substitutions) {
      Word u = s.from.flat(), v = invert(s.to.flat());
      std::vector<Sym> raw{-t};
      raw.insert(raw.end(), u.begin(), u.end());
      raw.push_back(t);
      raw.insert(raw.end(), v.begin(), v.end());
      add(std::move(raw), RelatorTag::transition, r.name);
    }
  }
  for (std::size_t i = 0; i < m.declared_count(); ++i) {
    const SRule& r = m.rule(i);
    const Sym t = pos(rule_ids[i]);
    for (std::size_t j = 0; j < h.parts(); ++j) {
      if (r.touches(j)) continue;
      for (LetterId q : h.state(j).letters()) add({-t, pos(q), t, neg(q)}, RelatorTag::fixing, r.name);
    }
  }
  for (std::size_t i = 0; i < m.declared_count(); ++i) {
    const Sym t = pos(rule_ids[i]);
    for (LetterId x : commuting) add({t, pos(x), -t, neg(x)}, RelatorTag::auxiliary, m.rule(i).name);
  }
  Word k = hub_word(w0.flat(), hub.n);
  add(k.vec(), RelatorTag::hub, "hub");
  p.index();
  return p;
}

void write_presentation(std::ostream& out, const GroupPresentation& p) {
  out << "! generators:";
  for (LetterId id : p.generators) out << ' ' << display(id);
  out << "\n! tags:";
  for (const auto& r : p.relators) out << ' ' << to_string(r.tag);
  out << '\n';
  for (const auto& r : p.relators) out << to_string(r.word) << '\n';
}

bool verify_trace(const GroupPresentation& p, const RelatorTrace& t) {
  std::vector<Sym> acc(t.start.begin(), t.start.end());
  for (const auto& s : t.steps) {
    if (s.relator >= p.relators.size())
      throw IndexOutOfRange("relator " + std::to_string(s.relator) + " of " + std::to_string(p.relators.size()));
    if (s.exponent != 1 && s.exponent != -1) return false;
    const Word& r = p.relators[s.relator].word;
    Word ci = invert(s.conjugator);
    acc.insert(acc.end(), ci.begin(), ci.end());
    if (s.exponent == 1) {
      acc.insert(acc.end(), r.begin(), r.end());
    } else {
      Word ri = invert(r);
      acc.insert(acc.end(), ri.begin(), ri.end());
    }
    acc.insert(acc.end(), s.conjugator.begin(), s.conjugator.end());
    acc = reduce(Word(std::move(acc))).vec();
  }
  return Word(std::move(acc)) == reduce(t.end);
}

namespace {

struct Block {
  std::vector<Sym> from;
  std::vector<Sym> to;
};

void letters_of(std::vector<Block>& blocks, const Word& w) {
  for (Sym s : w) blocks.push_back({{s}, {s}});
}

}  // namespace

RelatorTrace rule_application_trace(const GroupPresentation& p, const Machine& m, std::size_t rule, const AdmissibleWord& w) {
  const SRule& r = m.rule(rule);
  if (!applicable(r, w)) throw NotApplicable(r.display_name() + " is not applicable to " + to_string(w));
  const Sym t = r.polarity == Polarity::positive ? pos(rule_letter(r)) : neg(rule_letter(r));
  const std::size_t parts = w.states().size();

  std::vector<const Substitution*> starting(parts, nullptr), ending(parts, nullptr);
  for (const auto& s : r.substitutions) {
    starting[s.first_part] = &s;
    ending[s.last_part()] = &s;
  }

  // t^-1 w t is split as a product of blocks t^-1 X t; each X is rewritten to
  // its image and the products of images reduce to w'.
  std::vector<Block> blocks;
  for (std::size_t k = 0; k < parts; ++k) {
    if (const Substitution* s = starting[k]) {
      blocks.push_back({s->from.flat().vec(), s->to.flat().vec()});
      k = s->last_part();
    } else {
      blocks.push_back({{pos(w.state(k))}, {pos(w.state(k))}});
    }
    if (k + 1 == parts) break;
    if (const Substitution* s = ending[k]) letters_of(blocks, invert(s->from.right));
    letters_of(blocks, w.sector(k));
    if (const Substitution* s = starting[k + 1]) letters_of(blocks, invert(s->from.left));
  }

  RelatorTrace trace;
  {
    Word f = w.flat();
    std::vector<Sym> start{-t};
    start.insert(start.end(), f.begin(), f.end());
    start.push_back(t);
    trace.start = Word(std::move(start));
  }
  trace.end = apply_rule(r, w).flat();

  std::vector<Sym> suffix;  // images of the blocks already rewritten
  for (std::size_t b = blocks.size(); b-- > 0;) {
    const Block& blk = blocks[b];
    std::vector<Sym> x{-t};
    x.insert(x.end(), blk.from.begin(), blk.from.end());
    x.push_back(t);
    std::vector<Sym> rho = x;
    Word yi = invert(Word(blk.to));
    rho.insert(rho.end(), yi.begin(), yi.end());
    Word rw(rho);

    auto idx = p.find(rw);
    if (!idx) throw Error("no relator matches " + to_string(rw) + " for " + r.display_name());
    const Word& rel = p.relators[*idx].word;
    bool placed = false;
    for (int e : {1, -1}) {
      const std::vector<Sym> re = e == 1 ? rel.vec() : invert(rel).vec();
      if (re.size() != rho.size()) continue;
      for (std::size_t k = 0; k < re.size() && !placed; ++k) {
        if (rotate_left(re, k) != rho) continue;
        std::vector<Sym> conj(re.begin(), re.begin() + static_cast<long>(k));
        conj.insert(conj.end(), x.begin(), x.end());
        conj.insert(conj.end(), suffix.begin(), suffix.end());
        trace.steps.push_back({*idx, -e, reduce(Word(std::move(conj)))});
        placed = true;
      }
      if (placed) break;
    }
    if (!placed) throw Error("relator " + to_string(rel) + " does not rotate onto " + to_string(rw));
    suffix.insert(suffix.begin(), blk.to.begin(), blk.to.end());
  }
  return trace;
}

std::optional<std::size_t> brute_force_area(const GroupPresentation& p, const Word& w, std::size_t max_len,
                                            std::size_t max_area) {
  if (max_len > 12) throw Error("brute_force_area is limited to words of length 12");
  Word start = reduce(w);
  if (start.empty()) return 0;
  if (start.size() > max_len) return std::nullopt;

  struct Move {
    std::vector<Sym> piece, replacement;
  };
  std::vector<Move> moves;
  {
    std::set<std::pair<std::vector<Sym>, std::vector<Sym>>> seen;
    for (const auto& rel : p.relators) {
      if (rel.word.size() > 2 * max_len) continue;
      for (int e : {1, -1}) {
        const std::vector<Sym> re = e == 1 ? rel.word.vec() : invert(rel.word).vec();
        for (std::size_t k = 0; k < re.size(); ++k) {
          auto rho = rotate_left(re, k);
          for (std::size_t j = 0; j <= rho.size(); ++j) {
            std::vector<Sym> piece(rho.begin(), rho.begin() + static_cast<long>(j));
            Word rest = invert(Word(std::vector<Sym>(rho.begin() + static_cast<long>(j), rho.end())));
            if (seen.emplace(piece, rest.vec()).second) moves.push_back({std::move(piece), rest.vec()});
          }
        }
      }
    }
  }

  std::unordered_set<Word, WordHash> visited{start};
  std::vector<Word> frontier{start};
  for (std::size_t depth = 1; depth <= max_area && !frontier.empty(); ++depth) {
    std::vector<Word> next;
    for (const Word& cur : frontier) {
      const auto& v = cur.vec();
      for (const Move& mv : moves) {
        if (mv.piece.size() > v.size()) continue;
        for (std::size_t i = 0; i + mv.piece.size() <= v.size(); ++i) {
          if (!std::equal(mv.piece.begin(), mv.piece.end(), v.begin() + static_cast<long>(i))) continue;
          std::span<const Sym> all(v);
          Word nw = reduce_product({all.subspan(0, i), mv.replacement, all.subspan(i + mv.piece.size())});
          if (nw.size() > max_len) continue;
          if (nw.empty()) return depth;
          if (visited.insert(nw).second) next.push_back(std::move(nw));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// ---- S(M)-shaped words -------------------------------------------------------

namespace {

LetterId st(const std::string& name) { return intern(Letter{name, LetterKind::state, std::nullopt, {}}); }

std::string idx(const std::string& base, std::size_t i) { return base + "(" + std::to_string(i) + ")"; }

const char* const kMiddle[] = {"p", "q", "r", "s", "t", "u", "pbar", "qbar", "rbar", "sbar", "tbar", "ubar"};

}  // namespace

SigmaShape sigma_shape(std::vector<Alphabet> tapes, std::vector<std::string> states) {
  const std::size_t k = tapes.size();
  if (k == 0) throw Error("S(M) shape needs at least one tape");
  if (states.empty()) throw Error("S(M) shape needs at least one state");
  for (const auto& q : states)
    if (q.empty() || q.find_first_of(" \t.@^()") != std::string::npos) throw Error("unusable state name '" + q + "'");
  auto specials = default_specials();
  const LetterId alpha = specials[0], omega = specials[1], delta = specials[2];

  std::vector<Alphabet> q, y;
  auto part = [&](std::vector<LetterId> letters) { q.emplace_back(std::move(letters)); };
  auto sector = [&](std::vector<LetterId> letters) { y.emplace_back(std::move(letters)); };

  part({st("E(0)")});
  sector({alpha});
  part({st("x(0)")});
  sector({alpha});
  part({st("F(0)")});
  sector({});
  for (std::size_t i = 1; i <= k; ++i) {
    part({st(idx("E", i))});
    sector(tapes[i - 1].letters());
    part({st(idx("x", i))});
    sector(tapes[i - 1].letters());
    std::vector<LetterId> f, fp;
    for (const auto& s : states) {
      f.push_back(st(idx("F_" + s, i)));
      fp.push_back(st(idx("F'_" + s, i)));
    }
    part(f);
    sector({});
    part({st(idx("E'", i))});
    sector({});
    for (const char* m : kMiddle) {
      part({st(idx(m, i))});
      sector({delta});
    }
    part(fp);
    sector({});
  }
  part({st(idx("E'", k + 1))});
  sector({omega});
  part({st(idx("x'", k + 1))});
  sector({omega});
  part({st(idx("F'", k + 1))});

  Hardware h(std::move(y), std::move(q));
  return SigmaShape{k, std::move(tapes), std::move(states), std::move(h), alpha, omega, delta};
}

AdmissibleWord sigma_encode(const SigmaShape& shape, const std::vector<TapeConfig>& config, std::size_t n) {
  const std::size_t k = shape.k;
  if (config.size() != k)
    throw AlphabetMismatch("configuration has " + std::to_string(config.size()) + " tapes, shape has " + std::to_string(k));
  std::vector<LetterId> states;
  std::vector<Word> sectors;
  auto part = [&](const std::string& name) { states.push_back(st(name)); };

  part("E(0)");
  sectors.push_back(power(pos(shape.alpha), static_cast<long>(n)));
  part("x(0)");
  sectors.emplace_back();
  part("F(0)");
  sectors.emplace_back();
  for (std::size_t i = 1; i <= k; ++i) {
    const TapeConfig& c = config[i - 1];
    if (std::find(shape.states.begin(), shape.states.end(), c.state) == shape.states.end())
      throw AlphabetMismatch("'" + c.state + "' is not a state of the shape");
    for (Sym s : c.v)
      if (!shape.tapes[i - 1].contains(letter_of(s)))
        throw AlphabetMismatch("'" + display(s) + "' is not in tape alphabet " + std::to_string(i));
    Word v = reduce(c.v);
    long degree = algebraic_degree_sum(v);

    part(idx("E", i));
    sectors.push_back(v);
    part(idx("x", i));
    sectors.emplace_back();
    part(idx("F_" + c.state, i));
    sectors.emplace_back();
    part(idx("E'", i));
    sectors.emplace_back();
    for (const char* m : kMiddle) {
      part(idx(m, i));
      if (std::string(m) == "p")
        sectors.push_back(power(degree >= 0 ? pos(shape.delta) : neg(shape.delta), degree >= 0 ? degree : -degree));
      else
        sectors.emplace_back();
    }
    part(idx("F'_" + c.state, i));
    sectors.emplace_back();
  }
  part(idx("E'", k + 1));
  sectors.emplace_back();
  part(idx("x'", k + 1));
  sectors.push_back(power(pos(shape.omega), static_cast<long>(n)));
  part(idx("F'", k + 1));

  AdmissibleWord w(std::move(states), std::move(sectors));
  return parse_admissible(shape.hardware, w.flat());
}

// ---- Turing machine commands -------------------------------------------------

namespace {

std::vector<std::string> tokens(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool is_f(const std::string& t) { return t.rfind("F_", 0) == 0 && t.size() > 2; }
bool is_e(const std::string& t) { return t.rfind("E_", 0) == 0 && t.size() > 2; }
bool is_tape(const std::string& t) { return !is_f(t) && !is_e(t); }

}  // namespace

std::vector<TMPiece> parse_tm_command(std::string_view text) {
  std::string body(text);
  auto lo = body.find_first_not_of(" \t\n");
  auto hi = body.find_last_not_of(" \t\n");
  if (lo == std::string::npos) throw UnrecognizedShape("empty command");
  body = body.substr(lo, hi - lo + 1);
  if (body.front() == '{') {
    if (body.back() != '}') throw UnrecognizedShape("unbalanced braces in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<TMPiece> out;
  std::istringstream in(body);
  for (std::string piece; std::getline(in, piece, ',');) {
    auto arrow = piece.find("->");
    if (arrow == std::string::npos) throw UnrecognizedShape("piece '" + piece + "' has no '->'");
    TMPiece p{tokens(std::string_view(piece).substr(0, arrow)), tokens(std::string_view(piece).substr(arrow + 2))};
    if (p.from.empty() || p.to.empty()) throw UnrecognizedShape("piece '" + piece + "' has an empty side");
    out.push_back(std::move(p));
  }
  if (out.empty()) throw UnrecognizedShape("empty command");
  return out;
}

TMCommandForm classify_tm_command(const std::vector<TMPiece>& cmd) {
  auto plain = [](const TMPiece& p) { return p.from.size() == 1 && p.to.size() == 1 && is_f(p.from[0]) && is_f(p.to[0]); };
  std::optional<TMCommandForm> found;
  for (std::size_t i = 0; i < cmd.size(); ++i) {
    const TMPiece& p = cmd[i];
    if (plain(p)) continue;
    TMCommandForm f;
    f.piece = i;
    if (p.from.size() == 2 && p.to.size() == 1 && is_tape(p.from[0]) && is_f(p.from[1]) && is_f(p.to[0])) {
      f.form = 1;
    } else if (p.from.size() == 1 && p.to.size() == 2 && is_f(p.from[0]) && is_tape(p.to[0]) && is_f(p.to[1])) {
      f.form = 1;
      f.polarity = Polarity::negative;
    } else if (p.from.size() == 2 && p.to.size() == 2 && is_e(p.from[0]) && p.from[0] == p.to[0] && is_f(p.from[1]) &&
               is_f(p.to[1])) {
      f.form = 2;
    } else {
      throw UnrecognizedShape("piece " + std::to_string(i + 1) + " matches neither command form");
    }
    if (found) throw UnrecognizedShape("more than one non-plain piece");
    found = f;
  }
  if (!found) throw UnrecognizedShape("command has only F -> F pieces");
  return *found;
}

}  // namespace smw
