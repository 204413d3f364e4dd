#include "smw/composition.hpp"

#include <algorithm>

#include "smw/adding.hpp"

namespace smw {

const ComposedFamily& ComposedMachine::family(std::size_t theta) const {
  for (const auto& f : families)
    if (f.theta == theta) return f;
  throw IndexOutOfRange("no composed family for rule " + std::to_string(theta));
}

namespace {

LetterId copy_of(LetterId id, int copy) {
  Letter l = letter(id);
  l.name += std::to_string(copy);
  return intern(l);
}

Substitution single(std::size_t part, Word left, LetterId from, Word right, Word left2, LetterId to, Word right2) {
  Substitution s;
  s.first_part = part;
  s.from = {std::move(left), {from}, {}, std::move(right)};
  s.to = {std::move(left2), {to}, {}, std::move(right2)};
  return s;
}

Substitution fixed(std::size_t part, LetterId q) { return single(part, {}, q, {}, {}, q, {}); }

void sort_parts(SRule& r) {
  std::sort(r.substitutions.begin(), r.substitutions.end(),
            [](const Substitution& a, const Substitution& b) { return a.first_part < b.first_part; });
}

void check_shape(const Machine& s) {
  const std::size_t n = s.hardware().parts();
  if (n < 2) throw ShapeError("composition needs a machine with at least two state parts");
  for (std::size_t i = 0; i < s.declared_count(); ++i) {
    const auto& r = s.rule(i);
    if (r.name.empty() || r.name.find_first_of(" \t.@^") != std::string::npos)
      throw ShapeError("rule name '" + r.name + "' cannot be used in a copy tag");
    if (r.substitutions.size() != n)
      throw ShapeError(r.name + ": expected one substitution per part, got " + std::to_string(r.substitutions.size()));
    for (std::size_t k = 0; k < n; ++k) {
      const auto& sub = r.substitutions[k];
      if (sub.first_part != k || sub.from.states.size() != 1)
        throw ShapeError(r.name + ": substitution " + std::to_string(k + 1) + " is not of the form v k u -> v' k' u'");
    }
  }
}

}  // namespace

ComposedMachine compose(const Machine& s) {
  check_shape(s);
  const Hardware& h = s.hardware();
  const std::size_t n = h.parts(), sectors = h.sectors(), thetas = s.declared_count();

  std::vector<std::map<LetterId, LetterId>> c0(sectors), c1(sectors);
  std::vector<LetterId> plain(sectors);
  std::vector<std::vector<std::array<LetterId, 3>>> dec(thetas, std::vector<std::array<LetterId, 3>>(sectors));
  std::vector<Alphabet> tape, state;
  try {
    for (std::size_t j = 0; j < sectors; ++j) {
      std::vector<LetterId> zero, both;
      for (LetterId id : h.tape(j).letters()) {
        c0[j][id] = copy_of(id, 0);
        c1[j][id] = copy_of(id, 1);
        zero.push_back(c0[j][id]);
        both.push_back(c0[j][id]);
        both.push_back(c1[j][id]);
      }
      tape.emplace_back(both);
      tape.emplace_back(zero);
    }
    for (std::size_t j = 0; j < sectors; ++j) {
      std::string p = "p" + std::to_string(j + 1);
      plain[j] = intern(Letter{p, LetterKind::state, std::nullopt, {}});
      for (std::size_t t = 0; t < thetas; ++t)
        for (int k = 0; k < 3; ++k)
          dec[t][j][k] = intern(Letter{p, LetterKind::state, std::nullopt, s.rule(t).name + "." + std::to_string(k + 1)});
    }
    for (std::size_t k = 0; k < n; ++k) {
      state.push_back(h.state(k));
      if (k + 1 < n) {
        std::vector<LetterId> ps{plain[k]};
        for (std::size_t t = 0; t < thetas; ++t) ps.insert(ps.end(), dec[t][k].begin(), dec[t][k].end());
        state.emplace_back(ps);
      }
    }
  } catch (const LetterClash& e) {
    throw ShapeError(std::string("composed letters clash: ") + e.what());
  }
  std::optional<Hardware> composed;
  try {
    composed.emplace(std::move(tape), std::move(state));
  } catch (const HardwareError& e) {
    throw ShapeError(std::string("composed hardware: ") + e.what());
  }

  auto map_word = [&](const Word& w, std::size_t sector, const std::string& rule) {
    std::vector<Sym> out;
    for (Sym x : w) {
      auto it = c0[sector].find(letter_of(x));
      if (it == c0[sector].end()) throw ShapeError(rule + ": '" + display(x) + "' is not in Y_" + std::to_string(sector + 1));
      out.push_back(x < 0 ? neg(it->second) : pos(it->second));
    }
    return Word(std::move(out));
  };
  auto zero_alphabet = [&](std::size_t sector, const Alphabet& a) {
    std::vector<LetterId> out;
    for (LetterId id : a.letters()) out.push_back(c0[sector].at(id));
    return Alphabet(std::move(out));
  };

  std::vector<SRule> modified, copies, transitions;
  std::vector<ComposedFamily> families(thetas);
  for (std::size_t t = 0; t < thetas; ++t) {
    const SRule& theta = s.rule(t);
    SRule bar{"bar(" + theta.name + ")", {}, {}, Polarity::positive};
    for (std::size_t k = 0; k < n; ++k) {
      const auto& sub = theta.substitutions[k];
      if (k > 0)
        bar.substitutions.push_back(single(2 * k - 1, map_word(sub.from.left, k - 1, theta.name), plain[k - 1], {},
                                           map_word(sub.to.left, k - 1, theta.name), dec[t][k - 1][0], {}));
      Word u = k < sectors ? map_word(sub.from.right, k, theta.name) : Word{};
      Word u2 = k < sectors ? map_word(sub.to.right, k, theta.name) : Word{};
      bar.substitutions.push_back(single(2 * k, {}, sub.from.states[0], std::move(u), {}, sub.to.states[0], std::move(u2)));
    }
    for (std::size_t j = 0; j < sectors; ++j) {
      auto d = theta.domain.find(j);
      bar.domain[2 * j] = zero_alphabet(j, d == theta.domain.end() ? h.tape(j) : d->second);
      bar.domain[2 * j + 1] = Alphabet{};
    }
    families[t].theta = t;
    modified.push_back(std::move(bar));

    auto k_after = [&](std::size_t k) { return theta.substitutions[k].to.states[0]; };
    families[t].copies.resize(sectors);
    for (std::size_t i = 0; i < sectors; ++i) {
      AddingLetters al;
      for (LetterId id : h.tape(i).letters()) {
        al.base.push_back(letter(id).name);
        al.copy0.push_back(c0[i].at(id));
        al.copy1.push_back(c1[i].at(id));
      }
      al.left = k_after(i);
      al.right = k_after(i + 1);
      for (int j = 0; j < 3; ++j) al.p[j] = dec[t][i][j];
      for (SRule z : adding_rules(al)) {
        z.name += "[" + std::to_string(i + 1) + "," + theta.name + "]";
        for (auto& sub : z.substitutions) sub.first_part += 2 * i;
        std::map<std::size_t, Alphabet> domain;
        for (auto& [sector, a] : z.domain) domain[sector + 2 * i] = std::move(a);
        for (std::size_t j = 0; j < sectors; ++j) {
          if (j == i) continue;
          domain[2 * j] = zero_alphabet(j, h.tape(j));
          if (j < i) {
            z.substitutions.push_back(fixed(2 * j, k_after(j)));
            z.substitutions.push_back(fixed(2 * j + 1, dec[t][j][2]));
          } else {
            z.substitutions.push_back(fixed(2 * j + 1, dec[t][j][0]));
            z.substitutions.push_back(fixed(2 * j + 2, k_after(j + 1)));
          }
        }
        z.domain = std::move(domain);
        sort_parts(z);
        copies.push_back(std::move(z));
        families[t].copies[i].push_back(copies.size() - 1);
      }
    }

    SRule tr{"trans(" + theta.name + ")", {}, {}, Polarity::positive};
    for (std::size_t i = 0; i < sectors; ++i) {
      tr.substitutions.push_back(fixed(2 * i, k_after(i)));
      tr.substitutions.push_back(single(2 * i + 1, {}, dec[t][i][2], {}, {}, plain[i], {}));
    }
    transitions.push_back(std::move(tr));
  }

  // Declared order: all theta-bar, then all copies, then all transition rules.
  std::vector<SRule> all;
  all.insert(all.end(), modified.begin(), modified.end());
  all.insert(all.end(), copies.begin(), copies.end());
  all.insert(all.end(), transitions.begin(), transitions.end());
  for (std::size_t t = 0; t < thetas; ++t) {
    families[t].modified = t;
    for (auto& per_sector : families[t].copies)
      for (auto& idx : per_sector) idx += thetas;
    families[t].transition = thetas + copies.size() + t;
  }

  Machine m(std::move(*composed), std::move(all));
  m.notes = {
      "parts K_1, P_1, ..., P_{N-1}, K_N; sectors Ybar_{2i-1} = Y_{i,0} u Y_{i,1}, Ybar_{2i} = Y_{i,0}",
      "P_i holds p_i and p_i(theta,1), p_i(theta,2), p_i(theta,3) for every positive theta",
      "copied rules restrict every other sector s to its own copy Y_{s,0}",
      "sweep-rule domains of the adding-machine copies are full sectors by convention",
  };
  return ComposedMachine{s, std::move(m), std::move(families), std::move(c0), std::move(c1), std::move(plain), std::move(dec)};
}

std::size_t expected_composed_rules(const Machine& s) {
  const std::size_t theta = s.declared_count();
  std::size_t total = 2 * theta;
  for (const auto& y : s.hardware().tape_alphabets()) total += theta * (4 * y.size() + 2);
  return total;
}

CompositionCounts count_rules(const ComposedMachine& cm) {
  CompositionCounts c;
  c.theta_plus = cm.source.declared_count();
  c.copies_per_sector.assign(cm.plain.size(), 0);
  for (const auto& f : cm.families) {
    ++c.modified;
    ++c.transition;
    for (std::size_t i = 0; i < f.copies.size(); ++i) c.copies_per_sector[i] += f.copies[i].size();
  }
  c.total = cm.machine.declared_count();
  c.expected = expected_composed_rules(cm.source);
  for (std::size_t i = 0; i < cm.plain.size(); ++i) c.p_letters.push_back(cm.machine.hardware().state(2 * i + 1).size());
  return c;
}

AdmissibleWord lift_word(const ComposedMachine& cm, const AdmissibleWord& w) {
  const std::size_t n = cm.source_parts();
  if (w.states().size() != n) throw NotAdmissible(0, "word has " + std::to_string(w.states().size()) + " parts, expected " + std::to_string(n));
  std::vector<LetterId> states;
  std::vector<Word> sectors;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < n; ++k) {
    states.push_back(w.state(k));
    ++offset;
    if (k + 1 == n) break;
    std::vector<Sym> copied;
    for (Sym x : w.sector(k)) {
      auto it = cm.copy0[k].find(letter_of(x));
      if (it == cm.copy0[k].end()) throw NotAdmissible(offset, "tape letter '" + display(x) + "' outside Y_" + std::to_string(k + 1));
      copied.push_back(x < 0 ? neg(it->second) : pos(it->second));
      ++offset;
    }
    sectors.emplace_back(std::move(copied));
    states.push_back(cm.plain[k]);
    sectors.emplace_back();
  }
  return AdmissibleWord(std::move(states), std::move(sectors));
}

AdmissibleWord project(const ComposedMachine& cm, const AdmissibleWord& w) {
  const std::size_t n = cm.source_parts();
  if (w.states().size() != 2 * n - 1) throw Error("word does not have the composed shape");
  std::vector<LetterId> states;
  std::vector<Word> sectors;
  for (std::size_t k = 0; k < n; ++k) {
    states.push_back(w.state(2 * k));
    if (k + 1 == n) break;
    LetterId p = w.state(2 * k + 1);
    if (p != cm.plain[k]) throw MidSimulation("decorated letter " + display(p) + " in " + to_string(w));
    if (!w.sector(2 * k + 1).empty())
      throw MidSimulation("sector right of " + display(p) + " is not empty in " + to_string(w));
    std::vector<Sym> back;
    for (Sym x : w.sector(2 * k)) {
      LetterId id = letter_of(x);
      auto hit = std::find_if(cm.copy0[k].begin(), cm.copy0[k].end(), [id](const auto& kv) { return kv.second == id; });
      if (hit == cm.copy0[k].end()) {
        auto leak = std::find_if(cm.copy1[k].begin(), cm.copy1[k].end(), [id](const auto& kv) { return kv.second == id; });
        if (leak != cm.copy1[k].end()) throw CopyLeak("letter " + display(x) + " from Y_{" + std::to_string(k + 1) + ",1}");
        throw Error("letter " + display(x) + " is not a copy of a Y_" + std::to_string(k + 1) + " letter");
      }
      back.push_back(x < 0 ? neg(hit->first) : pos(hit->first));
    }
    sectors.emplace_back(std::move(back));
  }
  return AdmissibleWord(std::move(states), std::move(sectors));
}

namespace {

void append(Computation& into, const Machine& m, std::size_t rule) {
  const auto& w = into.words.back();
  into.steps.push_back({rule, touch_position(m.rule(rule), w)});
  into.words.push_back(apply_rule(m.rule(rule), w));
}

}  // namespace

SimulatedStep simulate_step(const ComposedMachine& cm, std::size_t theta, const AdmissibleWord& lifted) {
  const auto& fam = cm.family(theta);
  AdmissibleWord before = project(cm, lifted);
  if (!applicable(cm.source.rule(theta), before))
    throw NotApplicable(cm.source.rule(theta).name + " is not applicable to " + to_string(before));

  SimulatedStep out;
  out.computation.words.push_back(lifted);
  append(out.computation, cm.machine, fam.modified);

  for (std::size_t i = 0; i < fam.copies.size(); ++i) {
    const AdmissibleWord& start = out.computation.words.back();
    const LetterId done = cm.decorated[theta][i][2];
    const std::size_t part = 2 * i + 1;
    WordPredicate target = [done, part](const AdmissibleWord& w) { return w.state(part) == done && w.sector(part).empty(); };
    std::uint64_t budget = default_budget(start.sector(2 * i).size());

    auto r = run(cm.machine, start, Deterministic{fam.copies[i], true}, budget, target);
    if (r.halt != Halt::target_reached) {
      SearchTarget bfs;
      bfs.max_length = start.length();
      r = run(cm.machine, start, bfs, budget, target);
      if (r.halt != Halt::target_reached)
        throw NotFound("Z_" + std::to_string(i + 1) + "(" + cm.source.rule(theta).name + ") did not finish from " +
                       to_string(start) + " (" + std::string(to_string(r.halt)) + ")");
    }
    out.sector_steps.push_back(r.computation.length());
    out.computation.steps.insert(out.computation.steps.end(), r.computation.steps.begin(), r.computation.steps.end());
    out.computation.words.insert(out.computation.words.end(), r.computation.words.begin() + 1, r.computation.words.end());
  }

  append(out.computation, cm.machine, fam.transition);
  return out;
}

}  // namespace smw
