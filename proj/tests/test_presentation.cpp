#include <catch_amalgamated.hpp>

#include <sstream>

#include "smw/adding.hpp"
#include "smw/presentation.hpp"
#include "smw/toy.hpp"
#include "support.hpp"

using namespace smw;

namespace {

GroupPresentation commutator_presentation(LetterId a, LetterId b) {
  GroupPresentation p;
  p.generators = {a, b};
  p.relators.push_back({Word{pos(a), pos(b), neg(a), neg(b)}, RelatorTag::auxiliary, "c"});
  p.index();
  return p;
}

std::vector<Word> short_words(const std::vector<LetterId>& letters, std::size_t max_len) {
  std::vector<Word> out{Word{}}, layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (LetterId l : letters)
        for (Sym s : {pos(l), neg(l)}) {
          if (!w.empty() && w.vec().back() == -s) continue;
          auto v = w.vec();
          v.push_back(s);
          next.emplace_back(v);
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("relator counts on a one-rule machine") {
  Machine m = chain_machine(2, 1, 1);
  auto w0 = parse_admissible(m.hardware(), "k1 k2");
  auto p = generate_presentation(m, {1, w0});
  CHECK(p.count(RelatorTag::auxiliary) == 1);
  CHECK(p.count(RelatorTag::hub) == 1);
  CHECK(p.count(RelatorTag::fixing) == 0);
  // k1, k2, a, kappa1, kappa2, theta
  CHECK(p.generators.size() == 6);
}

TEST_CASE("fixing relators for untouched parts") {
  Machine base = two_letter_machine();
  const Hardware& h = base.hardware();
  SRule lone{"lone", {parse_substitution(h, "q1", "q1 a")}, {}, {}};
  Machine m(h, {base.rule(0), base.rule(1), base.rule(2), lone});
  auto p = generate_presentation(m, {1, parse_admissible(h, "q1 q2")});
  // lone leaves part 2 ({q2}) untouched: one fixing relator
  CHECK(p.count(RelatorTag::fixing) == 1);
  CHECK(p.count(RelatorTag::auxiliary) == 4 * 2);
  for (const auto& r : p.relators) {
    CHECK(is_reduced(r.word));
    CHECK(cyclic_reduce(r.word) == r.word);
    CHECK(least_rotation(r.word) == r.word);
  }
  auto with = generate_presentation(m, {1, parse_admissible(h, "q1 q2")}, default_specials());
  CHECK(with.count(RelatorTag::auxiliary) == 4 * 5);

  std::ostringstream out;
  write_presentation(out, p);
  CHECK(out.str().rfind("! generators: ", 0) == 0);
  CHECK(out.str().find("\n! tags: transition") != std::string::npos);
}

TEST_CASE("find ignores rotation and inversion") {
  Machine m = chain_machine(2, 2, 1);
  auto p = generate_presentation(m, {1, parse_admissible(m.hardware(), "k1 k2")});
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const Word& r = p.relators[i].word;
    std::vector<Sym> rot(r.begin() + 1, r.end());
    rot.push_back(r[0]);
    CHECK(p.find(Word(rot)) == i);
    CHECK(p.find(invert(r)) == i);
  }
}

TEST_CASE("hub words") {
  LetterId a = intern("a", LetterKind::tape);
  Sym k1 = pos(kappa(1)), k2 = pos(kappa(2));
  CHECK(hub_word(Word{}, 1) == Word{k1, k2, -k1, -k2});
  CHECK(hub_word(Word{pos(a)}, 1) == Word{neg(a), k1, pos(a), k2, neg(a), -k1, pos(a), -k2});
  std::mt19937_64 rng(smw::testing::kSeed);
  std::vector<LetterId> letters{a, intern("b", LetterKind::tape)};
  for (std::size_t n = 1; n <= 3; ++n)
    for (int i = 0; i < 50; ++i) {
      Word u = reduce(smw::testing::random_word(rng, letters, 8));
      CHECK(hub_word_unreduced(u, n).size() == 4 * n * (u.size() + 1));
    }
  CHECK_THROWS_AS(hub_word(Word{k1}, 1), KappaCollision);
}

TEST_CASE("verify_trace basics") {
  LetterId a = intern("a", LetterKind::tape), b = intern("b", LetterKind::tape);
  GroupPresentation p;
  p.generators = {a, b};
  p.relators.push_back({parse_word("b^-1 a^-1 b a"), RelatorTag::auxiliary, "c"});
  p.index();
  CHECK(verify_trace(p, {parse_word("a b"), {{0, 1, Word{}}}, parse_word("b a")}));
  CHECK_FALSE(verify_trace(p, {parse_word("a b"), {{0, -1, Word{}}}, parse_word("b a")}));
  CHECK(verify_trace(p, {Word{pos(a)}, {}, Word{pos(a), pos(b), neg(b)}}));
  CHECK_FALSE(verify_trace(p, {Word{pos(a)}, {}, Word{pos(b)}}));
  CHECK_THROWS_AS(verify_trace(p, {Word{}, {{5, 1, Word{}}}, Word{}}), IndexOutOfRange);
}

TEST_CASE("forward-built traces verify and corruptions fail") {
  Machine m = chain_machine(3, 3, 2);
  auto p = generate_presentation(m, {1, parse_admissible(m.hardware(), "k1 k2 k3")});
  std::vector<LetterId> gens = p.generators;
  std::mt19937_64 rng(smw::testing::kSeed + 3);
  std::uniform_int_distribution<std::size_t> rel(0, p.relators.size() - 1), steps(0, 5), gen(0, gens.size() - 1);
  for (int i = 0; i < 300; ++i) {
    RelatorTrace t;
    t.start = reduce(smw::testing::random_word(rng, gens, 8));
    Word acc = t.start;
    for (std::size_t k = steps(rng); k > 0; --k) {
      TraceStep s{rel(rng), rng() % 2 ? 1 : -1, reduce(smw::testing::random_word(rng, gens, 5))};
      const Word& r = p.relators[s.relator].word;
      acc = reduce_product({acc.symbols(), invert(s.conjugator).symbols(), (s.exponent == 1 ? r : invert(r)).symbols(),
                            s.conjugator.symbols()});
      t.steps.push_back(s);
    }
    t.end = acc;
    REQUIRE(verify_trace(p, t));
    if (t.end.empty()) continue;
    std::vector<Sym> bad = t.end.vec();
    std::size_t at = rng() % bad.size();
    LetterId other = gens[gen(rng)];
    bad[at] = bad[at] == pos(other) ? neg(other) : pos(other);
    t.end = Word(bad);
    REQUIRE_FALSE(verify_trace(p, t));
  }
}

TEST_CASE("rule applications have verifying traces") {
  auto check_machine = [](const Machine& m, const std::vector<AdmissibleWord>& words) {
    auto p = generate_presentation(m, {1, words.front()});
    std::size_t count = 0;
    for (const auto& w : words)
      for (std::size_t i = 0; i < m.rules().size(); ++i) {
        if (!applicable(m.rule(i), w)) continue;
        auto t = rule_application_trace(p, m, i, w);
        INFO(m.rule(i).display_name() << " on " << to_string(w));
        REQUIRE(t.end == apply_rule(m.rule(i), w).flat());
        REQUIRE(verify_trace(p, t));
        ++count;
      }
    return count;
  };

  Machine two = two_letter_machine();
  std::vector<AdmissibleWord> words;
  for (const auto& u : short_words(two.hardware().tape(0).letters(), 3))
    for (LetterId q : two.hardware().state(0).letters())
      words.emplace_back(std::vector<LetterId>{q, *find_letter("q2")}, std::vector<Word>{u});
  CHECK(check_machine(two, words) > 0);

  auto z = build_adding({"a"});
  const Hardware& h = z.machine.hardware();
  words.clear();
  for (const auto& u : short_words(h.tape(0).letters(), 2))
    for (const auto& v : short_words(h.tape(1).letters(), 2))
      for (LetterId p : h.state(1).letters()) words.emplace_back(std::vector<LetterId>{z.letters.left, p, z.letters.right}, std::vector<Word>{u, v});
  CHECK(check_machine(z.machine, words) > 0);

  auto p = generate_presentation(two, {1, parse_admissible(two.hardware(), "q1 q2")});
  CHECK_THROWS_AS(rule_application_trace(p, two, 2, parse_admissible(two.hardware(), "q1 q2")), NotApplicable);
}

TEST_CASE("brute force area") {
  LetterId a = intern("a", LetterKind::tape), b = intern("b", LetterKind::tape);
  auto p = commutator_presentation(a, b);
  CHECK(brute_force_area(p, Word{}, 8, 4) == 0);
  CHECK(brute_force_area(p, Word{pos(a), pos(b), neg(a), neg(b)}, 8, 4) == 1);
  CHECK(brute_force_area(p, parse_word("a a b a^-1 a^-1 b^-1"), 8, 4) == 2);
  CHECK_FALSE(brute_force_area(p, Word{pos(a)}, 6, 3).has_value());
  CHECK_THROWS(brute_force_area(p, Word{}, 13, 1));

  // subadditivity where all three are defined
  std::vector<Word> samples{parse_word("a b a^-1 b^-1"), parse_word("b a b^-1 a^-1"), parse_word("a a b a^-1 a^-1 b^-1"),
                            parse_word("a b b a^-1 b^-1 b^-1")};
  for (const auto& x : samples)
    for (const auto& y : samples) {
      auto ax = brute_force_area(p, x, 10, 4), ay = brute_force_area(p, y, 10, 4);
      auto axy = brute_force_area(p, concat(x, y), 10, 6);
      if (ax && ay && axy) CHECK(*axy <= *ax + *ay);
    }

  Machine m = chain_machine(2, 1, 1);
  auto w0 = parse_admissible(m.hardware(), "k1 k2");
  auto hub = generate_presentation(m, {1, w0});
  CHECK(brute_force_area(hub, hub_word(w0.flat(), 1), 12, 2) == 1);
}

TEST_CASE("sigma encoding") {
  LetterId a = intern("a", LetterKind::tape);
  auto shape = sigma_shape({Alphabet({a})}, {"q"});
  CHECK(shape.hardware.parts() == 23);
  auto w = sigma_encode(shape, {{Word{pos(a)}, "q"}}, 2);
  CHECK(parse_admissible(shape.hardware, w.flat()) == w);
  std::size_t deltas = 0;
  for (Sym s : w.flat()) deltas += letter_of(s) == shape.delta;
  CHECK(deltas == 1);
  auto flat0 = sigma_encode(shape, {{Word{pos(a), neg(a)}, "q"}}, 2).flat();
  CHECK(std::none_of(flat0.begin(), flat0.end(), [&](Sym s) { return letter_of(s) == shape.delta; }));
  CHECK_THROWS_AS(sigma_encode(shape, {{Word{pos(intern("b", LetterKind::tape))}, "q"}}, 1), AlphabetMismatch);
  CHECK(sigma_shape({Alphabet({a}), Alphabet({a})}, {"q"}).hardware.parts() == 17 * 2 + 6);
}

TEST_CASE("Turing command forms") {
  auto one = classify_tm_command(parse_tm_command("{a F_q1 -> F_q2, F_r -> F_r}"));
  CHECK(one.form == 1);
  CHECK(one.polarity == Polarity::positive);
  CHECK(one.piece == 0);
  auto two = classify_tm_command(parse_tm_command("{E_1 F_q1 -> E_1 F_q2}"));
  CHECK(two.form == 2);
  auto back = classify_tm_command(parse_tm_command("{F_q2 -> a F_q1}"));
  CHECK(back.form == 1);
  CHECK(back.polarity == Polarity::negative);
  CHECK_THROWS_AS(classify_tm_command(parse_tm_command("{F_q1 -> F_q2}")), UnrecognizedShape);
  CHECK_THROWS_AS(classify_tm_command(parse_tm_command("{a b F_q1 -> F_q2}")), UnrecognizedShape);
}
