#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "smw/adding.hpp"
#include "smw/analysis.hpp"
#include "support.hpp"

using namespace smw;

namespace {

// Definition 1 read literally, by scanning every occurrence of every base.
bool scan_covered(const BaseSet& b, const BaseWord& w) {
  if (w.empty() || w.front() != w.back()) return false;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    bool inside = false;
    for (const auto& base : b)
      for (std::size_t s = 0; !inside && s + base.size() <= w.size(); ++s)
        if (s <= pos && pos < s + base.size() && std::equal(base.begin(), base.end(), w.begin() + static_cast<long>(s)))
          inside = true;
    if (!inside) return false;
  }
  return true;
}

BaseWord slice(const BaseWord& w, std::size_t i, std::size_t j) {
  return BaseWord(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j) + 1);
}

std::vector<std::pair<std::size_t, std::size_t>> covered_subwords(const BaseSet& b, const BaseWord& w) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i; j < w.size(); ++j)
      if (scan_covered(b, slice(w, i, j))) out.emplace_back(i, j);
  return out;
}

bool scan_narrow(const BaseSet& b, const BaseWord& w) { return covered_subwords(b, w).empty(); }

bool scan_tight_prefix(const BaseSet& b, const BaseWord& w) {
  const std::size_t n = w.size();
  if (n < 2) return false;
  bool suffix = false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (w[i] == w[n - 1] && scan_covered(b, slice(w, i, n - 1))) suffix = true;
  return suffix && scan_narrow(b, slice(w, 0, n - 2));
}

bool scan_tight_whole(const BaseSet& b, const BaseWord& w) {
  const std::size_t n = w.size();
  auto all = covered_subwords(b, w);
  return all.size() == 1 && all[0].second == n - 1 && all[0].first + 1 < n;
}

std::vector<BaseWord> all_base_words(int parts, std::size_t max_len) {
  std::vector<BaseWord> out, layer{BaseWord{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<BaseWord> next;
    for (const auto& w : layer)
      for (int q = 1; q <= parts; ++q) {
        BaseWord v = w;
        v.push_back(q);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

BaseSet bases(const std::string& text) {
  BaseSet b;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) b.push_back(parse_base_word(tok));
  return b;
}

}  // namespace

TEST_CASE("base word parsing") {
  CHECK(parse_base_word("Q1Q2Q1") == BaseWord{1, 2, 1});
  CHECK(parse_base_word("Q1 Q12") == BaseWord{1, 12});
  CHECK(to_string(BaseWord{3, 1}) == "Q3Q1");
  CHECK_THROWS_AS(parse_base_word("Q0"), Error);
  CHECK_THROWS_AS(parse_base_word("X1"), Error);
}

TEST_CASE("predicate examples") {
  BaseSet b = bases("Q1Q2Q1");
  CHECK(is_covered(b, parse_base_word("Q1Q2Q1")));
  CHECK_FALSE(is_covered(bases("Q1Q2"), parse_base_word("Q1Q2")));
  CHECK(is_narrow(b, parse_base_word("Q2Q3")));
  CHECK_FALSE(is_narrow(b, parse_base_word("Q3Q1Q2Q1")));
  CHECK(is_tight(b, parse_base_word("Q3Q1Q2Q1")));
  CHECK(is_tight(b, parse_base_word("Q1Q2Q1")));
  CHECK_FALSE(is_tight(b, parse_base_word("Q3Q3")));
}

TEST_CASE("predicates match the definition scan on every short word") {
  auto words = all_base_words(3, 6);
  REQUIRE(words.size() == 1092);
  for (const char* set : {"Q1Q2Q1", "Q1Q2 Q2Q1", "Q1Q2Q1 Q2Q3Q2", "Q1 Q2Q3Q2", "Q3Q1Q3 Q1Q1", "Q1Q2Q3Q1 Q2Q2"}) {
    BaseSet b = bases(set);
    std::size_t divergent = 0;
    for (const auto& w : words) {
      INFO(set << " / " << to_string(w));
      REQUIRE(is_covered(b, w) == scan_covered(b, w));
      REQUIRE(is_narrow(b, w) == scan_narrow(b, w));
      REQUIRE(is_tight(b, w) == scan_tight_prefix(b, w));
      REQUIRE(is_tight_whole(b, w) == scan_tight_whole(b, w));
      if (is_covered(b, w)) REQUIRE_FALSE(is_narrow(b, w));
      divergent += is_tight(b, w) != is_tight_whole(b, w);
    }
    // the two readings of tightness differ on some words; both are reported
    UNSCOPED_INFO(set << ": " << divergent << " words where the readings differ");
  }
}

TEST_CASE("a-length and width") {
  auto z = build_adding({"a"});
  const Hardware& h = z.machine.hardware();
  CHECK(a_length(parse_admissible(h, "L p(1) R")) == 0);
  CHECK(a_length(parse_admissible(h, "L a0 a1^-1 p(1) a0 R")) == 3);

  Computation single{{parse_admissible(h, "L a0 p(1) R")}, {}};
  CHECK(width(single) == 1);
  CHECK(area_estimate(single, 3) == 0);
  auto one = run(z.machine, parse_admissible(h, "L p(1) R"), Deterministic{z.priority, true}, 1);
  REQUIRE(one.computation.length() == 1);
  CHECK(area_estimate(one.computation, 3) == 3);

  for (std::size_t n = 0; n <= 6; ++n) {
    auto c = canonical_run(z, power(pos(z.letters.copy0[0]), static_cast<long>(n))).computation;
    CHECK(width(c) >= n);
    CHECK(width(reversed(z.machine, c)) == width(c));
    for (const auto& w : c.words) CHECK(w.a_length() <= w.length() - h.parts());
  }
}

TEST_CASE("log prime") {
  CHECK(log_prime(1) == 1);
  CHECK(log_prime(2) == 1);
  CHECK(log_prime(8) == 3);
  CHECK(log_prime(0.5) == 1);
  CHECK_THROWS_AS(log_prime(0), NonPositive);
  CHECK_THROWS_AS(log_prime(-1), NonPositive);
}

TEST_CASE("bound arithmetic") {
  using Catch::Matchers::WithinRel;
  CHECK_THAT(bound_width_lemma2(1, 2, 2, 16), WithinRel(6.0, 1e-12));
  CHECK_THROWS_AS(bound_width_lemma2(1, 2, 2, 3), DomainError);
  CHECK_THAT(bound_area_lemma3(2, 5, 1, 3), WithinRel(40.0, 1e-12));
  CHECK_THAT(bound_area_lemma5(1, 4, 0), WithinRel(32.0, 1e-12));
  // log'16 = 4, log'log'16 = 2
  CHECK_THAT(bound_area_lemma4(1, 2, 1, 1, 16), WithinRel(2.0 * (2 + 2 + 1), 1e-12));
  CHECK_THROWS_AS(bound_area_lemma3(0, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(bound_area_lemma5(1, 0, 0), DomainError);
}

TEST_CASE("bounds are monotone") {
  std::mt19937_64 rng(smw::testing::kSeed);
  std::uniform_real_distribution<double> u(1.0, 100.0), d(0.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    double c = u(rng), w = u(rng), wt = u(rng), t = 4 + u(rng), e = u(rng), n = u(rng), h = u(rng), step = d(rng);
    REQUIRE(bound_width_lemma2(c + step, w, wt, t) >= bound_width_lemma2(c, w, wt, t));
    REQUIRE(bound_width_lemma2(c, w + step, wt, t) >= bound_width_lemma2(c, w, wt, t));
    REQUIRE(bound_width_lemma2(c, w, wt + step, t) >= bound_width_lemma2(c, w, wt, t));
    REQUIRE(bound_area_lemma3(c, t + step, w, wt) >= bound_area_lemma3(c, t, w, wt));
    REQUIRE(bound_area_lemma3(c, t, w + step, wt) >= bound_area_lemma3(c, t, w, wt));
    REQUIRE(bound_area_lemma4(c, h + step, w, wt, n) >= bound_area_lemma4(c, h, w, wt, n));
    REQUIRE(bound_area_lemma4(c, h, w + step, wt, n) >= bound_area_lemma4(c, h, w, wt, n));
    REQUIRE(bound_area_lemma5(c, n, e + step) >= bound_area_lemma5(c, n, e));
    REQUIRE(bound_area_lemma5(c + step, n, e) >= bound_area_lemma5(c, n, e));
    REQUIRE(bound_area_lemma5(c, n + step, e) >= bound_area_lemma5(c, n, e));
  }
}

TEST_CASE("measured g feeds lemma 6, the gg inequality and the intervals") {
  auto z = build_adding({"a"});
  GTable g;
  measure_g_all(z, {0, 1, 2, 5, 13}, g);

  auto v = bound_area_lemma6(1, 4, 1, 1, 0, g);
  const double m = 1.0 * static_cast<double>(g.at(g.at(0))) * 2.0;
  CHECK(v.m == Catch::Approx(m).epsilon(1e-12));
  CHECK(v.value == Catch::Approx(16 + m * m * std::log2(m)).epsilon(1e-12));
  CHECK_THROWS_AS(bound_area_lemma6(1, 4, 4, 1, 0, g), GTableMiss);

  for (std::uint64_t r : {1, 2}) {
    auto gg = check_gg_inequality(g, r);
    CHECK(gg.holds);
    CHECK(gg.window_sane);
    CHECK(gg.lhs == g.at(g.at(r - 1)) * g.at(g.at(r - 1)));
  }

  auto iv = lemcool_intervals(g, 1, 0.2);
  REQUIRE(iv.size() == 1);
  const double n1 = static_cast<double>(g.at(g.at(1)));
  CHECK(iv[0].lo == Catch::Approx(std::pow(n1, 0.55)).epsilon(1e-12));
  CHECK(iv[0].hi == Catch::Approx(std::pow(n1, 0.95)).epsilon(1e-12));
  CHECK(iv[0].lo < iv[0].hi);
  CHECK_THROWS_AS(lemcool_intervals(g, 1, 0.3), EpsilonTooLarge);
  CHECK_THROWS_AS(lemcool_intervals(g, 3, 0.2), GTableMiss);
}

TEST_CASE("P1 checks") {
  std::vector<std::pair<double, double>> iv{{2, 10}};
  CHECK(check_p1({{3, 0}, {5, 0}}, 0.5, iv).pass);
  auto bad = check_p1({{3, 0}, {5, 1000}}, 1, iv);
  CHECK_FALSE(bad.pass);
  CHECK(bad.violator == 5u);
  CHECK(check_p1({{50, 1e9}}, 1, iv).pass);  // outside every interval
  CHECK_THROWS_AS(check_p1({}, 1, iv), DomainError);
  CHECK(fit_constant({{10, 5}, {3, 1}}) == 3);
}

TEST_CASE("lemma 3 holds for adding runs with a fitted constant") {
  auto z = build_adding({"a"});
  auto point = [&](std::size_t n) {
    auto c = canonical_run(z, power(pos(z.letters.copy0[0]), static_cast<long>(n))).computation;
    double area = static_cast<double>(area_estimate(c, 3));
    double base = bound_area_lemma3(1, static_cast<double>(c.length()), static_cast<double>(c.front().a_length()),
                                    static_cast<double>(c.back().a_length()));
    return std::make_pair(area, base);
  };
  std::vector<std::pair<double, double>> calib;
  for (std::size_t n = 1; n <= 8; ++n) calib.push_back(point(n));
  double c = fit_constant(calib);
  CHECK(c > 0);
  for (std::size_t n = 1; n <= 10; ++n) {
    auto [area, base] = point(n);
    CHECK(area <= c * base * (1 + 1e-12));
  }
}

TEST_CASE("report writers") {
  std::ostringstream out;
  write_bounds_csv(out, {{"lemma5", "M=1 n=4 E=0", 32, 32.0, true}, {"x", "a,b", 1, std::nullopt, false}});
  CHECK(out.str() == "lemma,inputs,formula_value,measured_value,pass\nlemma5,M=1 n=4 E=0,32,32,true\nx,\"a,b\",1,,false\n");
}
