#include <catch_amalgamated.hpp>

#include <deque>
#include <sstream>

#include "smw/adding.hpp"
#include "support.hpp"

using namespace smw;

namespace {

struct Digit {
  std::string letter;
  int bit;
};

// A plain binary counter with a sweeping head, written without the machine:
// emits the rule names the counting run should take.
std::vector<std::string> counter_oracle(const std::vector<std::string>& u) {
  std::vector<std::string> out;
  std::vector<Digit> left;  // last element sits next to the head
  for (const auto& x : u) left.push_back({x, 0});
  std::deque<std::string> right;  // carried digits, as letters of value 0
  for (;;) {
    // p(1): carry trailing ones to the right
    while (!left.empty() && left.back().bit == 1) {
      out.push_back("r_1(" + left.back().letter + ")");
      right.push_front(left.back().letter);
      left.pop_back();
    }
    if (left.empty()) break;
    out.push_back("r_12(" + left.back().letter + ")");
    left.back().bit = 1;
    // p(2): bring the carried zeros back
    while (!right.empty()) {
      out.push_back("r_2(" + right.front() + ")");
      left.push_back({right.front(), 0});
      right.pop_front();
    }
    out.push_back("r_21");
  }
  out.push_back("r_13");
  while (!right.empty()) {
    out.push_back("r_3(" + right.front() + ")");
    right.pop_front();
  }
  return out;
}

std::vector<std::string> rule_names(const Machine& m, const Computation& c) {
  std::vector<std::string> out;
  for (const auto& s : c.steps) out.push_back(m.rule(s.rule).display_name());
  return out;
}

Word copy0_word(const std::vector<std::string>& u) {
  std::vector<Sym> out;
  for (const auto& x : u) out.push_back(pos(copy_letter(x, 0)));
  return Word(out);
}

}  // namespace

TEST_CASE("build_adding shapes and errors") {
  CHECK(build_adding({"a"}).machine.declared_count() == 6);
  CHECK(build_adding({"a", "b"}).machine.declared_count() == 10);
  CHECK(build_adding({"a", "b"}).priority.size() == 10);
  CHECK_THROWS_AS(build_adding({}), InvalidAlphabet);
  CHECK_THROWS_AS(build_adding({"a", "a"}), InvalidAlphabet);
  std::vector<std::string> many;
  for (char c = 'a'; c <= 'z'; ++c) many.emplace_back(1, c);
  CHECK_NOTHROW(build_adding(many));
  many.push_back("aa");
  CHECK_THROWS_AS(build_adding(many), InvalidAlphabet);
  CHECK_THROWS_AS(build_adding({"a b"}), InvalidAlphabet);

  auto z = build_adding({"a"});
  const Hardware& h = z.machine.hardware();
  CHECK(h.parts() == 3);
  CHECK(h.sectors() == 2);
  for (const auto& r : z.machine.rules()) CHECK_NOTHROW(check_rule(h, r));
}

TEST_CASE("canonical runs follow the binary counter") {
  auto z = build_adding({"a"});
  for (std::size_t n = 0; n <= 10; ++n) {
    std::vector<std::string> u(n, "a");
    auto r = canonical_run(z, copy0_word(u));
    auto expected = counter_oracle(u);
    INFO("n = " << n);
    CHECK_FALSE(r.used_fallback);
    REQUIRE(rule_names(z.machine, r.computation) == expected);
    CHECK(validate(z.machine, r.computation));
    // frozen from the oracle
    CHECK(r.computation.length() == 4 * (std::uint64_t{1} << n) - 3);
    CHECK(r.computation.back() == parse_admissible(z.machine.hardware(), "L " + (n ? to_string(copy0_word(u)) + " " : "") + "p(3) R"));
  }
}

TEST_CASE("g does not depend on which letters u uses") {
  auto z = build_adding({"a", "b"});
  std::mt19937_64 rng(smw::testing::kSeed);
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<std::string> mixed;
    for (std::size_t i = 0; i < n; ++i) mixed.push_back(rng() % 2 ? "a" : "b");
    auto a = canonical_run(z, copy0_word(std::vector<std::string>(n, "a")));
    auto m = canonical_run(z, copy0_word(mixed));
    CHECK(a.computation.length() == m.computation.length());
    CHECK(rule_names(z.machine, m.computation) == counter_oracle(mixed));
  }
}

TEST_CASE("measured g table") {
  auto z = build_adding({"a"});
  GTable table;
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 0; n <= 12; ++n) ns.push_back(n);
  measure_g_all(z, ns, table);
  CHECK(table.at(0) >= 1);
  CHECK(table.at(0) <= 6);
  CHECK(table.at(1) >= 2);
  CHECK(table.at(1) <= 12);
  for (std::uint64_t n = 0; n <= 12; ++n) {
    CHECK(in_lemma1_window(n, table.at(n)));
    if (n) {
      CHECK(table.at(n) > table.at(n - 1));
      double ratio = static_cast<double>(table.at(n)) / static_cast<double>(table.at(n - 1));
      CHECK(ratio >= 2.0 / 6.0);
      CHECK(ratio <= 12.0);
    }
  }
  CHECK_THROWS_AS(table.at(40), GTableMiss);
  CHECK_THROWS_AS(table.insert(3, GEntry{1, "det", "", 0}), GTableConflict);
  CHECK_NOTHROW(table.insert(3, GEntry{table.at(3), "det", "", 0}));

  std::stringstream csv;
  write_g_table(csv, table);
  GTable back = read_g_table(csv);
  for (std::uint64_t n = 0; n <= 12; ++n) CHECK(back.at(n) == table.at(n));
}

TEST_CASE("lemma 1 reports") {
  auto z = build_adding({"a"});
  auto empty = verify_lemma1(z, Word{});
  CHECK(empty.all_pass());
  auto three = verify_lemma1(z, parse_word("a0 a0 a0"));
  CHECK(three.all_pass());
  REQUIRE(three.find("length_window"));
  CHECK(three.find("length_window")->witness.find("[8, 48]") != std::string::npos);

  auto r = canonical_run(z, parse_word("a0 a0 a0"));
  Computation cut = r.computation;
  cut.words.resize(3);
  cut.steps.resize(2);
  auto report = verify_lemma1(cut, 3);
  CHECK(report.find("constant_length")->pass);
  CHECK_FALSE(report.find("length_window")->pass);

  for (const auto& w : r.computation.words) CHECK(w.length() == r.computation.front().length());
  for (Sym s : r.computation.back().flat())
    if (z.machine.hardware().is_tape_letter(letter_of(s)))
      CHECK(std::count(z.letters.copy0.begin(), z.letters.copy0.end(), letter_of(s)) == 1);
}

TEST_CASE("budget exhaustion is NotFound") {
  auto z = build_adding({"a"});
  CHECK_THROWS_AS(canonical_run(z, parse_word("a0 a0 a0 a0"), 5), NotFound);
  CHECK(default_budget(3) == 64);
}
