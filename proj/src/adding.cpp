#include "smw/adding.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace smw {

LetterId copy_letter(const std::string& base, int copy) {
  return intern(Letter{base + std::to_string(copy), LetterKind::tape, std::nullopt, {}});
}

namespace {

Substitution fix(std::size_t part, LetterId q) {
  Substitution s;
  s.first_part = part;
  s.from.states = {q};
  s.to.states = {q};
  return s;
}

Substitution move(std::size_t part, LetterId from, Word left, LetterId to, Word right) {
  Substitution s;
  s.first_part = part;
  s.from.states = {from};
  s.to.left = std::move(left);
  s.to.states = {to};
  s.to.right = std::move(right);
  return s;
}

SRule rule3(const std::string& name, const AddingLetters& l, Substitution middle) {
  SRule r;
  r.name = name;
  r.substitutions = {fix(0, l.left), std::move(middle), fix(2, l.right)};
  return r;
}

}  // namespace

std::vector<SRule> adding_rules(const AddingLetters& l) {
  const LetterId p1 = l.p[0], p2 = l.p[1], p3 = l.p[2];
  const Alphabet a0(l.copy0);
  std::vector<SRule> rules;
  auto family = [&](const char* stem, auto make) {
    for (std::size_t k = 0; k < l.base.size(); ++k)
      rules.push_back(rule3(std::string(stem) + "(" + l.base[k] + ")", l, make(pos(l.copy0[k]), pos(l.copy1[k]))));
  };
  family("r_1", [&](Sym x0, Sym x1) { return move(1, p1, Word{-x1}, p1, Word{x0}); });
  family("r_12", [&](Sym x0, Sym x1) { return move(1, p1, Word{-x0, x1}, p2, Word{}); });
  family("r_2", [&](Sym x0, Sym) { return move(1, p2, Word{x0}, p2, Word{-x0}); });

  SRule r21 = rule3("r_21", l, move(1, p2, {}, p1, {}));
  r21.domain[1] = Alphabet{};  // Y_2(r_21) = empty; Y_1(r_21) = Y_1
  rules.push_back(std::move(r21));

  SRule r13 = rule3("r_13", l, move(1, p1, {}, p3, {}));
  r13.domain[0] = Alphabet{};  // Y_1(r_13) = empty; Y_2(r_13) = A_0 = Y_2
  rules.push_back(std::move(r13));

  for (std::size_t k = 0; k < l.base.size(); ++k) {
    Sym x0 = pos(l.copy0[k]);
    SRule r = rule3("r_3(" + l.base[k] + ")", l, move(1, p3, Word{x0}, p3, Word{-x0}));
    r.domain[0] = a0;  // Y_1(r_3(a)) = A_0; Y_2(r_3(a)) = A_0 = Y_2
    rules.push_back(std::move(r));
  }
  return rules;
}

AddingMachine build_adding(const std::vector<std::string>& base) {
  if (base.empty()) throw InvalidAlphabet("adding machine needs a nonempty alphabet");
  if (base.size() > 26) throw InvalidAlphabet("adding machine alphabet is limited to 26 letters");
  std::set<std::string> seen;
  for (const auto& b : base) {
    if (b.empty() || b.find_first_of(" \t.@^") != std::string::npos)
      throw InvalidAlphabet("unusable letter name '" + b + "'");
    if (!seen.insert(b).second) throw InvalidAlphabet("duplicate letter '" + b + "'");
  }

  AddingLetters l;
  l.base = base;
  try {
    for (const auto& b : base) {
      l.copy0.push_back(copy_letter(b, 0));
      l.copy1.push_back(copy_letter(b, 1));
    }
    l.left = intern("L", LetterKind::state);
    l.right = intern("R", LetterKind::state);
    l.p[0] = intern("p(1)", LetterKind::state);
    l.p[1] = intern("p(2)", LetterKind::state);
    l.p[2] = intern("p(3)", LetterKind::state);
  } catch (const LetterClash& e) {
    throw InvalidAlphabet(e.what());
  }
  std::set<LetterId> copies(l.copy0.begin(), l.copy0.end());
  for (LetterId id : l.copy1)
    if (!copies.insert(id).second) throw InvalidAlphabet("copies A_0 and A_1 collide at '" + display(id) + "'");

  std::vector<LetterId> y1 = l.copy0;
  y1.insert(y1.end(), l.copy1.begin(), l.copy1.end());
  Hardware h({Alphabet(y1), Alphabet(l.copy0)},
             {Alphabet({l.left}), Alphabet({l.p[0], l.p[1], l.p[2]}), Alphabet({l.right})});

  auto rules = adding_rules(l);
  std::vector<std::size_t> priority(rules.size());
  for (std::size_t i = 0; i < priority.size(); ++i) priority[i] = i;

  Machine m(std::move(h), std::move(rules));
  m.notes = {
      "Y_1(r)=A_0 u A_1 and Y_2(r)=A_0 (full sectors) for r_1(a), r_12(a), r_2(a): not printed, full by convention",
      "Y_1(r_21)=Y_1, Y_2(r_21)=empty; Y_1(r_13)=empty, Y_2(r_13)=A_0; Y_1(r_3(a))=Y_2(r_3(a))=A_0",
      "deterministic priority: r_1(a), r_12(a), r_2(a), r_21, r_13, r_3(a) with a length guard",
  };
  return AddingMachine{std::move(m), std::move(l), std::move(priority)};
}

std::uint64_t default_budget(std::size_t n) { return 8 * (std::uint64_t{1} << n); }

AdmissibleWord adding_start(const AddingMachine& z, const Word& u) {
  if (!is_positive(u)) throw Error("adding-machine input must be a positive word");
  const Alphabet a0(z.letters.copy0);
  for (Sym s : u)
    if (!a0.contains(letter_of(s))) throw Error("'" + display(s) + "' is not in A_0");
  return AdmissibleWord({z.letters.left, z.letters.p[0], z.letters.right}, {reduce(u), Word{}});
}

CanonicalRun canonical_run(const AddingMachine& z, const Word& u, std::optional<std::uint64_t> budget) {
  AdmissibleWord start = adding_start(z, u);
  std::uint64_t steps = budget.value_or(default_budget(u.size()));
  const LetterId p3 = z.letters.p[2];
  WordPredicate target = [p3](const AdmissibleWord& w) { return w.state(1) == p3 && w.sector(1).empty(); };

  auto det = run(z.machine, start, Deterministic{z.priority, true}, steps, target);
  if (det.halt == Halt::target_reached) return {std::move(det.computation), false, "det"};

  SearchTarget bfs;
  bfs.max_length = start.length();
  auto found = run(z.machine, start, bfs, steps, target);
  if (found.halt == Halt::target_reached) return {std::move(found.computation), true, "bfs-fallback"};
  throw NotFound("no computation from " + to_string(start) + " to p(3)R within " + std::to_string(steps) +
                 " steps (" + std::string(to_string(found.halt)) + ")");
}

GTable::GTable(const GTable& other) : entries_(other.entries()) {}

GTable& GTable::operator=(const GTable& other) {
  if (this != &other) {
    auto copy = other.entries();
    std::lock_guard lock(mutex_);
    entries_ = std::move(copy);
  }
  return *this;
}

void GTable::insert(std::uint64_t n, const GEntry& e) {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = entries_.emplace(n, e);
  if (!inserted && it->second.g != e.g)
    throw GTableConflict("g(" + std::to_string(n) + ") measured as both " + std::to_string(it->second.g) +
                         " and " + std::to_string(e.g));
}

std::optional<std::uint64_t> GTable::find(std::uint64_t n) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(n);
  if (it == entries_.end()) return std::nullopt;
  return it->second.g;
}

std::uint64_t GTable::at(std::uint64_t n) const {
  auto g = find(n);
  if (!g) throw GTableMiss(n);
  return *g;
}

std::map<std::uint64_t, GEntry> GTable::entries() const {
  std::lock_guard lock(mutex_);
  return entries_;
}

bool in_lemma1_window(std::uint64_t n, std::uint64_t g) {
  if (n >= 60) return false;
  return (std::uint64_t{1} << n) <= g && g <= 6 * (std::uint64_t{1} << n);
}

std::uint64_t measure_g(const AddingMachine& z, std::uint64_t n, GTable& table) {
  if (n >= 40) throw Error("g(" + std::to_string(n) + ") is out of desk range");
  Word u = power(pos(z.letters.copy0.front()), static_cast<long>(n));
  auto t0 = std::chrono::steady_clock::now();
  auto r = canonical_run(z, u);
  auto t1 = std::chrono::steady_clock::now();
  std::uint64_t g = r.computation.length();
  table.insert(n, GEntry{g, r.strategy, to_string(u), std::chrono::duration<double, std::milli>(t1 - t0).count()});
  if (!in_lemma1_window(n, g))
    throw BoundViolation("g(" + std::to_string(n) + ") = " + std::to_string(g) + " is outside [2^n, 6*2^n]");
  return g;
}

void measure_g_all(const AddingMachine& z, const std::vector<std::uint64_t>& ns, GTable& table) {
  std::vector<std::future<std::uint64_t>> jobs;
  for (auto n : ns) jobs.push_back(std::async(std::launch::async, [&z, &table, n] { return measure_g(z, n, table); }));
  std::exception_ptr first;
  for (auto& j : jobs) {
    try {
      j.get();
    } catch (...) {
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

BoundReport verify_lemma1(const Computation& c, std::size_t u_length) {
  BoundReport report;
  const std::size_t first = c.front().length(), last = c.back().length();
  const std::size_t ceiling = std::max(first, last);

  std::size_t worst = 0, worst_len = 0;
  for (std::size_t i = 0; i < c.words.size(); ++i)
    if (c.words[i].length() > worst_len) {
      worst_len = c.words[i].length();
      worst = i;
    }
  report.checks.push_back({"length_ceiling", worst_len <= ceiling,
                           "max |W_i| = " + std::to_string(worst_len) + " at i=" + std::to_string(worst) +
                               ", max(|W_0|,|W_t|) = " + std::to_string(ceiling)});

  const std::uint64_t t = c.length();
  report.checks.push_back({"length_window", in_lemma1_window(u_length, t),
                           "t = " + std::to_string(t) + " in [" + std::to_string(std::uint64_t{1} << u_length) +
                               ", " + std::to_string(6 * (std::uint64_t{1} << u_length)) + "]"});

  bool constant = true;
  std::string witness = "all |W_i| = " + std::to_string(first);
  if (first == last) {
    for (std::size_t i = 0; i < c.words.size(); ++i)
      if (c.words[i].length() != first) {
        constant = false;
        witness = "|W_" + std::to_string(i) + "| = " + std::to_string(c.words[i].length()) + " != " +
                  std::to_string(first);
        break;
      }
  } else {
    witness = "vacuous: |W_0| != |W_t|";
  }
  report.checks.push_back({"constant_length", constant, witness});
  return report;
}

BoundReport verify_lemma1(const AddingMachine& z, const Word& u) {
  auto r = canonical_run(z, u);
  auto report = verify_lemma1(r.computation, u.size());
  if (r.used_fallback) report.flags.push_back("deterministic strategy stalled; breadth-first fallback used");
  report.flags.push_back("sweep-rule domains (r_1, r_12, r_2) are full sectors by convention");
  return report;
}

void write_g_table(std::ostream& out, const GTable& table) {
  out << "n,g,lower,upper,strategy,wall_time_ms\n";
  for (const auto& [n, e] : table.entries()) {
    std::uint64_t lower = std::uint64_t{1} << n;
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(3);
    ms << e.wall_ms;
    out << n << ',' << e.g << ',' << lower << ',' << 6 * lower << ',' << e.strategy << ',' << ms.str() << '\n';
  }
}

GTable read_g_table(std::istream& in) {
  GTable table;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line.rfind("n,g", 0) != 0) throw Error("g-table: missing 'n,g,...' header");
      header = true;
      continue;
    }
    std::istringstream row(line);
    std::string n, g, lower, upper, strategy, ms;
    if (!std::getline(row, n, ',') || !std::getline(row, g, ',') || !std::getline(row, lower, ',') ||
        !std::getline(row, upper, ',') || !std::getline(row, strategy, ','))
      throw Error("g-table: malformed row '" + line + "'");
    std::getline(row, ms, ',');
    try {
      table.insert(std::stoull(n), GEntry{std::stoull(g), strategy, {}, ms.empty() ? 0.0 : std::stod(ms)});
    } catch (const std::logic_error&) {
      throw Error("g-table: malformed row '" + line + "'");
    }
  }
  return table;
}

}  // namespace smw
