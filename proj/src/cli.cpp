#include "smw/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "smw/adding.hpp"
#include "smw/analysis.hpp"
#include "smw/composition.hpp"
#include "smw/machine_io.hpp"
#include "smw/presentation.hpp"
#include "smw/toy.hpp"

namespace smw::cli {

using nlohmann::json;
namespace fs = std::filesystem;

std::string config_hash(const std::vector<std::string>& args) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    feed(args[i]);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

class Verification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Resource : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string machine, adding, toy;
  std::string start, target, u, w0, rule;
  std::string strategy = "det";
  std::string out = ".";
  std::string trace, g_table, check_table, constants, bases, words;
  std::uint64_t budget = 100000;
  std::uint64_t seed = 1;
  std::uint64_t n_max = 12;
  std::uint64_t hub_n = 1;
  std::uint64_t steps = 1;
  std::uint64_t r = 0;
  std::uint64_t i_max = 1;
  std::uint64_t random_words = 0;
  std::optional<std::size_t> max_length;
  bool deep = false, length_guard = false, no_length_guard = false, timing = false, specials = false;
  double epsilon = 0.2;
};

struct Context {
  Options opt;
  std::string hash;
  std::ostream& out;
};

std::string comment_header(const Context& ctx, char mark) {
  std::ostringstream s;
  s << mark << " smw " << kVersion << " command=" << ctx.opt.command << " config=" << ctx.hash << " seed=" << ctx.opt.seed
    << '\n';
  return s.str();
}

json json_header(const Context& ctx) {
  return {{"tool", "smw"}, {"version", kVersion}, {"command", ctx.opt.command}, {"config", ctx.hash}, {"seed", ctx.opt.seed}};
}

void write_atomic(const Context& ctx, const std::string& name, const std::string& content) {
  fs::path dir(ctx.opt.out);
  fs::create_directories(dir);
  fs::path target = dir / name;
  fs::path tmp = dir / (name + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw Resource("cannot write " + tmp.string());
    f << content;
    if (!f) throw Resource("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
  ctx.out << "wrote " << target.string() << '\n';
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto lo = cur.find_first_not_of(" \t");
    if (lo == std::string::npos) continue;
    auto hi = cur.find_last_not_of(" \t");
    out.push_back(cur.substr(lo, hi - lo + 1));
  }
  return out;
}

struct Source {
  std::optional<Machine> machine;
  std::optional<AddingMachine> adding;
  const Machine& m() const { return adding ? adding->machine : *machine; }
};

Source load_source(const Options& o) {
  int given = !o.machine.empty() + !o.adding.empty() + !o.toy.empty();
  if (given != 1) throw Error("give exactly one of --machine, --adding, --toy");
  Source s;
  if (!o.adding.empty()) {
    s.adding = build_adding(split(o.adding, ','));
  } else if (!o.toy.empty()) {
    auto parts = split(o.toy, ',');
    if (parts.size() != 3) throw Error("--toy expects parts,rules,letters");
    s.machine = chain_machine(std::stoul(parts[0]), std::stoul(parts[1]), std::stoul(parts[2]));
  } else {
    s.machine = load_machine(o.machine);
  }
  return s;
}

WordPredicate adding_target(const AddingMachine& z) {
  LetterId p3 = z.letters.p[2];
  return [p3](const AdmissibleWord& w) { return w.state(1) == p3 && w.sector(1).empty(); };
}

// ---- simulate ----------------------------------------------------------------

int cmd_simulate(Context& ctx) {
  const Options& o = ctx.opt;
  Source src = load_source(o);
  const Machine& m = src.m();

  AdmissibleWord start;
  if (!o.start.empty())
    start = parse_admissible(m.hardware(), o.start);
  else if (src.adding)
    start = adding_start(*src.adding, parse_word(o.u.empty() ? "1" : o.u));
  else
    throw Error("--start is required for this machine");

  WordPredicate target;
  if (!o.target.empty())
    target = contains_subword(parse_word(o.target));
  else if (src.adding)
    target = adding_target(*src.adding);

  Strategy strategy;
  if (o.strategy == "det") {
    Deterministic d;
    if (src.adding) d.priority = src.adding->priority;
    d.length_guard = src.adding ? !o.no_length_guard : o.length_guard;
    strategy = d;
  } else {
    if (!target) throw Error("--strategy bfs needs --target");
    SearchTarget s;
    s.max_length = o.max_length;
    strategy = s;
  }

  auto result = run(m, start, strategy, o.budget, target);
  std::ostringstream trace;
  trace << json{{"header", json_header(ctx)}}.dump() << '\n';
  write_trace(trace, m, result.computation);
  write_atomic(ctx, "trace.jsonl", trace.str());
  ctx.out << "halt=" << to_string(result.halt) << " steps=" << result.computation.length() << '\n';

  switch (result.halt) {
    case Halt::target_reached:
    case Halt::no_applicable_rule:
      return Exit::ok;
    default:
      return Exit::resource;
  }
}

// ---- adding-verify -----------------------------------------------------------

struct SummaryRow {
  std::string check, subject;
  bool pass;
  std::string witness;
};

std::string summary_csv(const Context& ctx, const std::vector<SummaryRow>& rows) {
  std::ostringstream s;
  s << comment_header(ctx, '#') << "check,subject,pass,witness\n";
  for (const auto& r : rows) {
    std::string w = r.witness;
    std::replace(w.begin(), w.end(), ',', ';');
    s << r.check << ',' << r.subject << ',' << (r.pass ? "true" : "false") << ',' << w << '\n';
  }
  return s.str();
}

int cmd_adding_verify(Context& ctx) {
  const Options& o = ctx.opt;
  std::vector<SummaryRow> rows;

  if (!o.check_table.empty()) {
    std::ifstream in(o.check_table);
    if (!in) throw Error("cannot open " + o.check_table);
    GTable t = read_g_table(in);
    for (const auto& [n, e] : t.entries())
      rows.push_back({"window", "n=" + std::to_string(n), in_lemma1_window(n, e.g), "g=" + std::to_string(e.g)});
    for (std::uint64_t r : {1, 2}) {
      try {
        auto gg = check_gg_inequality(t, r);
        rows.push_back({"gg", "r=" + std::to_string(r), gg.holds,
                        std::to_string(gg.lhs) + " <= " + std::to_string(gg.rhs)});
      } catch (const GTableMiss&) {
      }
    }
  } else {
    if (o.n_max > 20) throw Error("--n-max is limited to 20");
    AddingMachine z = build_adding(split(o.adding.empty() ? "a" : o.adding, ','));
    std::set<std::uint64_t> ns;
    for (std::uint64_t n = 0; n <= o.n_max; ++n) ns.insert(n);
    for (std::uint64_t n : {0, 1, 5}) ns.insert(n);
    if (o.deep)
      for (std::uint64_t n : {2, 13}) ns.insert(n);

    GTable table;
    try {
      measure_g_all(z, std::vector<std::uint64_t>(ns.begin(), ns.end()), table);
    } catch (const BoundViolation& e) {
      rows.push_back({"window", "measure", false, e.what()});
    }
    for (const auto& [n, e] : table.entries())
      rows.push_back({"window", "n=" + std::to_string(n), in_lemma1_window(n, e.g),
                      "g=" + std::to_string(e.g) + " strategy=" + e.strategy});
    for (std::uint64_t n = 0; n <= o.n_max; ++n) {
      auto report = verify_lemma1(z, power(pos(z.letters.copy0.front()), static_cast<long>(n)));
      for (const auto& c : report.checks)
        if (c.name != "length_window") rows.push_back({c.name, "n=" + std::to_string(n), c.pass, c.witness});
    }
    std::vector<std::uint64_t> rs{1};
    if (o.deep) rs.push_back(2);
    for (auto r : rs) {
      auto gg = check_gg_inequality(table, r);
      rows.push_back({"gg", "r=" + std::to_string(r), gg.holds && gg.window_sane,
                      std::to_string(gg.lhs) + " <= " + std::to_string(gg.rhs)});
    }

    GTable written;
    for (auto [n, e] : table.entries()) {
      if (!o.timing) e.wall_ms = 0.0;
      written.insert(n, e);
    }
    std::ostringstream csv;
    csv << comment_header(ctx, '#');
    write_g_table(csv, written);
    write_atomic(ctx, "g-table.csv", csv.str());
  }

  write_atomic(ctx, "adding-summary.csv", summary_csv(ctx, rows));
  std::size_t failed = std::count_if(rows.begin(), rows.end(), [](const SummaryRow& r) { return !r.pass; });
  ctx.out << rows.size() << " checks, " << failed << " failed\n";
  return failed ? Exit::verification : Exit::ok;
}

// ---- compose -----------------------------------------------------------------

int cmd_compose(Context& ctx) {
  const Options& o = ctx.opt;
  Source src = load_source(o);
  ComposedMachine cm = compose(src.m());
  json j = machine_to_json(cm.machine);
  j["header"] = json_header(ctx);
  write_atomic(ctx, "composed.json", j.dump(2) + "\n");

  auto counts = count_rules(cm);
  std::ostringstream csv;
  csv << comment_header(ctx, '#') << "item,value\n";
  csv << "theta_plus," << counts.theta_plus << "\nmodified," << counts.modified << '\n';
  for (std::size_t i = 0; i < counts.copies_per_sector.size(); ++i)
    csv << "copies_sector_" << i + 1 << ',' << counts.copies_per_sector[i] << '\n';
  csv << "transition," << counts.transition << "\ntotal," << counts.total << "\nexpected," << counts.expected << '\n';
  for (std::size_t i = 0; i < counts.p_letters.size(); ++i) csv << "P_" << i + 1 << "_letters," << counts.p_letters[i] << '\n';

  bool ok = counts.total == counts.expected;
  Machine reloaded = machine_from_json(j);
  bool round_trip = reloaded.rules() == cm.machine.rules() && reloaded.hardware() == cm.machine.hardware();
  csv << "round_trip," << (round_trip ? "true" : "false") << '\n';
  ok = ok && round_trip;

  if (!o.start.empty()) {
    AdmissibleWord w = lift_word(cm, parse_admissible(cm.source.hardware(), o.start));
    std::size_t theta = 0;
    if (!o.rule.empty()) {
      auto idx = cm.source.find_rule(o.rule);
      if (!idx || *idx >= cm.source.declared_count()) throw Error("unknown positive rule '" + o.rule + "'");
      theta = *idx;
    }
    std::ostringstream steps;
    steps << comment_header(ctx, '#') << "step,rule,sector_lengths,sector_steps,total\n";
    for (std::uint64_t k = 1; k <= o.steps; ++k) {
      auto sim = simulate_step(cm, theta, w);
      w = sim.computation.back();
      std::string lengths, per;
      for (std::size_t i = 0; i < sim.sector_steps.size(); ++i) {
        lengths += (i ? ";" : "") + std::to_string(w.sector(2 * i).size());
        per += (i ? ";" : "") + std::to_string(sim.sector_steps[i]);
      }
      steps << k << ',' << cm.source.rule(theta).name << ',' << lengths << ',' << per << ',' << sim.computation.length() << '\n';
    }
    write_atomic(ctx, "simulate-steps.csv", steps.str());
  }

  write_atomic(ctx, "composition-counts.csv", csv.str());
  ctx.out << "rules=" << counts.total << " expected=" << counts.expected << (ok ? " ok" : " MISMATCH") << '\n';
  return ok ? Exit::ok : Exit::verification;
}

// ---- present -----------------------------------------------------------------

int cmd_present(Context& ctx) {
  const Options& o = ctx.opt;
  Source src = load_source(o);
  if (o.w0.empty()) throw Error("--w0 is required");
  HubParams hub{o.hub_n, parse_admissible(src.m().hardware(), o.w0)};
  auto p = generate_presentation(src.m(), hub, o.specials ? default_specials() : std::vector<LetterId>{});
  std::ostringstream text;
  text << comment_header(ctx, '!');
  write_presentation(text, p);
  write_atomic(ctx, "presentation.txt", text.str());
  ctx.out << "generators=" << p.generators.size() << " transition=" << p.count(RelatorTag::transition)
          << " fixing=" << p.count(RelatorTag::fixing) << " auxiliary=" << p.count(RelatorTag::auxiliary)
          << " hub=" << p.count(RelatorTag::hub) << '\n';
  return Exit::ok;
}

// ---- analyze -----------------------------------------------------------------

struct Constants {
  double c = 2, m = 1, r = 1, p1 = 1;
  std::optional<double> e;
};

Constants load_constants(const std::string& path) {
  Constants k;
  if (path.empty()) return k;
  std::ifstream in(path);
  if (!in) throw Error("cannot open constants file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(std::string("constants file: ") + e.what());
  }
  k.c = j.value("C", k.c);
  k.m = j.value("M", k.m);
  k.r = j.value("R", k.r);
  k.p1 = j.value("c", k.p1);
  if (j.contains("E") && !j["E"].is_null()) k.e = j["E"].get<double>();
  return k;
}

// for the inputs column; values use full precision
std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

bool close(double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)); }

int cmd_analyze(Context& ctx) {
  const Options& o = ctx.opt;
  Constants k = load_constants(o.constants);
  std::vector<BoundRow> rows;

  // Fixed arithmetic spot checks.
  auto spot = [&](const std::string& lemma, const std::string& inputs, double value, double expected) {
    rows.push_back({lemma, inputs, value, expected, close(value, expected)});
  };
  spot("log'", "x=1", log_prime(1), 1);
  spot("log'", "x=8", log_prime(8), 3);
  spot("lemma2", "C=1 W=2 Wt=2 t=16", bound_width_lemma2(1, 2, 2, 16), 6);
  spot("lemma3", "C=2 t=5 a0=1 at=3", bound_area_lemma3(2, 5, 1, 3), 40);
  spot("lemma5", "M=1 n=4 E=0", bound_area_lemma5(1, 4, 0), 32);

  if (!o.trace.empty()) {
    Source src = load_source(o);
    std::ifstream in(o.trace);
    if (!in) throw Error("cannot open trace " + o.trace);
    Computation c = read_trace(in, src.m());
    if (!validate(src.m(), c)) throw Error("trace does not validate against the machine");
    const double t = static_cast<double>(c.length());
    const auto area = static_cast<double>(area_estimate(c, src.m().hardware().parts()));
    const double a0 = static_cast<double>(c.front().a_length()), at = static_cast<double>(c.back().a_length());
    const double bound3 = bound_area_lemma3(k.c, t, a0, at);
    rows.push_back({"lemma3", "C=" + fmt(k.c) + " t=" + fmt(t) + " a0=" + fmt(a0) + " at=" + fmt(at), bound3, area,
                    area <= bound3});
    if (c.length() >= 4) {
      const double w = static_cast<double>(c.front().length()), wt = static_cast<double>(c.back().length());
      const double bound2 = bound_width_lemma2(k.c, w, wt, t);
      const double wd = static_cast<double>(width(c));
      rows.push_back({"lemma2", "C=" + fmt(k.c) + " W=" + fmt(w) + " Wt=" + fmt(wt) + " t=" + fmt(t), bound2, wd, wd <= bound2});
    }
    std::ostringstream metrics;
    metrics << comment_header(ctx, '#') << "metric,value\n"
            << "t," << c.length() << "\nwidth," << width(c) << "\narea_estimate," << area_estimate(c, src.m().hardware().parts())
            << "\nW0_length," << c.front().length() << "\nWt_length," << c.back().length() << "\nW0_a," << c.front().a_length()
            << "\nWt_a," << c.back().a_length() << '\n';
    write_atomic(ctx, "metrics.csv", metrics.str());
  }

  if (!o.bases.empty()) {
    BaseSet b;
    int top = 1;
    for (const auto& s : split(o.bases, ';')) {
      b.push_back(parse_base_word(s));
      for (int q : b.back()) top = std::max(top, q);
    }
    std::vector<BaseWord> words;
    for (const auto& s : split(o.words, ';')) words.push_back(parse_base_word(s));
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> part(1, top), len(1, 6);
    for (std::uint64_t i = 0; i < o.random_words; ++i) {
      BaseWord w(static_cast<std::size_t>(len(rng)));
      for (auto& q : w) q = part(rng);
      words.push_back(std::move(w));
    }
    std::ostringstream csv;
    csv << comment_header(ctx, '#') << "word,covered,narrow,tight,tight_whole_word,readings_differ\n";
    for (const auto& w : words) {
      bool t1 = is_tight(b, w), t2 = is_tight_whole(b, w);
      csv << to_string(w) << ',' << is_covered(b, w) << ',' << is_narrow(b, w) << ',' << t1 << ',' << t2 << ','
          << (t1 != t2) << '\n';
    }
    write_atomic(ctx, "predicates.csv", csv.str());
  }

  if (o.r > 0 && o.g_table.empty()) throw GTableMiss(o.r - 1);
  if (!o.g_table.empty()) {
    std::ifstream in(o.g_table);
    if (!in) throw Error("cannot open g-table " + o.g_table);
    GTable g = read_g_table(in);
    auto intervals = lemcool_intervals(g, o.i_max, o.epsilon);
    std::ostringstream csv;
    csv << comment_header(ctx, '#');
    write_intervals_csv(csv, intervals);
    write_atomic(ctx, "intervals.csv", csv.str());
    for (const auto& iv : intervals)
      rows.push_back({"lemcool", "i=" + std::to_string(iv.i) + " eps=" + fmt(o.epsilon), iv.hi - iv.lo, std::nullopt, iv.lo < iv.hi});

    const std::uint64_t r = o.r ? o.r : 1;
    const double n = 4;
    auto v6 = bound_area_lemma6(k.m, n, r, k.r, k.e.value_or(n * n), g);
    rows.push_back({"lemma6", "M=" + fmt(k.m) + " n=4 r=" + std::to_string(r) + " R=" + fmt(k.r), v6.value, std::nullopt, true});
    auto gg = check_gg_inequality(g, r);
    rows.push_back({"gg", "r=" + std::to_string(r), static_cast<double>(gg.rhs), static_cast<double>(gg.lhs), gg.holds});
  }

  std::ostringstream csv;
  csv << comment_header(ctx, '#');
  write_bounds_csv(csv, rows);
  write_atomic(ctx, "bounds-report.csv", csv.str());
  std::size_t failed = std::count_if(rows.begin(), rows.end(), [](const BoundRow& r) { return !r.pass; });
  ctx.out << rows.size() << " rows, " << failed << " failed\n";
  return failed ? Exit::verification : Exit::ok;
}

void machine_flags(CLI::App* sub, Options& o) {
  sub->add_option("--machine", o.machine, "machine JSON file");
  sub->add_option("--adding", o.adding, "build the adding machine over these letters (comma separated)");
  sub->add_option("--toy", o.toy, "chain machine: parts,rules,letters");
}

void common_flags(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "output directory");
  sub->add_option("--seed", o.seed, "seed for randomized sweeps");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"S-machine workbench"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "run a machine and write its trace");
  machine_flags(sim, o);
  common_flags(sim, o);
  sim->add_option("--start", o.start, "start word");
  sim->add_option("--u", o.u, "adding machine input over A_0");
  sim->add_option("--target", o.target, "stop at a word containing this subword");
  sim->add_option("--strategy", o.strategy)->check(CLI::IsMember({"det", "bfs"}));
  sim->add_option("--budget", o.budget, "step budget");
  sim->add_option("--max-length", o.max_length, "prune longer words during search");
  sim->add_flag("--length-guard", o.length_guard, "skip lengthening applications");
  sim->add_flag("--no-length-guard", o.no_length_guard, "adding machine: run without the guard");

  auto* add = app.add_subcommand("adding-verify", "measure g(n) and check the adding-machine bounds");
  common_flags(add, o);
  add->add_option("--letters", o.adding, "base alphabet, comma separated (default a)");
  add->add_option("--n-max", o.n_max, "largest n to measure");
  add->add_flag("--deep", o.deep, "also check the r = 2 inequality");
  add->add_option("--check-table", o.check_table, "verify an existing g-table instead of measuring");
  add->add_flag("--timing", o.timing, "record wall times (outputs are then not reproducible)");

  auto* comp = app.add_subcommand("compose", "build S∘Z and its rule-count report");
  machine_flags(comp, o);
  common_flags(comp, o);
  comp->add_option("--start", o.start, "S word to lift and simulate");
  comp->add_option("--rule", o.rule, "positive rule of S to simulate");
  comp->add_option("--steps", o.steps, "number of chained simulated steps");

  auto* pres = app.add_subcommand("present", "emit the group presentation");
  machine_flags(pres, o);
  common_flags(pres, o);
  pres->add_option("--w0", o.w0, "accepting word for the hub relator");
  pres->add_option("--hub-n", o.hub_n, "N: the hub uses 2N kappa letters")->check(CLI::PositiveNumber);
  pres->add_flag("--specials", o.specials, "add alpha, omega, delta");

  auto* an = app.add_subcommand("analyze", "metrics, base-word predicates and bound evaluations");
  machine_flags(an, o);
  common_flags(an, o);
  an->add_option("--trace", o.trace, "trace JSONL to measure");
  an->add_option("--bases", o.bases, "base set, ';' separated (e.g. Q1Q2Q1;Q2Q3Q2)");
  an->add_option("--words", o.words, "base words to classify, ';' separated");
  an->add_option("--random-words", o.random_words, "add this many seeded random base words");
  an->add_option("--g-table", o.g_table, "g-table CSV for interval and lemma-6 rows");
  an->add_option("--r", o.r, "r for the lemma-6 and gg rows");
  an->add_option("--i-max", o.i_max, "number of lemcool intervals");
  an->add_option("--epsilon", o.epsilon, "interval exponent (< 1/4)");
  an->add_option("--constants", o.constants, "JSON with C, M, R, c, E");

  std::vector<std::string> argv_store{"smw"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::input_error;
  }

  Context ctx{o, config_hash(args), out};
  try {
    if (*sim) return ctx.opt.command = "simulate", cmd_simulate(ctx);
    if (*add) return ctx.opt.command = "adding-verify", cmd_adding_verify(ctx);
    if (*comp) return ctx.opt.command = "compose", cmd_compose(ctx);
    if (*pres) return ctx.opt.command = "present", cmd_present(ctx);
    if (*an) return ctx.opt.command = "analyze", cmd_analyze(ctx);
  } catch (const Verification& e) {
    err << "verification failed: " << e.what() << '\n';
    return Exit::verification;
  } catch (const Resource& e) {
    err << "error: " << e.what() << '\n';
    return Exit::resource;
  } catch (const GTableMiss& e) {
    err << "error: " << e.what() << '\n';
    return Exit::resource;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << '\n';
    return Exit::resource;
  } catch (const BoundViolation& e) {
    err << "verification failed: " << e.what() << '\n';
    return Exit::verification;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return Exit::resource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return Exit::input_error;
  }
  return Exit::input_error;
}

}  // namespace smw::cli
