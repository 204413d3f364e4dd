#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "smw/adding.hpp"
#include "smw/cli.hpp"
#include "smw/machine_io.hpp"
#include "smw/toy.hpp"

using namespace smw;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result smw_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::path(SMW_BINARY_DIR) / "cli-test" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("simulate the adding machine") {
  auto dir = scratch("simulate");
  auto r = smw_run({"simulate", "--adding", "a", "--u", "a0 a0", "--out", dir.string()});
  INFO(r.err);
  CHECK(r.code == 0);
  std::string trace = slurp(dir / "trace.jsonl");
  CHECK(trace.rfind("{\"header\"", 0) == 0);
  CHECK(trace.find("\"seed\":1") != std::string::npos);

  auto z = build_adding({"a"});
  std::istringstream in(trace);
  auto c = read_trace(in, z.machine);
  CHECK(c.length() == 13);
  CHECK(validate(z.machine, c));
}

TEST_CASE("simulate exit codes") {
  auto dir = scratch("codes");
  CHECK(smw_run({"simulate", "--adding", "a", "--u", "a0", "--budget", "0", "--out", dir.string()}).code == 2);
  std::ofstream(dir / "bad.json") << "{ not json";
  CHECK(smw_run({"simulate", "--machine", (dir / "bad.json").string(), "--start", "x", "--out", dir.string()}).code == 1);
  CHECK(smw_run({"simulate", "--machine", (dir / "missing.json").string(), "--start", "x"}).code == 1);
  CHECK(smw_run({"simulate", "--adding", "a", "--strategy", "nope"}).code == 1);
  CHECK(smw_run({"nonsense"}).code == 1);
  CHECK(smw_run({"--version"}).code == 0);

  std::ofstream(dir / "z.json") << machine_to_json(build_adding({"a"}).machine).dump();
  auto bfs = smw_run({"simulate", "--machine", (dir / "z.json").string(), "--start", "L a0 p(1) R", "--strategy", "bfs",
                      "--target", "p(3) R", "--out", dir.string()});
  CHECK(bfs.code == 0);
  CHECK(bfs.out.find("halt=target_reached steps=5") != std::string::npos);
}

TEST_CASE("adding-verify") {
  auto dir = scratch("adding");
  CHECK(smw_run({"adding-verify", "--n-max", "0", "--out", dir.string()}).code == 0);
  auto r = smw_run({"adding-verify", "--n-max", "6", "--out", dir.string()});
  CHECK(r.code == 0);
  std::string table = slurp(dir / "g-table.csv");
  CHECK(table.rfind("# smw 0.1.0 command=adding-verify config=", 0) == 0);
  CHECK(table.find("\nn,g,lower,upper,strategy,wall_time_ms\n0,1,1,6,det,0.000\n") != std::string::npos);
  CHECK(table.find("\n5,125,32,192,det,0.000\n") != std::string::npos);
  CHECK(slurp(dir / "adding-summary.csv").find(",false,") == std::string::npos);

  // determinism: same configuration, byte-identical output
  auto again = scratch("adding2");
  CHECK(smw_run({"adding-verify", "--n-max", "6", "--out", again.string()}).code == 0);
  CHECK(slurp(again / "g-table.csv") == table);
  CHECK(slurp(again / "adding-summary.csv") == slurp(dir / "adding-summary.csv"));

  // corrupted table
  std::string bad = table;
  bad.replace(bad.find("\n5,125,"), 7, "\n5,999,");
  std::ofstream(dir / "bad.csv") << bad;
  CHECK(smw_run({"adding-verify", "--check-table", (dir / "bad.csv").string(), "--out", dir.string()}).code == 3);
  CHECK(smw_run({"adding-verify", "--check-table", (again / "g-table.csv").string(), "--out", dir.string()}).code == 0);
}

TEST_CASE("compose") {
  auto dir = scratch("compose");
  auto r = smw_run({"compose", "--toy", "2,1,1", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("rules=8 expected=8 ok") != std::string::npos);
  std::string counts = slurp(dir / "composition-counts.csv");
  CHECK(counts.find("total,8\nexpected,8\n") != std::string::npos);
  CHECK(counts.find("round_trip,true") != std::string::npos);
  Machine back = load_machine((dir / "composed.json").string());
  CHECK(back.declared_count() == 8);

  std::ofstream(dir / "two.json") << machine_to_json(two_letter_machine()).dump();
  CHECK(smw_run({"compose", "--machine", (dir / "two.json").string(), "--out", dir.string()}).code == 1);

  auto steps = smw_run({"compose", "--toy", "2,1,1", "--start", "k1 a a k2", "--steps", "2", "--out", dir.string()});
  CHECK(steps.code == 0);
  CHECK(slurp(dir / "simulate-steps.csv").find("\n1,theta,2,13,15\n2,theta,2,13,15\n") != std::string::npos);
}

TEST_CASE("present") {
  auto dir = scratch("present");
  CHECK(smw_run({"present", "--toy", "2,1,1", "--out", dir.string()}).code == 1);
  auto r = smw_run({"present", "--toy", "2,1,1", "--w0", "k1 k2", "--out", dir.string()});
  CHECK(r.code == 0);
  std::string text = slurp(dir / "presentation.txt");
  std::string golden =
      "! generators: k1 k2 a kappa1 kappa2 theta\n"
      "! tags: transition transition auxiliary hub\n";
  CHECK(text.find(golden) != std::string::npos);
  auto again = scratch("present2");
  smw_run({"present", "--toy", "2,1,1", "--w0", "k1 k2", "--out", again.string()});
  CHECK(slurp(again / "presentation.txt") == text);
}

TEST_CASE("analyze") {
  auto dir = scratch("analyze");
  auto r = smw_run({"analyze", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(slurp(dir / "bounds-report.csv").find("lemma5,M=1 n=4 E=0,32,32,true") != std::string::npos);

  CHECK(smw_run({"analyze", "--r", "1", "--out", dir.string()}).code == 2);

  CHECK(smw_run({"adding-verify", "--n-max", "5", "--out", dir.string()}).code == 0);
  auto g = smw_run({"analyze", "--g-table", (dir / "g-table.csv").string(), "--r", "1", "--out", dir.string()});
  CHECK(g.code == 0);
  CHECK(slurp(dir / "intervals.csv").find("\ni,n_i,d_i,lambda_i,lo,hi,e_cap\n1,125,") != std::string::npos);

  auto p = smw_run({"analyze", "--bases", "Q1Q2Q1", "--words", "Q3Q1Q2Q1;Q2Q3", "--random-words", "5", "--out", dir.string()});
  CHECK(p.code == 0);
  std::string pred = slurp(dir / "predicates.csv");
  CHECK(pred.find("\nQ3Q1Q2Q1,0,0,1,1,0\nQ2Q3,0,1,0,0,0\n") != std::string::npos);

  CHECK(smw_run({"simulate", "--adding", "a", "--u", "a0 a0 a0", "--out", dir.string()}).code == 0);
  auto t = smw_run({"analyze", "--adding", "a", "--trace", (dir / "trace.jsonl").string(), "--out", dir.string()});
  CHECK(t.code == 0);
  CHECK(slurp(dir / "metrics.csv").find("\nt,29\n") != std::string::npos);

  CHECK(smw_run({"analyze", "--epsilon", "0.3", "--g-table", (dir / "g-table.csv").string(), "--out", dir.string()}).code == 1);
}

TEST_CASE("config hash ignores the output directory") {
  CHECK(cli::config_hash({"a", "--out", "x"}) == cli::config_hash({"a", "--out", "y"}));
  CHECK(cli::config_hash({"a", "--out=x"}) == cli::config_hash({"a"}));
  CHECK(cli::config_hash({"a"}) != cli::config_hash({"b"}));
}
