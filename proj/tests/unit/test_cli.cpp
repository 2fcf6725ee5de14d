#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"

using namespace testing;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cosetgrowth::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cosetgrowth_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("growth prints the CSV table") {
  const auto r = run_cli({"growth", "--presentation", data_path("F2.pres"), "--radius", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, line;
  std::getline(lines, header);
  CHECK(header.rfind("r,count", 0) == 0);
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line.substr(0, line.find(',', line.find(',') + 1)));
  CHECK(rows == std::vector<std::string>{"0,1", "1,5", "2,17", "3,53"});
}

TEST_CASE("thm1 on Z passes with equal series") {
  const auto path = scratch("thm1.json");
  const auto r = run_cli({"--json", path.string(), "thm1", "--G", data_path("Z.pres"), "--radius", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "thm1: pass\n");
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["equality_holds"] == true);
  CHECK(j["beta_violations"] == 0);
  CHECK(j["status"] == "pass");
  for (const auto& row : j["rows"]) CHECK(row["gr_exact"] == row["f_G"]);
}

TEST_CASE("missing input file exits 2") {
  const auto r = run_cli({"growth", "--presentation", "/nonexistent/file.pres", "--radius", "3"});
  CHECK(r.code == 2);
}

TEST_CASE("usage errors exit 2 and help exits 0") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"growth", "--presentation", data_path("F2.pres")}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"--version"}).code == 0);
}

TEST_CASE("malformed presentation exits 2 with a JSON error") {
  const auto path = scratch("bad.pres");
  std::ofstream(path) << "< a b | a q >\n";
  const auto r = run_cli({"sc-check", "--presentation", path.string()});
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.err);
  CHECK(j["error"] == "unknown_generator");
}

TEST_CASE("sc-check outcomes set the exit code") {
  auto r = run_cli({"--json", scratch("sc1.json").string(), "sc-check", "--presentation",
                    data_path("commutator.pres"), "--lambda", "1/3"});
  CHECK(r.code == 0);
  r = run_cli({"--json", scratch("sc2.json").string(), "sc-check", "--presentation", data_path("commutator.pres"),
               "--lambda", "1/4"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(slurp(scratch("sc2.json")));
  CHECK(j["max_piece"] == 1);
  CHECK(j["satisfies"] == false);
}

TEST_CASE("rips-build writes a presentation that passes sc-check at 1/6") {
  const auto out = scratch("H.pres");
  const auto rep = scratch("rips.json");
  auto r = run_cli({"rips-build", "--in", data_path("trivial.pres"), "--out", out.string(), "--report", rep.string()});
  CHECK(r.code == 0);
  r = run_cli({"--json", scratch("sc3.json").string(), "sc-check", "--presentation", out.string(), "--lambda",
               "1/6"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(rep));
  CHECK(j["relators"].size() == 5);
  CHECK(j["kernel_generators"].size() == 2);
}

TEST_CASE("dcoset-growth backends agree on F2 with <a>, <b>") {
  for (const char* backend : {"free", "buffered"}) {
    const auto path = scratch(std::string("dc_") + backend + ".json");
    const auto r = run_cli({"--json", path.string(), "dcoset-growth", "--presentation", data_path("F2.pres"), "--A",
                            data_path("a.sub"), "--B", data_path("b.sub"), "--radius", "5", "--backend", backend});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["series"]["counts"] == nlohmann::json::array({1, 1, 5, 13, 41, 121}));
  }
}

TEST_CASE("stallings membership queries") {
  auto r = run_cli({"--json", scratch("st.json").string(), "stallings", "--rank", "2", "--subgroup",
                    data_path("index2.sub"), "--member", "a a b", "--member", "b a b A"});
  CHECK(r.code == 0);
  r = run_cli({"--json", scratch("st2.json").string(), "stallings", "--rank", "2", "--subgroup",
               data_path("index2.sub"), "--member", "a"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(slurp(scratch("st.json")));
  CHECK(j["subgroup"]["finite_index"] == true);
}

TEST_CASE("thm2 worked configuration reports collision factor 1") {
  const auto path = scratch("thm2.json");
  const auto r = run_cli({"--json", path.string(), "thm2", "--config", data_path("thm2_worked.json")});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["m"] == 1404);
  CHECK(j["distinct_double_cosets"] == 1404);
  CHECK(j["collision_factor"] == "1.000000");
}

TEST_CASE("thm2 rejects a finite-index subgroup") {
  const auto cfg = scratch("bad_thm2.json");
  std::ofstream(cfg) << R"({"rank": 2, "A": ["a a", "b", "a b A"], "B": ["b"], "c": "b a B", "d": "a b A"})";
  const auto r = run_cli({"thm2", "--config", cfg.string()});
  CHECK(r.code == 2);
  CHECK(nlohmann::json::parse(r.err)["error"] == "config_invalid");
}

TEST_CASE("thm2 rejects unknown configuration keys") {
  const auto cfg = scratch("typo_thm2.json");
  std::ofstream(cfg) << R"({"rank": 2, "A": ["a"], "B": ["b"], "c": "b a B", "d": "a b A", "radiuss": 3})";
  CHECK(run_cli({"thm2", "--config", cfg.string()}).code == 2);
}

TEST_CASE("claim3 succeeds on every trial") {
  const auto path = scratch("claim3.json");
  const auto r = run_cli({"--seed", "5", "--json", path.string(), "claim3", "--presentation", data_path("F2.pres"),
                          "--trials", "50", "--exclusivity-trials", "200"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["successes"] == 50);
  CHECK(j["exclusivity"]["violations"] == 0);
}

TEST_CASE("fit-rate on counts") {
  const auto path = scratch("fit.json");
  const auto r = run_cli({"--json", path.string(), "fit-rate", "--counts", "1,5,17,53,161", "--window", "3"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(slurp(path))["rate"] == "3.181403");
  CHECK(run_cli({"fit-rate", "--counts", "1,5", "--window", "3"}).code == 2);
}

TEST_CASE("csv flag on a command without a table is a usage error") {
  CHECK(run_cli({"--csv", scratch("x.csv").string(), "fit-rate", "--counts", "1,2,4,8", "--window", "2"}).code == 2);
}

TEST_CASE("reports are byte-identical across reruns with the same seed") {
  const auto a = run_cli({"--seed", "9", "claim3", "--presentation", data_path("F2.pres"), "--trials", "20",
                          "--exclusivity-trials", "50"});
  const auto b = run_cli({"--seed", "9", "claim3", "--presentation", data_path("F2.pres"), "--trials", "20",
                          "--exclusivity-trials", "50"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = run_cli({"thm2", "--config", data_path("thm2_worked.json")});
  const auto d = run_cli({"thm2", "--config", data_path("thm2_worked.json")});
  CHECK(c.out == d.out);
}

TEST_CASE("budget exhaustion exits 1 with budget_exhausted") {
  const auto r = run_cli({"--budget-ms", "1", "growth", "--presentation", data_path("genus2.pres"), "--radius", "7"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.err)["error"] == "budget_exhausted");
}
