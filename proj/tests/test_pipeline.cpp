#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "ford/pipeline.hpp"

using namespace ford;
using nlohmann::json;

namespace {

ScenarioConfig family_cfg(double eps) {
  ScenarioConfig cfg;
  cfg.family = FamilySpec{eps, std::nullopt, 0.5};
  return cfg;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FORD_CLI_PATH) + " " + args +
                          " > /dev/null 2> /dev/null";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("report json is deterministic and carries the schema") {
  const ScenarioConfig cfg = family_cfg(0.01);
  const std::string r1 = report_json(run_analysis(cfg));
  const std::string r2 = report_json(run_analysis(cfg));
  CHECK(r1 == r2);

  const json j = json::parse(r1);
  CHECK(j["schema"] == "ford-analysis/1");
  CHECK(j["certificate"]["verdict"] == "CertifiedFordDomain");
  CHECK(j["tunnel"]["length"].get<double>() ==
        doctest::Approx(std::log(100.0)));
  CHECK(j["config"]["family"]["eps"].get<double>() == 0.01);
  CHECK(j.contains("visibility"));
  CHECK(j.contains("edges"));
  CHECK(r1.find("elapsed") == std::string::npos);  // timing stays out
}

TEST_CASE("oracle cross-check lands in the report when requested") {
  ScenarioConfig cfg = family_cfg(0.01);
  cfg.oracle_grid = 48;
  const FordAnalysis an = run_analysis(cfg);
  REQUIRE(an.oracle_powers.has_value());
  CHECK(an.oracle_agrees);
  const json j = json::parse(report_json(an));
  CHECK(j["oracle"]["grid"] == 48);
  CHECK(j["oracle"]["agrees"] == true);
  CHECK(j["oracle"]["powers"] == json::array({-2, -1, 1, 2}));
}

TEST_CASE("sweep brackets the discreteness transition") {
  ScenarioConfig cfg = family_cfg(0.01);
  cfg.sweep = SweepSpec{"t_alpha", {}, 20.0, 0.5, 24, true};
  const SweepResult sw = run_sweep(cfg);
  REQUIRE(sw.rows.size() == 24);
  CHECK(sw.rows.front().status == CertificateStatus::CertifiedFordDomain);
  CHECK(sw.rows.back().status == CertificateStatus::CertifiedIndiscrete);
  REQUIRE(sw.last_certified.has_value());
  REQUIRE(sw.first_indiscrete.has_value());
  CHECK(*sw.last_certified > *sw.first_indiscrete);  // descending ramp

  // no certified row after the first indiscrete one (downgrade rule)
  bool seen_indiscrete = false;
  for (const auto& row : sw.rows) {
    if (row.status == CertificateStatus::CertifiedIndiscrete)
      seen_indiscrete = true;
    if (seen_indiscrete)
      CHECK(row.status != CertificateStatus::CertifiedFordDomain);
  }

  const json j = json::parse(sweep_json(sw, cfg));
  CHECK(j["schema"] == "ford-sweep/1");
  CHECK(j["rows"].size() == 24);
  CHECK(j["bracket"]["last_certified"].get<double>() ==
        doctest::Approx(*sw.last_certified));
}

TEST_CASE("eps sweep varies the family parameter") {
  ScenarioConfig cfg = family_cfg(0.01);
  cfg.sweep = SweepSpec{"eps", {0.05, 0.01}, std::nullopt, std::nullopt,
                        std::nullopt, false};
  const SweepResult sw = run_sweep(cfg);
  REQUIRE(sw.rows.size() == 2);
  CHECK(sw.rows[0].parameter == 0.05);
  CHECK(sw.rows[0].status == CertificateStatus::CertifiedFordDomain);
  REQUIRE(sw.rows[0].tunnel_len.has_value());
  CHECK(*sw.rows[0].tunnel_len == doctest::Approx(std::log(20.0)));
  CHECK(*sw.rows[1].tunnel_len == doctest::Approx(std::log(100.0)));
}

TEST_CASE("homology json end-to-end") {
  const std::string out = homology_json(R"({"classes": [[1,0],[2,3]]})");
  const json j = json::parse(out);
  CHECK(j["schema"] == "ford-homology/1");
  CHECK(j["m"] == 5);
  CHECK(j["n"] == 170);
  CHECK(j["kernel_basis"][0] == json::array({1, 10}));
  CHECK(j["kernel_basis"][1] == json::array({0, 170}));
  CHECK(j["determinant"] == 170);
  CHECK(j["surjectivity_witness"]["image"] == 1);
  CHECK(j["basis_change"].is_null());

  // a = 0 class triggers the automatic basis change
  const json jz = json::parse(homology_json(R"({"classes": [[0,3]]})"));
  CHECK(!jz["basis_change"].is_null());

  CHECK_THROWS_AS(homology_json(R"({"classes": []})"), EmptyInput);
  CHECK_THROWS_AS(homology_json(R"({"classes": [[0,0]]})"), EmptyInput);
}

TEST_CASE("cli exit codes: 0 certified, 2 inconclusive, 1 error") {
  const std::string dir = "/tmp/ford_cli_test";
  std::filesystem::create_directories(dir);

  write_file(dir + "/fam.json", R"({"family": {"eps": 0.01}})");
  CHECK(run_cli("analyze --config " + dir + "/fam.json --out " + dir +
                "/fam_out.json") == 0);

  // indiscrete is still a certificate: exit 0
  write_file(dir + "/ind.json",
             R"({"family": {"eps": 0.01},
                 "lattice": {"t_alpha": [0.9, 0], "t_beta": [0, 20]}})");
  CHECK(run_cli("analyze --config " + dir + "/ind.json") == 0);

  // starved enumeration cannot certify: exit 2
  write_file(dir + "/inc.json",
             R"({"family": {"eps": 0.01}, "max_word_len": 1})");
  CHECK(run_cli("analyze --config " + dir + "/inc.json") == 2);

  CHECK(run_cli("analyze --config " + dir + "/does_not_exist.json") == 1);
  write_file(dir + "/bad.json", "{nope");
  CHECK(run_cli("analyze --config " + dir + "/bad.json") == 1);

  CHECK(run_cli("homology --config " + dir + "/fam.json") == 1);  // no classes

  write_file(dir + "/hom.json", R"({"classes": [[1,0]]})");
  CHECK(run_cli("homology --config " + dir + "/hom.json --out " + dir +
                "/hom_out.json") == 0);

  CHECK(run_cli("render --config " + dir + "/fam.json --svg " + dir +
                "/fam.svg") == 0);

  // analyze --target-R shortcut with no config file
  CHECK(run_cli("analyze --target-R 10 --safety 0.5 --out " + dir +
                "/r10.json") == 0);
}

TEST_CASE("written report parses and matches the library output") {
  const std::string dir = "/tmp/ford_cli_test";
  std::filesystem::create_directories(dir);
  write_file(dir + "/fam2.json", R"({"family": {"eps": 0.01}})");
  REQUIRE(run_cli("analyze --config " + dir + "/fam2.json --out " + dir +
                  "/fam2_out.json") == 0);
  std::ifstream in(dir + "/fam2_out.json");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == report_json(run_analysis(family_cfg(0.01))));
}
