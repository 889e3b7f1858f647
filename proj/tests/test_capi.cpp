#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "swipt/swipt_capi.h"

using nlohmann::json;

namespace {

// Two orthogonal channels; minimum power 0.02 W, so comfortably feasible.
const char* kScenarioJson = R"({
  "M": 2, "K_I": 1, "K_E": 1,
  "channels_h": [[1.0, 0.0, 0.1, 0.0]],
  "channels_g": [[0.0, 0.0, 1.0, 0.0]],
  "sigma2_w": [0.01],
  "gamma_linear": [2.0],
  "alpha": [1.0],
  "zeta": 0.5,
  "power_w": 1.0
})";

struct Str {
  char* p = nullptr;
  ~Str() { swipt_string_free(p); }
};

struct Scen {
  swipt_scenario* p = nullptr;
  ~Scen() { swipt_scenario_free(p); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("scenario lifecycle and JSON round trip") {
  Scen s;
  REQUIRE(swipt_scenario_from_json(kScenarioJson, &s.p) == SWIPT_OK);
  Str out;
  REQUIRE(swipt_scenario_to_json(s.p, &out.p) == SWIPT_OK);
  const json j = json::parse(out.p);
  CHECK(j["M"] == 2);
  CHECK(j["K_I"] == 1);
  CHECK(j["gamma_linear"][0] == doctest::Approx(2.0));
  CHECK(j["power_w"] == doctest::Approx(1.0));
  Scen again;
  CHECK(swipt_scenario_from_json(out.p, &again.p) == SWIPT_OK);
}

TEST_CASE("parse failures report IO errors with a message") {
  swipt_scenario* s = nullptr;
  CHECK(swipt_scenario_from_json("{broken", &s) == SWIPT_ERR_IO);
  CHECK(s == nullptr);
  CHECK(std::string(swipt_last_error_message()).size() > 0);
  CHECK(swipt_scenario_from_json(nullptr, &s) == SWIPT_ERR_INVALID_INPUT);
  CHECK(swipt_scenario_from_file("/nonexistent/scenario.json", &s) ==
        SWIPT_ERR_IO);
}

TEST_CASE("solve produces a report for both receiver types") {
  Scen s;
  REQUIRE(swipt_scenario_from_json(kScenarioJson, &s.p) == SWIPT_OK);
  for (int type : {1, 2}) {
    Str report, summary;
    REQUIRE(swipt_solve(s.p, type, 0.0, &report.p, &summary.p) == SWIPT_OK);
    const json j = json::parse(report.p);
    CHECK(j["objective_w"].get<double>() > 0.0);
    CHECK(j["total_power_w"].get<double>() <= 1.0 + 1e-9);
    CHECK(std::string(summary.p).find("objective_w=") != std::string::npos);
  }
  CHECK(swipt_solve(s.p, 3, 0.0, nullptr, nullptr) ==
        SWIPT_ERR_INVALID_INPUT);
}

TEST_CASE("infeasible budgets surface the dedicated status") {
  json j = json::parse(kScenarioJson);
  j["power_w"] = 1e-6;
  Scen s;
  REQUIRE(swipt_scenario_from_json(j.dump().c_str(), &s.p) == SWIPT_OK);
  Str report;
  CHECK(swipt_solve(s.p, 1, 0.0, &report.p, nullptr) == SWIPT_ERR_INFEASIBLE);
  CHECK(report.p == nullptr);
}

TEST_CASE("feasibility probe returns a verdict either way") {
  Scen s;
  REQUIRE(swipt_scenario_from_json(kScenarioJson, &s.p) == SWIPT_OK);
  Str out;
  REQUIRE(swipt_check_feasibility(s.p, &out.p) == SWIPT_OK);
  json j = json::parse(out.p);
  CHECK(j["feasible"] == true);
  CHECK(j["min_power_w"].get<double>() ==
        doctest::Approx(2.0 * 0.01 / 1.01).epsilon(1e-6));

  json bad = json::parse(kScenarioJson);
  bad["power_w"] = 1e-6;
  Scen hard;
  REQUIRE(swipt_scenario_from_json(bad.dump().c_str(), &hard.p) == SWIPT_OK);
  Str out2;
  REQUIRE(swipt_check_feasibility(hard.p, &out2.p) == SWIPT_OK);
  CHECK(json::parse(out2.p)["feasible"] == false);
}

TEST_CASE("verify cross-checks the two solution paths") {
  Scen s;
  REQUIRE(swipt_scenario_from_json(kScenarioJson, &s.p) == SWIPT_OK);
  for (int type : {1, 2}) {
    Str out;
    REQUIRE(swipt_verify(s.p, type, 0.0, &out.p) == SWIPT_OK);
    const json j = json::parse(out.p);
    CHECK(j["pass"] == true);
    CHECK(j["rel_gap"].get<double>() <= 1e-3);
    CHECK(j["structure_pass"] == true);
    CHECK(j["failures"].empty());
    CHECK(j["v_sdr"].get<double>() > 0.0);
  }
}

TEST_CASE("sweep writes the CSV pair and a summary") {
  const json cfg = {{"M", 4},       {"K_I", 1},
                    {"K_E", 2},     {"gamma_grid_db", {0.0, 10.0}},
                    {"trials", 3},  {"seed", 5}};
  const char* path = "/tmp/swipt_capi_sweep.csv";
  Str summary;
  REQUIRE(swipt_sweep(cfg.dump().c_str(), -1, path, 0, &summary.p) ==
          SWIPT_OK);
  const std::string csv = slurp(path);
  CHECK(csv.rfind("gamma_db,design,", 0) == 0);
  CHECK(!slurp(std::string(path) + ".plot").empty());
  CHECK(std::string(summary.p).find("joint_type1") != std::string::npos);

  Str summary2;
  REQUIRE(swipt_sweep(cfg.dump().c_str(), -1, path, 0, &summary2.p) ==
          SWIPT_OK);
  CHECK(slurp(path) == csv);

  REQUIRE(swipt_sweep(cfg.dump().c_str(), 9, path, 1, nullptr) == SWIPT_OK);
  CHECK(slurp(path).find("separate_type2") != std::string::npos);

  CHECK(swipt_sweep("{bad", -1, path, 0, nullptr) == SWIPT_ERR_IO);
  CHECK(swipt_sweep(cfg.dump().c_str(), -1, "/nonexistent-dir/x.csv", 0,
                    nullptr) == SWIPT_ERR_IO);
  std::remove(path);
  std::remove((std::string(path) + ".plot").c_str());
}

TEST_CASE("api version and error-message plumbing") {
  CHECK(swipt_api_version() == 1);
  CHECK(swipt_last_error_message() != nullptr);
  swipt_string_free(nullptr);
  swipt_scenario_free(nullptr);
}
