// Command-line front end. Talks to the library exclusively through the C
// API so it doubles as a smoke test of the shared-library surface.
//
// Exit codes: 0 success, 1 usage/parse/IO, 2 infeasible, 3 verification
// failure.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "swipt/swipt_capi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFailed = 3;

int status_exit(swipt_status st) {
  if (st == SWIPT_OK) return kExitOk;
  if (st == SWIPT_ERR_INFEASIBLE) return kExitInfeasible;
  return kExitError;
}

void print_error(swipt_status st) {
  std::fprintf(stderr, "error (%d): %s\n", static_cast<int>(st),
               swipt_last_error_message());
}

struct ScenarioHandle {
  swipt_scenario* ptr = nullptr;
  ~ScenarioHandle() { swipt_scenario_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { swipt_string_free(ptr); }
};

int load_scenario(const std::string& path, ScenarioHandle& handle) {
  const swipt_status st = swipt_scenario_from_file(path.c_str(), &handle.ptr);
  if (st != SWIPT_OK) {
    print_error(st);
    return kExitError;
  }
  return kExitOk;
}

// A JSON field is extracted textually so the CLI stays free of the C++
// library headers; the payloads are flat machine-written objects.
bool json_bool_field(const std::string& text, const std::string& key) {
  const std::string needle = "\"" + key + "\": ";
  const size_t pos = text.find(needle);
  return pos != std::string::npos &&
         text.compare(pos + needle.size(), 4, "true") == 0;
}

int run_solve(const std::string& scenario_path, int type, double tol,
              bool json_out) {
  ScenarioHandle s;
  if (load_scenario(scenario_path, s) != kExitOk) return kExitError;
  StringHandle report;
  StringHandle summary;
  const swipt_status st =
      swipt_solve(s.ptr, type, tol, &report.ptr, &summary.ptr);
  if (st != SWIPT_OK) {
    print_error(st);
    return status_exit(st);
  }
  std::fputs(json_out ? report.ptr : summary.ptr, stdout);
  return kExitOk;
}

int run_check(const std::string& scenario_path, bool json_out) {
  ScenarioHandle s;
  if (load_scenario(scenario_path, s) != kExitOk) return kExitError;
  StringHandle out;
  const swipt_status st = swipt_check_feasibility(s.ptr, &out.ptr);
  if (st != SWIPT_OK) {
    print_error(st);
    return status_exit(st);
  }
  const bool feasible = json_bool_field(out.ptr, "feasible");
  if (json_out) {
    std::fputs(out.ptr, stdout);
    std::fputc('\n', stdout);
  } else {
    std::printf("feasible: %s\n", feasible ? "yes" : "no");
  }
  return feasible ? kExitOk : kExitInfeasible;
}

int run_verify(const std::string& scenario_path, int type, double tol,
               bool json_out) {
  ScenarioHandle s;
  if (load_scenario(scenario_path, s) != kExitOk) return kExitError;
  StringHandle out;
  const swipt_status st = swipt_verify(s.ptr, type, tol, &out.ptr);
  if (st != SWIPT_OK) {
    print_error(st);
    if (st == SWIPT_ERR_INFEASIBLE) return kExitInfeasible;
    if (st == SWIPT_ERR_NO_CONVERGENCE || st == SWIPT_ERR_SOLVER_FAILURE) {
      return kExitVerifyFailed;
    }
    return kExitError;
  }
  std::fputs(out.ptr, stdout);
  std::fputc('\n', stdout);
  if (!json_bool_field(out.ptr, "pass")) {
    std::fprintf(stderr, "verification failed\n");
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_sweep(const std::string& config_path, const std::string& out_path,
              long long seed, bool compare) {
  std::ifstream in(config_path);
  if (!in) {
    std::fprintf(stderr, "error: cannot open config %s\n",
                 config_path.c_str());
    return kExitError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  StringHandle summary;
  const swipt_status st =
      swipt_sweep(buf.str().c_str(), seed, out_path.c_str(),
                  compare ? 1 : 0, &summary.ptr);
  if (st != SWIPT_OK) {
    print_error(st);
    return status_exit(st);
  }
  std::fputs(summary.ptr, stdout);
  std::printf("csv written: %s\n", out_path.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiuser MISO beamforming for joint information and power "
               "transfer"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string config_path;
  std::string out_path = "sweep.csv";
  int type = 1;
  double tol = -1.0;
  long long seed = -1;
  bool json_out = false;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario) {
    if (needs_scenario) {
      cmd->add_option("--scenario", scenario_path, "scenario JSON path")
          ->required();
    }
    cmd->add_option("--tol", tol, "tolerance override");
    cmd->add_flag("--json", json_out, "structured output");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve one scenario");
  add_common(solve, true);
  solve->add_option("--type", type, "receiver type (1 or 2)")
      ->check(CLI::IsMember({1, 2}));

  CLI::App* check = app.add_subcommand("check", "feasibility probe");
  add_common(check, true);

  CLI::App* verify =
      app.add_subcommand("verify", "cross-check solver against the SDP oracle");
  add_common(verify, true);
  verify->add_option("--type", type, "receiver type (1 or 2)")
      ->check(CLI::IsMember({1, 2}));

  CLI::App* sweep = app.add_subcommand("sweep", "Monte-Carlo gamma sweep");
  sweep->add_option("--config", config_path, "experiment config JSON")
      ->required();
  sweep->add_option("--out", out_path, "output CSV path");
  sweep->add_option("--seed", seed, "seed override");

  CLI::App* compare =
      app.add_subcommand("compare", "joint versus separate designs");
  compare->add_option("--config", config_path, "experiment config JSON")
      ->required();
  compare->add_option("--out", out_path, "output CSV path");
  compare->add_option("--seed", seed, "seed override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  if (solve->parsed()) return run_solve(scenario_path, type, tol, json_out);
  if (check->parsed()) return run_check(scenario_path, json_out);
  if (verify->parsed()) return run_verify(scenario_path, type, tol, json_out);
  if (sweep->parsed()) return run_sweep(config_path, out_path, seed, false);
  if (compare->parsed()) return run_sweep(config_path, out_path, seed, true);
  return kExitError;
}
