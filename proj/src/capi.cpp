#include "swipt/swipt_capi.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include <json.hpp>

#include "swipt/duality.hpp"
#include "swipt/experiments.hpp"
#include "swipt/feasibility.hpp"
#include "swipt/model.hpp"
#include "swipt/sdr.hpp"

struct swipt_scenario {
  swipt::Scenario s;
};

namespace {

thread_local std::string g_last_error = "no error";

swipt_status map_code(swipt::ErrorCode code) {
  switch (code) {
    case swipt::ErrorCode::kInvalidInput: return SWIPT_ERR_INVALID_INPUT;
    case swipt::ErrorCode::kDimensionMismatch:
      return SWIPT_ERR_DIMENSION_MISMATCH;
    case swipt::ErrorCode::kRankDeficient: return SWIPT_ERR_RANK_DEFICIENT;
    case swipt::ErrorCode::kNonPsdNoise: return SWIPT_ERR_NON_PSD_NOISE;
    case swipt::ErrorCode::kInfeasible: return SWIPT_ERR_INFEASIBLE;
    case swipt::ErrorCode::kNoConvergence: return SWIPT_ERR_NO_CONVERGENCE;
    case swipt::ErrorCode::kUnbounded: return SWIPT_ERR_UNBOUNDED;
    case swipt::ErrorCode::kSolverFailure: return SWIPT_ERR_SOLVER_FAILURE;
    case swipt::ErrorCode::kIoError: return SWIPT_ERR_IO;
  }
  return SWIPT_ERR_UNKNOWN;
}

template <typename Fn>
swipt_status guarded(Fn&& fn) {
  try {
    fn();
    return SWIPT_OK;
  } catch (const swipt::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SWIPT_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown failure";
    return SWIPT_ERR_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

swipt::ReceiverType to_type(int receiver_type) {
  if (receiver_type == 1) return swipt::ReceiverType::kTypeI;
  if (receiver_type == 2) return swipt::ReceiverType::kTypeII;
  throw swipt::Error(swipt::ErrorCode::kInvalidInput,
                     "receiver_type must be 1 or 2");
}

std::string solve_summary(const swipt::SolveReport& r,
                          const swipt::Scenario& s) {
  std::ostringstream os;
  os.precision(9);
  os << "objective_w=" << r.objective << " region=" << region_name(r.region)
     << " dual_beta=" << r.dual_beta << " total_power_w=" << r.total_power
     << " energy_beam_power_w=" << r.energy_beam_power << '\n';
  for (int i = 0; i < s.K_I; ++i) {
    os << "id_receiver " << i << ": sinr_db="
       << swipt::linear_to_db(r.per_id_sinr[i])
       << " target_db=" << swipt::linear_to_db(s.gamma[i]) << '\n';
  }
  for (int j = 0; j < s.K_E; ++j) {
    os << "eh_receiver " << j << ": harvested_w=" << r.per_eh_power[j] << '\n';
  }
  return os.str();
}

}  // namespace

extern "C" {

swipt_status swipt_scenario_from_json(const char* json_text,
                                      swipt_scenario** out) {
  return guarded([&] {
    if (!json_text || !out) {
      throw swipt::Error(swipt::ErrorCode::kInvalidInput, "null argument");
    }
    *out = new swipt_scenario{swipt::scenario_from_json(json_text)};
  });
}

swipt_status swipt_scenario_from_file(const char* path, swipt_scenario** out) {
  return guarded([&] {
    if (!path || !out) {
      throw swipt::Error(swipt::ErrorCode::kInvalidInput, "null argument");
    }
    *out = new swipt_scenario{swipt::scenario_from_file(path)};
  });
}

swipt_status swipt_scenario_to_json(const swipt_scenario* s, char** out_json) {
  return guarded([&] {
    if (!s || !out_json) {
      throw swipt::Error(swipt::ErrorCode::kInvalidInput, "null argument");
    }
    *out_json = dup_string(swipt::scenario_to_json(s->s));
  });
}

void swipt_scenario_free(swipt_scenario* s) { delete s; }

swipt_status swipt_solve(const swipt_scenario* s, int receiver_type,
                         double tol, char** out_report_json,
                         char** out_summary_text) {
  return guarded([&] {
    if (!s) {
      throw swipt::Error(swipt::ErrorCode::kInvalidInput, "null scenario");
    }
    const swipt::ReceiverType type = to_type(receiver_type);
    swipt::SolverOptions opts;
    if (tol > 0.0) {
      opts.fp_tol = tol;
      opts.bisect_tol = tol;
    }
    const swipt::SolveReport r = type == swipt::ReceiverType::kTypeI
                                     ? swipt::solve_p1(s->s, opts)
                                     : swipt::solve_p2(s->s, opts);
    if (out_report_json) *out_report_json = dup_string(report_to_json(r));
    if (out_summary_text) {
      *out_summary_text = dup_string(solve_summary(r, s->s));
    }
  });
}

swipt_status swipt_check_feasibility(const swipt_scenario* s,
                                     char** out_json) {
  return guarded([&] {
    if (!s || !out_json) {
      throw swipt::Error(swipt::ErrorCode::kInvalidInput, "null argument");
    }
    const swipt::FeasibilityReport r = swipt::feasibility_report(s->s);
    nlohmann::json j;
    j["feasible"] = r.feasible;
    j["min_power_w"] = r.min_power;
    j["oebf_feasible"] = r.oebf_powers.has_value();
    if (r.oebf_powers) {
      j["oebf_powers_w"] = std::vector<double>(
          r.oebf_powers->data(), r.oebf_powers->data() + r.oebf_powers->size());
    }
    *out_json = dup_string(j.dump(2));
  });
}

swipt_status swipt_verify(const swipt_scenario* s, int receiver_type,
                          double tol, char** out_json) {
  return guarded([&] {
    if (!s || !out_json) {
      throw swipt::Error(swipt::ErrorCode::kInvalidInput, "null argument");
    }
    const swipt::ReceiverType type = to_type(receiver_type);
    const double structure_tol = tol > 0.0 ? tol : 1e-4;
    const double gap_tol = 1e-3;

    const swipt::SolveReport dual = type == swipt::ReceiverType::kTypeI
                                        ? swipt::solve_p1(s->s)
                                        : swipt::solve_p2(s->s);
    const swipt::RealSdp sdp = type == swipt::ReceiverType::kTypeI
                                   ? swipt::build_sdr1(s->s)
                                   : swipt::build_sdr2(s->s);
    const swipt::SdrSolution sdr = swipt::solve_sdp(sdp);
    const swipt::StructureReport structure =
        swipt::verify_structure(sdr, s->s, type, structure_tol);

    const double denom = std::max(std::abs(sdr.value), 1e-300);
    const double rel_gap = std::abs(dual.objective - sdr.value) / denom;

    nlohmann::json j;
    j["v_dual"] = dual.objective;
    j["v_sdr"] = sdr.value;
    j["rel_gap"] = rel_gap;
    j["rank_ratios"] = structure.dominant_ratios;
    j["trace_we"] = structure.trace_we;
    j["beta_dual"] = dual.dual_beta;
    j["beta_sdr"] = sdr.beta;
    j["region"] = region_name(dual.region);
    j["structure_pass"] = structure.pass;
    j["failures"] = structure.failures;
    j["pass"] = structure.pass && rel_gap <= gap_tol;
    *out_json = dup_string(j.dump(2));
  });
}

swipt_status swipt_sweep(const char* config_json, long long seed_override,
                         const char* csv_path, int compare,
                         char** out_summary_text) {
  return guarded([&] {
    if (!config_json || !csv_path) {
      throw swipt::Error(swipt::ErrorCode::kInvalidInput, "null argument");
    }
    swipt::ExperimentConfig cfg = swipt::config_from_json(config_json);
    if (seed_override >= 0) {
      cfg.seed = static_cast<std::uint64_t>(seed_override);
    }
    const swipt::SweepTable table =
        compare ? swipt::compare_designs(cfg) : swipt::sweep_gamma(cfg);
    swipt::write_csv(table, csv_path);
    if (out_summary_text) {
      std::ostringstream os;
      os.precision(6);
      std::vector<std::string> designs;
      for (const swipt::SweepRow& r : table.rows) {
        if (std::find(designs.begin(), designs.end(), r.design) ==
            designs.end()) {
          designs.push_back(r.design);
        }
      }
      for (const std::string& d : designs) {
        double best = 0.0;
        double rate = 0.0;
        int rows = 0;
        for (const swipt::SweepRow& r : table.rows) {
          if (r.design != d) continue;
          ++rows;
          rate += r.feasible_rate;
          if (!r.flagged) best = std::max(best, r.mean_mw);
        }
        os << d << ": rows=" << rows << " peak_mean_mw=" << best
           << " avg_feasible_rate=" << (rows ? rate / rows : 0.0) << '\n';
      }
      *out_summary_text = dup_string(os.str());
    }
  });
}

void swipt_string_free(char* s) { delete[] s; }

const char* swipt_last_error_message(void) { return g_last_error.c_str(); }

int swipt_api_version(void) { return 1; }

}  // extern "C"
