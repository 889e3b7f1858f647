#ifndef SWIPT_EXPERIMENTS_HPP
#define SWIPT_EXPERIMENTS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

// Design identifiers accepted in ExperimentConfig::designs.
inline constexpr const char* kJointType1 = "joint_type1";
inline constexpr const char* kJointType2 = "joint_type2";
inline constexpr const char* kSeparateType1 = "separate_type1";
inline constexpr const char* kSeparateType2 = "separate_type2";

struct ExperimentConfig {
  int M = 4;
  int K_I = 2;
  int K_E = 2;
  std::vector<double> gamma_grid_db;  // defaults to -10:2.5:30
  int trials = 200;
  std::uint64_t seed = 1;
  double eh_attenuation_db = 30.0;
  double id_attenuation_db = 70.0;
  double P = 1.0;
  double zeta = 0.5;
  double sigma2_dbm = -50.0;
  std::string alpha_policy = "uniform";  // alpha_j = 1/K_E
  std::vector<std::string> designs = {kJointType1, kJointType2};

  void validate() const;
};

struct TrialRecord {
  int gamma_index = 0;
  int trial = 0;
  std::string design;
  bool feasible = false;
  double objective_w = 0.0;
  double q_w = 0.0;  // dedicated energy-beam power
  Region region = Region::kNA;
};

struct SweepRow {
  double gamma_db = 0.0;
  std::string design;
  bool flagged = false;  // no feasible trial at this grid point
  double mean_mw = 0.0;
  double std_mw = 0.0;
  double feasible_rate = 0.0;
  double mean_q_w = 0.0;
  std::array<int, 4> region_counts = {0, 0, 0, 0};  // R1, R2, R3, NA
};

struct SweepTable {
  std::vector<SweepRow> rows;
  std::vector<TrialRecord> records;  // per-trial provenance of every mean
};

// Rayleigh channels with deterministic path-loss scaling; bit-identical for
// the same (config seed, trial). SINR targets come from the first grid
// point; sweeps override them per point.
Scenario gen_scenario(const ExperimentConfig& cfg, int trial);

// Joint designs over the gamma grid, averaged over feasible trials.
SweepTable sweep_gamma(const ExperimentConfig& cfg);

// Joint and separate designs side by side.
SweepTable compare_designs(const ExperimentConfig& cfg);

// Fixed 7-column schema:
// gamma_db,design,mean_mw,std_mw,feasible_rate,mean_q_w,region_counts
// plus a gnuplot-style companion file at path + ".plot".
void write_csv(const SweepTable& table, const std::string& path);

// Reads back the rows of a written CSV (records are not persisted).
SweepTable read_csv(const std::string& path);

ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig config_from_file(const std::string& path);

// Worker count: min(trials, hardware, SWIPT_THREADS when set).
int experiment_threads(int trials);

}  // namespace swipt

#endif  // SWIPT_EXPERIMENTS_HPP
