#ifndef SWIPT_MODEL_HPP
#define SWIPT_MODEL_HPP

#include <string>
#include <vector>

#include "swipt/linalg.hpp"

namespace swipt {

enum class ReceiverType { kTypeI = 1, kTypeII = 2 };

// One downlink instance: channels, noise powers, SINR targets, energy
// weights, harvest efficiency and the transmit power budget. All values are
// linear; Watts throughout. dB/dBm conversion happens at the I/O boundary.
struct Scenario {
  int M = 0;    // transmit antennas, > 1
  int K_I = 0;  // information receivers
  int K_E = 0;  // energy receivers
  CMat H;       // K_I x M, row i = channel to ID receiver i
  CMat Gch;     // K_E x M, row j = channel to EH receiver j
  RVec sigma2;  // K_I noise powers (W)
  RVec gamma;   // K_I SINR targets (linear)
  RVec alpha;   // K_E energy weights
  double zeta = 1.0;  // harvest efficiency, (0, 1]
  double P = 0.0;     // power budget (W)

  // Throws Error(kInvalidInput / kDimensionMismatch) on violations.
  void validate() const;
};

// Weighted energy matrix G = zeta * sum_j alpha_j g_j^H g_j with its
// dominant eigenpair.
struct EnergyProfile {
  HermitianMatrix G;
  double xi_E = 0.0;
  CVec v_E;
};

EnergyProfile energy_matrix(const Scenario& s);

struct BeamSolution {
  std::vector<CVec> info_beams;    // K_I entries
  std::vector<CVec> energy_beams;  // possibly empty
  ReceiverType receiver_type = ReceiverType::kTypeI;

  double total_power() const;
};

enum class Region { kR1, kR2, kR3, kNA };

const char* region_name(Region r);

struct SolveReport {
  double objective = 0.0;          // W
  std::vector<double> per_id_sinr;
  std::vector<double> per_eh_power;  // Q_j (W)
  double total_power = 0.0;
  double dual_beta = 0.0;
  std::vector<double> uplink_lambdas;
  double energy_beam_power = 0.0;  // q (W)
  Region region = Region::kNA;
  int iterations = 0;
  BeamSolution solution;
};

// Achieved SINR of ID receiver i. Type I counts energy-beam interference,
// Type II does not.
double sinr(const BeamSolution& sol, const Scenario& s, int i);

// Harvested power Q_j of EH receiver j (all beams contribute).
double harvested_power(const BeamSolution& sol, const Scenario& s, int j);

// Weighted sum harvested power sum_j alpha_j Q_j, evaluated in matrix form
// sum_k b_k^H G b_k over all beams.
double objective_value(const BeamSolution& sol, const Scenario& s);

// Empty iff every SINR target is met within tol (relative) and total power
// is at most P * (1 + tol).
std::vector<std::string> validate_solution(const BeamSolution& sol,
                                           const Scenario& s, double tol);

// Fills the per-receiver diagnostics of a report from its solution.
void finalize_report(SolveReport& r, const Scenario& s);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

// JSON (de)serialization. Accepts sigma2_dbm|sigma2_w and
// gamma_db|gamma_linear spellings; emits the linear/W forms.
Scenario scenario_from_json(const std::string& text);
Scenario scenario_from_file(const std::string& path);
std::string scenario_to_json(const Scenario& s);
std::string report_to_json(const SolveReport& r);

}  // namespace swipt

#endif  // SWIPT_MODEL_HPP
