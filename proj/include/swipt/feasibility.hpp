#ifndef SWIPT_FEASIBILITY_HPP
#define SWIPT_FEASIBILITY_HPP

#include <optional>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

struct FeasibilityReport {
  bool feasible = false;
  double min_power = 0.0;  // P_min of the SINR-only problem
  std::vector<CVec> min_power_beams;
  std::optional<RVec> oebf_powers;  // p_i when OeBF alignment is feasible
};

struct MinPowerResult {
  std::vector<CVec> beams;
  double min_power = 0.0;
  RVec lambdas;
  int iterations = 0;
};

// Minimum-sum-power information beams meeting every SINR target with
// equality (unit effective noise covariance in the dual uplink). Throws
// Error(kInfeasible) when the targets are jointly unachievable at any
// power.
MinPowerResult min_power_beams(const Scenario& s);

// True iff the targets are achievable and P_min <= P.
bool is_feasible(const Scenario& s);

// Power allocation for information beams all aligned to the OeBF, when the
// coupled power-control system admits one within budget. Returns the
// component-wise minimal feasible allocation, or nullopt.
std::optional<RVec> oebf_feasibility(const Scenario& s);

FeasibilityReport feasibility_report(const Scenario& s);

}  // namespace swipt

#endif  // SWIPT_FEASIBILITY_HPP
