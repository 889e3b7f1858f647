#ifndef SWIPT_BASELINES_HPP
#define SWIPT_BASELINES_HPP

#include "swipt/model.hpp"

namespace swipt {

struct BaselineResult {
  BeamSolution solution;
  double objective = 0.0;       // weighted sum harvested power (W)
  double residual_power = 0.0;  // P minus the minimum-power information part
};

// Separate information/energy design for receivers that see energy-beam
// interference: minimum-power information beams plus an energy beam confined
// to the null space of the stacked ID channels. Requires K_I <= M - 1.
BaselineResult separate_design_type1(const Scenario& s);

// Separate design for interference-cancelling receivers: minimum-power
// information beams plus the residual budget on the optimal energy
// direction.
BaselineResult separate_design_type2(const Scenario& s);

}  // namespace swipt

#endif  // SWIPT_BASELINES_HPP
