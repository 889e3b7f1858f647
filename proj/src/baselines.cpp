#include "swipt/baselines.hpp"

#include <cmath>

#include "swipt/feasibility.hpp"

namespace swipt {

namespace {

BaselineResult from_min_power(const Scenario& s, ReceiverType type) {
  MinPowerResult mp = min_power_beams(s);
  if (mp.min_power > s.P * (1.0 + 1e-9)) {
    throw Error(ErrorCode::kInfeasible,
                "baseline: SINR targets exceed the power budget");
  }
  BaselineResult r;
  r.solution.receiver_type = type;
  r.solution.info_beams = std::move(mp.beams);
  r.residual_power = std::max(0.0, s.P - mp.min_power);
  return r;
}

}  // namespace

BaselineResult separate_design_type1(const Scenario& s) {
  s.validate();
  if (s.K_I > s.M - 1) {
    throw Error(ErrorCode::kInvalidInput,
                "separate_design_type1: needs K_I <= M - 1");
  }
  const EnergyProfile e = energy_matrix(s);
  if (s.K_I == 0) {
    BaselineResult r;
    r.solution.receiver_type = ReceiverType::kTypeI;
    r.residual_power = s.P;
    r.solution.energy_beams.push_back(std::sqrt(s.P) * e.v_E);
    r.objective = objective_value(r.solution, s);
    return r;
  }
  BaselineResult r = from_min_power(s, ReceiverType::kTypeI);
  if (r.residual_power > 0.0) {
    const CMat vbar = null_space_basis(s.H);
    const HermitianMatrix projected(vbar.adjoint() * e.G.mat() * vbar);
    const DominantEigpair dom = dominant_eigpair(projected);
    const CVec dir = vbar * dom.vector;
    r.solution.energy_beams.push_back(std::sqrt(r.residual_power) * dir);
  }
  r.objective = objective_value(r.solution, s);
  return r;
}

BaselineResult separate_design_type2(const Scenario& s) {
  s.validate();
  const EnergyProfile e = energy_matrix(s);
  if (s.K_I == 0) {
    BaselineResult r;
    r.solution.receiver_type = ReceiverType::kTypeII;
    r.residual_power = s.P;
    r.solution.energy_beams.push_back(std::sqrt(s.P) * e.v_E);
    r.objective = objective_value(r.solution, s);
    return r;
  }
  BaselineResult r = from_min_power(s, ReceiverType::kTypeII);
  if (r.residual_power > 0.0) {
    r.solution.energy_beams.push_back(std::sqrt(r.residual_power) * e.v_E);
  }
  r.objective = objective_value(r.solution, s);
  return r;
}

}  // namespace swipt
