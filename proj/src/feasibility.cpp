#include "swipt/feasibility.hpp"

#include <cmath>
#include <limits>

#include "swipt/duality.hpp"

namespace swipt {

namespace {

constexpr double kDivergenceCap = 1e12;

}  // namespace

MinPowerResult min_power_beams(const Scenario& s) {
  s.validate();
  if (s.K_I == 0) {
    throw Error(ErrorCode::kInvalidInput, "min_power_beams: no ID receivers");
  }
  SolverOptions opts;
  FixedPointSolution sol = solve_uplink_psd(
      HermitianMatrix::Identity(s.M), s, opts, kDivergenceCap);
  MinPowerResult res;
  res.beams = std::move(sol.beams);
  res.lambdas = std::move(sol.lambdas);
  res.iterations = sol.iterations;
  res.min_power = 0.0;
  for (const CVec& w : res.beams) res.min_power += w.squaredNorm();
  return res;
}

bool is_feasible(const Scenario& s) {
  if (s.K_I == 0) return true;
  try {
    return min_power_beams(s).min_power <= s.P * (1.0 + 1e-9);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInfeasible) return false;
    throw;
  }
}

std::optional<RVec> oebf_feasibility(const Scenario& s) {
  s.validate();
  if (s.K_I == 0) return RVec(0);
  const EnergyProfile e = energy_matrix(s);
  if (e.xi_E <= 0.0) return std::nullopt;
  const int k = s.K_I;
  RVec a(k);
  for (int i = 0; i < k; ++i) {
    a[i] = std::norm((s.H.row(i) * e.v_E)(0));
    if (a[i] <= 1e-30) return std::nullopt;
  }
  RMat d = RMat::Zero(k, k);
  RVec u(k);
  for (int i = 0; i < k; ++i) {
    u[i] = s.gamma[i] * s.sigma2[i] / a[i];
    for (int j = 0; j < k; ++j) {
      if (j != i) d(i, j) = s.gamma[i];
    }
  }
  if (spectral_radius(d.cast<Complex>()) >= 1.0 - 1e-12) return std::nullopt;
  RVec p = (RMat::Identity(k, k) - d).partialPivLu().solve(u);
  if (p.minCoeff() < 0.0) return std::nullopt;
  if (p.sum() > s.P * (1.0 + 1e-12)) return std::nullopt;
  return p;
}

FeasibilityReport feasibility_report(const Scenario& s) {
  FeasibilityReport r;
  if (s.K_I == 0) {
    s.validate();
    r.feasible = true;
    r.oebf_powers = oebf_feasibility(s);
    return r;
  }
  try {
    MinPowerResult mp = min_power_beams(s);
    r.min_power = mp.min_power;
    r.min_power_beams = std::move(mp.beams);
    r.feasible = mp.min_power <= s.P * (1.0 + 1e-9);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasible) throw;
    r.feasible = false;
    r.min_power = std::numeric_limits<double>::infinity();
  }
  if (r.feasible) r.oebf_powers = oebf_feasibility(s);
  return r;
}

}  // namespace swipt
