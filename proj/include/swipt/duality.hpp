#ifndef SWIPT_DUALITY_HPP
#define SWIPT_DUALITY_HPP

#include <optional>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

struct SolverOptions {
  double fp_tol = 1e-9;        // absolute fixed-point stop on lambda (W)
  double bisect_tol = 1e-7;    // relative width stop on the beta interval
  double psd_tol = 1e-9;       // PSD guard tolerance
  int max_fp_iters = 10000;
  int max_bisect_iters = 200;
  double bracket_growth = 2.0;

  void validate() const;
};

// Dual uplink state: the sum-power dual beta, uplink powers lambda_i and the
// unit-norm receive beamformers.
struct UplinkState {
  double beta = 0.0;
  RVec lambdas;
  std::vector<CVec> receivers;
};

// Nonnegative coupling matrix D (zero diagonal) and positive offset u of the
// downlink power-control system p = D p + u.
struct PowerCouplingSystem {
  RMat D;
  RVec u;
};

// One evaluation of a dual function f(beta) = beta P - g(beta).
struct DualEval {
  bool unbounded = false;  // g(beta) = -inf, so f(beta) = +inf
  double value = 0.0;      // f(beta) when bounded
  double g_value = 0.0;
  double subgradient = 0.0;  // P - sum ||w_i||^2
  std::vector<CVec> beams;
  UplinkState state;
  int iterations = 0;
};

struct FixedPointSolution {
  RVec lambdas;
  std::vector<CVec> receivers;
  std::vector<CVec> beams;  // downlink beams, SINRs tight
  double uplink_objective = 0.0;    // sum lambda_i sigma_i^2
  double downlink_objective = 0.0;  // sum w_i^H N w_i
  int iterations = 0;
};

// The machinery below works on a generic effective uplink noise covariance
// N; the solvers instantiate it with beta*I - G, the feasibility module
// with the identity.

// One sweep of the uplink power update lambda'_i = m_i(lambda). Throws
// NonPsdNoiseError if some Z_i = sum_{k!=i} lambda_k h_k^H h_k + N fails
// the PSD check.
RVec fixed_point_map(const RVec& lambdas, const HermitianMatrix& noise,
                     const Scenario& s, double psd_tol);

// MMSE receive beamformers w~_i = Z_i^+ h_i^H, normalized.
std::vector<CVec> mmse_receivers(const RVec& lambdas,
                                 const HermitianMatrix& noise,
                                 const Scenario& s, double psd_tol);

// Builds the coupling system from receive beamformers and solves
// p = (I - D)^{-1} u. Throws if the spectral radius of D reaches one.
PowerCouplingSystem build_coupling(const std::vector<CVec>& receivers,
                                   const Scenario& s);
RVec downlink_power_map(const std::vector<CVec>& receivers, const Scenario& s);

// Fixed-point iteration from lambda = 0 for PSD noise (beta >= xi_E path).
// divergence_cap > 0 aborts with kInfeasible once lambda grows past
// cap * first-iterate values; used by the minimum-power search.
FixedPointSolution solve_uplink_psd(const HermitianMatrix& noise,
                                    const Scenario& s,
                                    const SolverOptions& opts,
                                    double divergence_cap = 0.0);

struct Algorithm2Result {
  bool bounded = false;
  int guard_receiver = -1;  // which Z_i failed PSD when unbounded
  FixedPointSolution solution;
  RVec final_lambdas;  // last iterate, also set on the unbounded exit
};

// Feasible warm start for the beta < xi_E iteration: the fixed point at
// beta = xi_E, inflated if needed until the PSD guard admits it.
RVec init_lambda(double beta, const Scenario& s, const EnergyProfile& e,
                 const SolverOptions& opts);

// Monotone fixed-point iteration with the per-sweep PSD guard
// (0 <= beta < xi_E). Returns the bounded fixed point or the unboundedness
// certificate.
Algorithm2Result algorithm2(double beta, const Scenario& s,
                            const EnergyProfile& e, const RVec& lambdas0,
                            const SolverOptions& opts);

// Algorithm 1 wrapper: solves the inner problem at beta >= xi_E.
FixedPointSolution algorithm1(double beta, const Scenario& s,
                              const EnergyProfile& e,
                              const SolverOptions& opts);

// Dual functions of the two outer problems.
DualEval f1(double beta, const Scenario& s, const EnergyProfile& e,
            const SolverOptions& opts);
DualEval f2(double beta, const Scenario& s, const EnergyProfile& e,
            const SolverOptions& opts);

SolveReport solve_p1(const Scenario& s, const SolverOptions& opts = {});
SolveReport solve_p2(const Scenario& s, const SolverOptions& opts = {});

Region classify_region(const Scenario& s, const SolveReport& p1,
                       const SolveReport& p2, double tol = 1e-4);

}  // namespace swipt

#endif  // SWIPT_DUALITY_HPP
