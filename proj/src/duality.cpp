#include "swipt/duality.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "swipt/feasibility.hpp"

namespace swipt {

namespace {

// Relative margin used to evaluate the inner problem "at" beta = xi_E from
// the bounded side; the limit is approached instead of the singular point.
constexpr double kXiShiftRel = 1e-9;

double xi_shift(double xi) { return kXiShiftRel * std::max(1.0, xi); }

CMat effective_noise(double beta, const EnergyProfile& e) {
  const int m = e.G.n();
  return beta * CMat::Identity(m, m) - e.G.mat();
}

CMat build_z(int i, const RVec& lambdas, const CMat& noise,
             const Scenario& s) {
  CMat z = noise;
  for (int k = 0; k < s.K_I; ++k) {
    if (k == i) continue;
    z += lambdas[k] * s.H.row(k).adjoint() * s.H.row(k);
  }
  return z;
}

bool converged(const RVec& prev, const RVec& next, double tol) {
  for (Eigen::Index i = 0; i < prev.size(); ++i) {
    if (std::abs(next[i] - prev[i]) > tol * (1.0 + std::abs(next[i]))) {
      return false;
    }
  }
  return true;
}

// Minimized generalized Rayleigh quotient gamma * min_w (w^H Z w)/|h w|^2
// from a precomputed eigendecomposition of Z. A strictly null direction of
// Z visible to h drives the minimum (and hence the updated power) to zero.
double power_update(const Eigen::SelfAdjointEigenSolver<CMat>& es,
                    const CVec& h_col, double gamma, double psd_tol) {
  const RVec& ev = es.eigenvalues();
  const double max_ev = ev.cwiseAbs().maxCoeff();
  const double null_cut = std::max(psd_tol, 1e-13 * max_ev);
  double quad = 0.0;
  double null_mass = 0.0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    const double comp = std::norm(es.eigenvectors().col(k).dot(h_col));
    if (ev[k] > null_cut) {
      quad += comp / ev[k];
    } else {
      null_mass += comp;
    }
  }
  if (null_mass > 1e-12 * h_col.squaredNorm()) return 0.0;
  if (quad <= 0.0) {
    throw Error(ErrorCode::kSolverFailure, "power_update: degenerate channel");
  }
  return gamma / quad;
}

}  // namespace

void SolverOptions::validate() const {
  if (fp_tol <= 0 || bisect_tol <= 0 || psd_tol <= 0 || max_fp_iters <= 0 ||
      max_bisect_iters <= 0 || bracket_growth <= 1.0) {
    throw Error(ErrorCode::kInvalidInput, "SolverOptions: invalid values");
  }
}

RVec fixed_point_map(const RVec& lambdas, const HermitianMatrix& noise,
                     const Scenario& s, double psd_tol) {
  RVec out(s.K_I);
  for (int i = 0; i < s.K_I; ++i) {
    const CMat z = build_z(i, lambdas, noise.mat(), s);
    Eigen::SelfAdjointEigenSolver<CMat> es(z);
    if (es.eigenvalues().minCoeff() < -psd_tol) {
      throw NonPsdNoiseError(i, "fixed_point_map: Z_i not PSD");
    }
    out[i] = power_update(es, s.H.row(i).adjoint(), s.gamma[i], psd_tol);
  }
  return out;
}

std::vector<CVec> mmse_receivers(const RVec& lambdas,
                                 const HermitianMatrix& noise,
                                 const Scenario& s, double psd_tol) {
  std::vector<CVec> receivers(s.K_I);
  for (int i = 0; i < s.K_I; ++i) {
    const HermitianMatrix z(build_z(i, lambdas, noise.mat(), s));
    if (!is_psd(z, psd_tol)) {
      throw NonPsdNoiseError(i, "mmse_receivers: Z_i not PSD");
    }
    CVec w = pinv(z).mat() * s.H.row(i).adjoint();
    const double nrm = w.norm();
    if (nrm <= 0.0) {
      throw Error(ErrorCode::kSolverFailure, "mmse_receivers: zero receiver");
    }
    receivers[i] = w / nrm;
  }
  return receivers;
}

PowerCouplingSystem build_coupling(const std::vector<CVec>& receivers,
                                   const Scenario& s) {
  const int k = s.K_I;
  PowerCouplingSystem sys;
  sys.D = RMat::Zero(k, k);
  sys.u = RVec::Zero(k);
  for (int i = 0; i < k; ++i) {
    const double own = std::norm((s.H.row(i) * receivers[i])(0));
    if (own <= 0.0) {
      throw Error(ErrorCode::kSolverFailure,
                  "build_coupling: receiver orthogonal to own channel");
    }
    sys.u[i] = s.gamma[i] * s.sigma2[i] / own;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      sys.D(i, j) = s.gamma[i] * std::norm((s.H.row(i) * receivers[j])(0)) / own;
    }
  }
  return sys;
}

RVec downlink_power_map(const std::vector<CVec>& receivers,
                        const Scenario& s) {
  const PowerCouplingSystem sys = build_coupling(receivers, s);
  const int k = s.K_I;
  if (k == 0) return RVec(0);
  if (spectral_radius(sys.D.cast<Complex>()) >= 1.0 - 1e-12) {
    throw Error(ErrorCode::kSolverFailure,
                "downlink_power_map: coupling spectral radius >= 1");
  }
  RVec p = (RMat::Identity(k, k) - sys.D).partialPivLu().solve(sys.u);
  if (p.minCoeff() < 0.0) {
    throw Error(ErrorCode::kSolverFailure,
                "downlink_power_map: negative power");
  }
  return p;
}

namespace {

FixedPointSolution finish_solution(const RVec& lambdas, const CMat& noise,
                                   const Scenario& s,
                                   const SolverOptions& opts, int iters) {
  FixedPointSolution sol;
  sol.lambdas = lambdas;
  sol.iterations = iters;
  sol.receivers =
      mmse_receivers(lambdas, HermitianMatrix(noise), s, opts.psd_tol);
  const RVec p = downlink_power_map(sol.receivers, s);
  sol.beams.resize(s.K_I);
  for (int i = 0; i < s.K_I; ++i) {
    sol.beams[i] = std::sqrt(p[i]) * sol.receivers[i];
  }
  sol.uplink_objective = lambdas.dot(s.sigma2);
  sol.downlink_objective = 0.0;
  for (int i = 0; i < s.K_I; ++i) {
    sol.downlink_objective += std::real(sol.beams[i].dot(noise * sol.beams[i]));
  }
  return sol;
}

}  // namespace

FixedPointSolution solve_uplink_psd(const HermitianMatrix& noise,
                                    const Scenario& s,
                                    const SolverOptions& opts,
                                    double divergence_cap) {
  opts.validate();
  RVec lambdas = RVec::Zero(s.K_I);
  RVec first_iterate;
  for (int n = 1; n <= opts.max_fp_iters; ++n) {
    RVec next(s.K_I);
    for (int i = 0; i < s.K_I; ++i) {
      const CMat z = build_z(i, lambdas, noise.mat(), s);
      const CVec h = s.H.row(i).adjoint();
      Eigen::LLT<CMat> llt(z);
      if (llt.info() != Eigen::Success) {
        // Near-singular PSD noise; fall back to the spectral route.
        Eigen::SelfAdjointEigenSolver<CMat> es(z);
        if (es.eigenvalues().minCoeff() < -opts.psd_tol) {
          throw NonPsdNoiseError(i, "solve_uplink_psd: Z_i not PSD");
        }
        next[i] = power_update(es, h, s.gamma[i], opts.psd_tol);
        continue;
      }
      const double quad = std::real(h.dot(llt.solve(h)));
      if (quad <= 0.0) {
        throw Error(ErrorCode::kSolverFailure, "solve_uplink_psd: bad quad");
      }
      next[i] = s.gamma[i] / quad;
    }
    if (n == 1) first_iterate = next;
    if (divergence_cap > 0.0) {
      for (int i = 0; i < s.K_I; ++i) {
        if (next[i] > divergence_cap * std::max(first_iterate[i], 1e-300)) {
          throw Error(ErrorCode::kInfeasible,
                      "SINR targets unachievable at any power");
        }
      }
    }
    const bool done = converged(lambdas, next, opts.fp_tol);
    lambdas = next;
    if (done) return finish_solution(lambdas, noise.mat(), s, opts, n);
  }
  throw Error(ErrorCode::kNoConvergence,
              "solve_uplink_psd: fixed point did not converge");
}

FixedPointSolution algorithm1(double beta, const Scenario& s,
                              const EnergyProfile& e,
                              const SolverOptions& opts) {
  if (beta < e.xi_E - opts.psd_tol) {
    throw Error(ErrorCode::kInvalidInput, "algorithm1: beta below xi_E");
  }
  const double beta_eval = std::max(beta, e.xi_E + xi_shift(e.xi_E));
  FixedPointSolution sol = solve_uplink_psd(
      HermitianMatrix(effective_noise(beta_eval, e)), s, opts);
  // Report the weighted downlink power at the requested beta.
  const CMat noise = effective_noise(beta, e);
  sol.downlink_objective = 0.0;
  for (const CVec& w : sol.beams) {
    sol.downlink_objective += std::real(w.dot(noise * w));
  }
  return sol;
}

RVec init_lambda(double beta, const Scenario& s, const EnergyProfile& e,
                 const SolverOptions& opts) {
  // Warm start from the fixed point at xi_E: shrinking the effective noise
  // keeps a tight point feasible for every smaller beta.
  RVec lambdas = algorithm1(e.xi_E, s, e, opts).lambdas;
  const CMat noise = effective_noise(beta, e);
  for (int attempt = 0; attempt <= 40; ++attempt) {
    bool all_psd = true;
    for (int i = 0; i < s.K_I && all_psd; ++i) {
      all_psd = is_psd(HermitianMatrix(build_z(i, lambdas, noise, s)),
                       opts.psd_tol);
    }
    if (all_psd) break;
    lambdas *= opts.bracket_growth;
  }
  return lambdas;  // a failed guard here is resolved by Algorithm 2 itself
}

Algorithm2Result algorithm2(double beta, const Scenario& s,
                            const EnergyProfile& e, const RVec& lambdas0,
                            const SolverOptions& opts) {
  opts.validate();
  if (beta < 0.0 || beta >= e.xi_E) {
    throw Error(ErrorCode::kInvalidInput, "algorithm2: need 0 <= beta < xi_E");
  }
  const CMat noise = effective_noise(beta, e);
  Algorithm2Result res;
  RVec lambdas = lambdas0;
  for (int n = 1; n <= opts.max_fp_iters; ++n) {
    RVec next(s.K_I);
    for (int i = 0; i < s.K_I; ++i) {
      const CMat z = build_z(i, lambdas, noise, s);
      Eigen::SelfAdjointEigenSolver<CMat> es(z);
      if (es.eigenvalues().minCoeff() < -opts.psd_tol) {
        res.bounded = false;
        res.guard_receiver = i;
        res.final_lambdas = lambdas;
        return res;
      }
      next[i] =
          power_update(es, s.H.row(i).adjoint(), s.gamma[i], opts.psd_tol);
    }
    // The exact map is monotone non-increasing from a feasible start; the
    // clamp removes roundoff wobble at convergence.
    next = next.cwiseMin(lambdas);
    const bool done = converged(lambdas, next, opts.fp_tol);
    lambdas = next;
    if (done) {
      res.bounded = true;
      res.final_lambdas = lambdas;
      res.solution = finish_solution(lambdas, noise, s, opts, n);
      return res;
    }
  }
  throw Error(ErrorCode::kNoConvergence, "algorithm2: did not converge");
}

namespace {

DualEval eval_from_solution(double beta, double p_budget,
                            FixedPointSolution&& sol) {
  DualEval ev;
  ev.unbounded = false;
  ev.g_value = sol.downlink_objective;
  ev.value = beta * p_budget - ev.g_value;
  double used = 0.0;
  for (const CVec& w : sol.beams) used += w.squaredNorm();
  ev.subgradient = p_budget - used;
  ev.beams = sol.beams;
  ev.state.beta = beta;
  ev.state.lambdas = sol.lambdas;
  ev.state.receivers = sol.receivers;
  ev.iterations = sol.iterations;
  return ev;
}

}  // namespace

DualEval f1(double beta, const Scenario& s, const EnergyProfile& e,
            const SolverOptions& opts) {
  if (beta < 0.0) {
    throw Error(ErrorCode::kInvalidInput, "f1: beta < 0");
  }
  if (beta >= e.xi_E - opts.psd_tol) {
    return eval_from_solution(beta, s.P, algorithm1(beta, s, e, opts));
  }
  const RVec lambdas0 = init_lambda(beta, s, e, opts);
  Algorithm2Result res = algorithm2(beta, s, e, lambdas0, opts);
  if (!res.bounded) {
    DualEval ev;
    ev.unbounded = true;
    ev.state.beta = beta;
    ev.state.lambdas = res.final_lambdas;
    return ev;
  }
  return eval_from_solution(beta, s.P, std::move(res.solution));
}

DualEval f2(double beta, const Scenario& s, const EnergyProfile& e,
            const SolverOptions& opts) {
  if (beta < 0.0) {
    throw Error(ErrorCode::kInvalidInput, "f2: beta < 0");
  }
  if (beta < e.xi_E * (1.0 - 1e-12) - opts.psd_tol) {
    DualEval ev;  // the energy-beam term is unbounded above for beta < xi_E
    ev.unbounded = true;
    ev.state.beta = beta;
    return ev;
  }
  return eval_from_solution(std::max(beta, e.xi_E), s.P,
                            algorithm1(std::max(beta, e.xi_E), s, e, opts));
}

namespace {

void require_feasible(const Scenario& s) {
  if (!is_feasible(s)) {
    throw Error(ErrorCode::kInfeasible,
                "scenario infeasible under the power budget");
  }
}

SolveReport oebf_report_p1(const Scenario& s, const EnergyProfile& e,
                           const RVec& p) {
  SolveReport r;
  r.solution.receiver_type = ReceiverType::kTypeI;
  const double psum = p.sum();
  const double scale = psum > 0.0 ? s.P / psum : 0.0;
  for (int i = 0; i < s.K_I; ++i) {
    r.solution.info_beams.push_back(std::sqrt(scale * p[i]) * e.v_E);
  }
  r.dual_beta = e.xi_E;
  r.uplink_lambdas.assign(s.K_I, 0.0);
  r.region = Region::kR3;
  finalize_report(r, s);
  return r;
}

SolveReport oebf_report_p2(const Scenario& s, const EnergyProfile& e,
                           const RVec& p) {
  // Scaling the aligned information beams up to the budget keeps every
  // (energy-interference-free) SINR satisfied and reaches xi_E * P without
  // a dedicated energy beam.
  SolveReport r;
  r.solution.receiver_type = ReceiverType::kTypeII;
  const double psum = p.sum();
  const double scale = psum > 0.0 ? s.P / psum : 0.0;
  for (int i = 0; i < s.K_I; ++i) {
    r.solution.info_beams.push_back(std::sqrt(scale * p[i]) * e.v_E);
  }
  r.dual_beta = e.xi_E;
  r.uplink_lambdas.assign(s.K_I, 0.0);
  r.region = Region::kR3;
  finalize_report(r, s);
  return r;
}

SolveReport pure_energy_report(const Scenario& s, const EnergyProfile& e,
                               ReceiverType type) {
  SolveReport r;
  r.solution.receiver_type = type;
  r.solution.energy_beams.push_back(std::sqrt(s.P) * e.v_E);
  r.dual_beta = e.xi_E;
  r.region = Region::kR3;
  finalize_report(r, s);
  return r;
}

// Doubling bracket: grow beta until the subgradient turns positive.
DualEval find_upper(double& beta_up, const Scenario& s,
                    const EnergyProfile& e, const SolverOptions& opts,
                    int& iters) {
  beta_up = std::max(e.xi_E, 1.0);
  for (int k = 0; k < opts.max_bisect_iters; ++k) {
    DualEval ev = f1(beta_up, s, e, opts);
    iters += ev.iterations;
    if (!ev.unbounded && ev.subgradient > 0.0) return ev;
    beta_up *= opts.bracket_growth;
  }
  throw Error(ErrorCode::kNoConvergence, "no positive-subgradient bracket");
}

}  // namespace

SolveReport solve_p1(const Scenario& s, const SolverOptions& opts) {
  opts.validate();
  s.validate();
  const EnergyProfile e = energy_matrix(s);
  if (s.K_I == 0) return pure_energy_report(s, e, ReceiverType::kTypeI);
  require_feasible(s);
  if (auto p = oebf_feasibility(s)) {
    return oebf_report_p1(s, e, *p);
  }
  int iters = 0;
  double beta_up = 0.0;
  DualEval hi_eval = find_upper(beta_up, s, e, opts, iters);
  double lo = 0.0;
  double hi = beta_up;
  // The residual budget at hi bounds the final rescale, which perturbs the
  // achieved SINRs; drive it down along with the interval width.
  for (int k = 0; k < opts.max_bisect_iters &&
                  (hi - lo > opts.bisect_tol * hi ||
                   hi_eval.subgradient > 1e-3 * opts.bisect_tol * s.P);
       ++k) {
    const double mid = 0.5 * (lo + hi);
    DualEval ev = f1(mid, s, e, opts);
    iters += ev.iterations;
    if (ev.unbounded || ev.subgradient < 0.0) {
      lo = mid;
    } else {
      hi = mid;
      hi_eval = std::move(ev);
    }
  }
  SolveReport r;
  r.solution.receiver_type = ReceiverType::kTypeI;
  r.solution.info_beams = hi_eval.beams;
  // The optimum exhausts the budget; scaling up preserves every SINR.
  double used = 0.0;
  for (const CVec& w : r.solution.info_beams) used += w.squaredNorm();
  if (used > 0.0 && used < s.P) {
    const double t = std::sqrt(s.P / used);
    for (CVec& w : r.solution.info_beams) w *= t;
  }
  r.dual_beta = hi;
  r.uplink_lambdas.assign(hi_eval.state.lambdas.data(),
                          hi_eval.state.lambdas.data() + s.K_I);
  r.iterations = iters;
  r.region = hi > e.xi_E * (1.0 + 1e-6)
                 ? Region::kR1
                 : (hi < e.xi_E * (1.0 - 1e-6) ? Region::kR2 : Region::kR3);
  finalize_report(r, s);
  return r;
}

SolveReport solve_p2(const Scenario& s, const SolverOptions& opts) {
  opts.validate();
  s.validate();
  const EnergyProfile e = energy_matrix(s);
  if (s.K_I == 0) return pure_energy_report(s, e, ReceiverType::kTypeII);
  require_feasible(s);
  if (auto p = oebf_feasibility(s)) {
    return oebf_report_p2(s, e, *p);
  }
  int iters = 0;
  SolveReport r;
  r.solution.receiver_type = ReceiverType::kTypeII;
  DualEval at_xi = f2(e.xi_E, s, e, opts);
  iters += at_xi.iterations;
  if (at_xi.subgradient >= 0.0) {
    // beta* = xi_E: the slack power goes into one energy beam along v_E.
    r.solution.info_beams = at_xi.beams;
    const double q = at_xi.subgradient;
    if (q > 0.0) r.solution.energy_beams.push_back(std::sqrt(q) * e.v_E);
    r.dual_beta = e.xi_E;
    r.uplink_lambdas.assign(at_xi.state.lambdas.data(),
                            at_xi.state.lambdas.data() + s.K_I);
    r.iterations = iters;
    r.region = Region::kR2;
    finalize_report(r, s);
    return r;
  }
  double beta_up = 0.0;
  DualEval hi_eval = find_upper(beta_up, s, e, opts, iters);
  double lo = e.xi_E;
  double hi = beta_up;
  for (int k = 0; k < opts.max_bisect_iters &&
                  (hi - lo > opts.bisect_tol * hi ||
                   hi_eval.subgradient > 1e-3 * opts.bisect_tol * s.P);
       ++k) {
    const double mid = 0.5 * (lo + hi);
    DualEval ev = f2(mid, s, e, opts);
    iters += ev.iterations;
    if (ev.unbounded || ev.subgradient < 0.0) {
      lo = mid;
    } else {
      hi = mid;
      hi_eval = std::move(ev);
    }
  }
  r.solution.info_beams = hi_eval.beams;
  double used = 0.0;
  for (const CVec& w : r.solution.info_beams) used += w.squaredNorm();
  if (used > 0.0 && used < s.P) {
    const double t = std::sqrt(s.P / used);
    for (CVec& w : r.solution.info_beams) w *= t;
  }
  r.dual_beta = hi;
  r.uplink_lambdas.assign(hi_eval.state.lambdas.data(),
                          hi_eval.state.lambdas.data() + s.K_I);
  r.iterations = iters;
  r.region = Region::kR1;
  finalize_report(r, s);
  return r;
}

Region classify_region(const Scenario& s, const SolveReport& p1,
                       const SolveReport& p2, double tol) {
  const EnergyProfile e = energy_matrix(s);
  const double xi = e.xi_E;
  auto near = [tol](double a, double b) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
  };
  const bool p1_at_xi = near(p1.dual_beta, xi) || p1.dual_beta < xi;
  const bool p2_at_xi = near(p2.dual_beta, xi);
  const bool values_equal = near(p1.objective, p2.objective);
  if (p2_at_xi && near(p1.dual_beta, xi) && near(p1.objective, xi * s.P) &&
      near(p2.objective, xi * s.P)) {
    return Region::kR3;
  }
  if (p2_at_xi && p1.dual_beta < xi * (1.0 - tol)) {
    if (p2.objective < p1.objective * (1.0 - tol) ||
        p2.energy_beam_power <= 0.0) {
      throw Error(ErrorCode::kSolverFailure,
                  "classify_region: inconsistent R2 reports");
    }
    return Region::kR2;
  }
  if (!p2_at_xi && p1.dual_beta > xi * (1.0 + tol)) {
    if (!values_equal) {
      throw Error(ErrorCode::kSolverFailure,
                  "classify_region: R1 values disagree");
    }
    return Region::kR1;
  }
  // Boundary instances: fall back to the value/energy-power signature.
  if (p2.energy_beam_power > tol * s.P && !values_equal) return Region::kR2;
  if (values_equal && near(p1.objective, xi * s.P)) return Region::kR3;
  if (values_equal) return Region::kR1;
  throw Error(ErrorCode::kSolverFailure, "classify_region: inconsistent");
}

}  // namespace swipt
