#include "swipt/sdr.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

namespace swipt {

BlockMatrix BlockMatrix::Zero(const std::vector<int>& sizes) {
  BlockMatrix b;
  b.blocks.reserve(sizes.size());
  for (int n : sizes) b.blocks.push_back(RMat::Zero(n, n));
  return b;
}

BlockMatrix BlockMatrix::Identity(const std::vector<int>& sizes) {
  BlockMatrix b;
  b.blocks.reserve(sizes.size());
  for (int n : sizes) b.blocks.push_back(RMat::Identity(n, n));
  return b;
}

double BlockMatrix::dot(const BlockMatrix& other) const {
  double s = 0.0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    s += blocks[i].cwiseProduct(other.blocks[i]).sum();
  }
  return s;
}

double BlockMatrix::norm() const { return std::sqrt(dot(*this)); }

double BlockMatrix::trace() const {
  double s = 0.0;
  for (const RMat& b : blocks) s += b.trace();
  return s;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& other) {
  for (size_t i = 0; i < blocks.size(); ++i) blocks[i] += other.blocks[i];
  return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& other) {
  for (size_t i = 0; i < blocks.size(); ++i) blocks[i] -= other.blocks[i];
  return *this;
}

BlockMatrix& BlockMatrix::operator*=(double t) {
  for (RMat& b : blocks) b *= t;
  return *this;
}

void RealSdp::validate() const {
  const size_t nb = block_sizes.size();
  if (nb == 0 || objective.blocks.size() != nb) {
    throw Error(ErrorCode::kDimensionMismatch, "sdp: objective blocks");
  }
  if (constraints.size() != senses.size() ||
      static_cast<Eigen::Index>(constraints.size()) != rhs.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "sdp: constraint counts");
  }
  auto check = [&](const BlockMatrix& m, const char* what) {
    if (m.blocks.size() != nb) {
      throw Error(ErrorCode::kDimensionMismatch, what);
    }
    for (size_t b = 0; b < nb; ++b) {
      if (m.blocks[b].rows() != block_sizes[b] ||
          m.blocks[b].cols() != block_sizes[b]) {
        throw Error(ErrorCode::kDimensionMismatch, what);
      }
      if ((m.blocks[b] - m.blocks[b].transpose()).cwiseAbs().maxCoeff() >
          1e-12 * (1.0 + m.blocks[b].cwiseAbs().maxCoeff())) {
        throw Error(ErrorCode::kInvalidInput, "sdp: non-symmetric matrix");
      }
    }
  };
  check(objective, "sdp: objective shape");
  for (const BlockMatrix& a : constraints) check(a, "sdp: constraint shape");
}

double RealSdp::constraint_value(int m, const BlockMatrix& x) const {
  return constraints[m].dot(x);
}

namespace {

bool chol_pd(const BlockMatrix& x) {
  for (const RMat& b : x.blocks) {
    Eigen::LLT<RMat> llt(b);
    if (llt.info() != Eigen::Success) return false;
  }
  return true;
}

// Largest alpha with X + alpha dX still PSD, from the smallest eigenvalue
// of the Cholesky-scaled direction L^{-1} dX L^{-T}.
double max_step(const BlockMatrix& x, const BlockMatrix& dx) {
  double alpha = std::numeric_limits<double>::infinity();
  for (size_t b = 0; b < x.blocks.size(); ++b) {
    Eigen::LLT<RMat> llt(x.blocks[b]);
    if (llt.info() != Eigen::Success) return 0.0;
    const RMat l = llt.matrixL();
    const RMat tmp =
        l.triangularView<Eigen::Lower>().solve(dx.blocks[b]);
    RMat s = l.triangularView<Eigen::Lower>().solve(tmp.transpose());
    s = 0.5 * (s + s.transpose());
    const double lam_min =
        Eigen::SelfAdjointEigenSolver<RMat>(s, Eigen::EigenvaluesOnly)
            .eigenvalues()
            .minCoeff();
    if (lam_min < 0.0) alpha = std::min(alpha, -1.0 / lam_min);
  }
  return alpha;
}

struct InternalSdp {
  // min <c, X> s.t. <a_m, X> = b_m, X block-PSD; slack blocks appended.
  std::vector<int> sizes;
  BlockMatrix c;
  std::vector<BlockMatrix> a;
  RVec b;
  int orig_blocks = 0;
  RVec row_scale;   // divide row m by row_scale[m]
  double obj_scale = 1.0;
};

InternalSdp to_internal(const RealSdp& p) {
  InternalSdp in;
  in.orig_blocks = static_cast<int>(p.block_sizes.size());
  in.sizes = p.block_sizes;
  const int rows = static_cast<int>(p.constraints.size());
  for (int m = 0; m < rows; ++m) {
    if (p.senses[m] != ConstraintSense::kEq) in.sizes.push_back(1);
  }
  in.obj_scale = std::max(p.objective.norm(), 1e-300);
  in.c = BlockMatrix::Zero(in.sizes);
  for (int b = 0; b < in.orig_blocks; ++b) {
    in.c.blocks[b] = -p.objective.blocks[b] / in.obj_scale;
  }
  in.b = RVec(rows);
  in.row_scale = RVec(rows);
  int slack = in.orig_blocks;
  for (int m = 0; m < rows; ++m) {
    BlockMatrix am = BlockMatrix::Zero(in.sizes);
    const double s = std::max(p.constraints[m].norm(), 1e-300);
    in.row_scale[m] = s;
    for (int b = 0; b < in.orig_blocks; ++b) {
      am.blocks[b] = p.constraints[m].blocks[b] / s;
    }
    if (p.senses[m] == ConstraintSense::kGe) {
      am.blocks[slack](0, 0) = -1.0;
      ++slack;
    } else if (p.senses[m] == ConstraintSense::kLe) {
      am.blocks[slack](0, 0) = 1.0;
      ++slack;
    }
    in.b[m] = p.rhs[m] / s;
    in.a.push_back(std::move(am));
  }
  return in;
}

}  // namespace

RealSdpSolution solve_real_sdp(const RealSdp& p, double tol, int max_iters) {
  p.validate();
  if (tol <= 0.0) throw Error(ErrorCode::kInvalidInput, "sdp: tol <= 0");
  int total = 0;
  for (int n : p.block_sizes) total += n;
  if (total > 64 || p.constraints.size() > 16) {
    throw Error(ErrorCode::kInvalidInput, "sdp: beyond desk-scale limits");
  }
  const InternalSdp in = to_internal(p);
  const int rows = static_cast<int>(in.a.size());
  int n_total = 0;
  for (int n : in.sizes) n_total += n;

  const double b_inf = rows > 0 ? in.b.cwiseAbs().maxCoeff() : 0.0;
  const double tau_p = std::max(1.0, 10.0 * b_inf);
  const double tau_d = std::max(1.0, in.c.norm());
  BlockMatrix x = BlockMatrix::Identity(in.sizes);
  x *= tau_p;
  BlockMatrix z = BlockMatrix::Identity(in.sizes);
  z *= tau_d;
  RVec y = RVec::Zero(rows);

  const int nb = static_cast<int>(in.sizes.size());
  const bool trace = std::getenv("SWIPT_SDP_TRACE") != nullptr;
  SdpTermination term;
  bool stalled = false;
  for (int iter = 1; iter <= max_iters; ++iter) {
    RVec rp(rows);
    for (int m = 0; m < rows; ++m) rp[m] = in.b[m] - in.a[m].dot(x);
    BlockMatrix rd = in.c;
    rd -= z;
    for (int m = 0; m < rows; ++m) {
      for (int b = 0; b < nb; ++b) {
        rd.blocks[b] -= y[m] * in.a[m].blocks[b];
      }
    }
    const double gap = x.dot(z);
    const double pobj = in.c.dot(x);
    const double dobj = rows > 0 ? in.b.dot(y) : 0.0;
    term.primal_res =
        (rows > 0 ? rp.cwiseAbs().maxCoeff() : 0.0) / (1.0 + b_inf);
    term.dual_res = rd.norm() / (1.0 + in.c.norm());
    term.gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    term.iterations = iter - 1;
    if (trace) {
      std::fprintf(stderr, "sdp iter=%d rp=%.3e rd=%.3e gap=%.3e xz=%.3e\n",
                   iter, term.primal_res, term.dual_res, term.gap, gap);
    }
    if (term.primal_res <= tol && term.dual_res <= tol && term.gap <= tol) {
      term.optimal = true;
      break;
    }
    if (!std::isfinite(gap) || gap > 1e16) break;

    const double mu = gap / n_total;

    std::vector<Eigen::LLT<RMat>> zf(nb);
    bool z_ok = true;
    for (int b = 0; b < nb; ++b) {
      zf[b].compute(z.blocks[b]);
      if (zf[b].info() != Eigen::Success) z_ok = false;
    }
    if (!z_ok) {
      stalled = true;
      break;
    }
    auto zinv_mul = [&](int b, const RMat& m) { return zf[b].solve(m); };

    // Schur complement M_ij = <A_i, X A_j Z^{-1}> and the HKM direction.
    std::vector<BlockMatrix> t(rows);
    for (int j = 0; j < rows; ++j) {
      t[j] = BlockMatrix::Zero(in.sizes);
      for (int b = 0; b < nb; ++b) {
        t[j].blocks[b] =
            zinv_mul(b, in.a[j].blocks[b] * x.blocks[b]).transpose();
      }
    }
    RMat schur(rows, rows);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < rows; ++j) {
        double s = 0.0;
        for (int b = 0; b < nb; ++b) {
          s += (in.a[i].blocks[b].cwiseProduct(t[j].blocks[b].transpose()))
                   .sum();
        }
        schur(i, j) = s;
      }
    }
    Eigen::PartialPivLU<RMat> schur_lu(schur);

    BlockMatrix x_rd_zinv = BlockMatrix::Zero(in.sizes);
    for (int b = 0; b < nb; ++b) {
      x_rd_zinv.blocks[b] =
          zinv_mul(b, rd.blocks[b] * x.blocks[b]).transpose();
    }

    auto solve_direction = [&](double sigma_mu, RVec& dy, BlockMatrix& dz,
                               BlockMatrix& dx) {
      RVec rhs(rows);
      for (int i = 0; i < rows; ++i) {
        double corr = 0.0;
        for (int b = 0; b < nb; ++b) {
          const RMat zinv_b = zinv_mul(b, RMat::Identity(in.sizes[b],
                                                         in.sizes[b]));
          corr += (in.a[i].blocks[b].cwiseProduct(
                       (sigma_mu * zinv_b - x.blocks[b] -
                        x_rd_zinv.blocks[b]).transpose()))
                      .sum();
        }
        rhs[i] = rp[i] - corr;
      }
      dy = rows > 0 ? RVec(schur_lu.solve(rhs)) : RVec(0);
      dz = rd;
      for (int m = 0; m < rows; ++m) {
        for (int b = 0; b < nb; ++b) {
          dz.blocks[b] -= dy[m] * in.a[m].blocks[b];
        }
      }
      dx = BlockMatrix::Zero(in.sizes);
      for (int b = 0; b < nb; ++b) {
        const int nbk = in.sizes[b];
        RMat d = sigma_mu * zinv_mul(b, RMat::Identity(nbk, nbk)) -
                 x.blocks[b] -
                 zinv_mul(b, dz.blocks[b] * x.blocks[b]).transpose();
        dx.blocks[b] = 0.5 * (d + d.transpose());
      }
    };

    RVec dy;
    BlockMatrix dz, dx;
    solve_direction(0.0, dy, dz, dx);
    const double ap_aff = std::min(1.0, max_step(x, dx));
    const double ad_aff = std::min(1.0, max_step(z, dz));
    BlockMatrix x_aff = x;
    BlockMatrix z_aff = z;
    for (int b = 0; b < nb; ++b) {
      x_aff.blocks[b] += ap_aff * dx.blocks[b];
      z_aff.blocks[b] += ad_aff * dz.blocks[b];
    }
    const double mu_aff = x_aff.dot(z_aff) / n_total;
    double sigma = std::pow(mu_aff / mu, 3.0);
    sigma = std::clamp(sigma, 1e-4, 0.9);

    solve_direction(sigma * mu, dy, dz, dx);
    const double ap = std::min(1.0, 0.98 * max_step(x, dx));
    const double ad = std::min(1.0, 0.98 * max_step(z, dz));
    if (ap < 1e-10 && ad < 1e-10) {
      stalled = true;
      break;
    }
    for (int b = 0; b < nb; ++b) {
      x.blocks[b] += ap * dx.blocks[b];
      z.blocks[b] += ad * dz.blocks[b];
    }
    y += ad * dy;
    term.iterations = iter;
  }

  if (!term.optimal) {
    if (stalled) {
      throw Error(ErrorCode::kSolverFailure, "sdp: interior point stalled");
    }
    throw Error(ErrorCode::kNoConvergence,
                "sdp: certificates not reached within iteration limit");
  }

  RealSdpSolution sol;
  sol.term = term;
  sol.X.blocks.assign(x.blocks.begin(), x.blocks.begin() + in.orig_blocks);
  sol.Z.blocks.assign(z.blocks.begin(), z.blocks.begin() + in.orig_blocks);
  for (RMat& b : sol.Z.blocks) b *= in.obj_scale;
  sol.y = RVec(rows);
  for (int m = 0; m < rows; ++m) {
    sol.y[m] = y[m] * in.obj_scale / in.row_scale[m];
  }
  sol.value = p.objective.dot(sol.X);
  return sol;
}

RMat embed_complex(const HermitianMatrix& h) {
  const int n = h.n();
  RMat out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.mat().real();
  out.bottomRightCorner(n, n) = h.mat().real();
  out.topRightCorner(n, n) = -h.mat().imag();
  out.bottomLeftCorner(n, n) = h.mat().imag();
  return out;
}

namespace {

// Half-embedding: trace products against half-embedded data equal their
// complex counterparts exactly.
RMat half_embed(const CMat& a) { return 0.5 * embed_complex(HermitianMatrix(a)); }

CMat recover_complex(const RMat& x) {
  const int n = static_cast<int>(x.rows()) / 2;
  CMat w(n, n);
  w.real() = 0.5 * (x.topLeftCorner(n, n) + x.bottomRightCorner(n, n));
  w.imag() = 0.5 * (x.bottomLeftCorner(n, n) - x.topRightCorner(n, n));
  return 0.5 * (w + CMat(w.adjoint()));
}

RealSdp build_sdr(const Scenario& s, bool energy_in_sinr) {
  s.validate();
  const EnergyProfile e = energy_matrix(s);
  RealSdp p;
  const int nblocks = s.K_I + 1;  // W_1..W_K, then W_E
  p.block_sizes.assign(nblocks, 2 * s.M);
  const RMat g_half = half_embed(e.G.mat());
  p.objective.blocks.assign(nblocks, g_half);

  for (int i = 0; i < s.K_I; ++i) {
    BlockMatrix a = BlockMatrix::Zero(p.block_sizes);
    const CMat hh = s.H.row(i).adjoint() * s.H.row(i);
    const RMat hh_half = half_embed(hh);
    for (int k = 0; k < s.K_I; ++k) {
      a.blocks[k] = (k == i) ? RMat(hh_half / s.gamma[i]) : RMat(-hh_half);
    }
    if (energy_in_sinr) a.blocks[s.K_I] = -hh_half;
    p.constraints.push_back(std::move(a));
    p.senses.push_back(ConstraintSense::kGe);
  }
  BlockMatrix power = BlockMatrix::Zero(p.block_sizes);
  for (int b = 0; b < nblocks; ++b) {
    power.blocks[b] = half_embed(CMat::Identity(s.M, s.M));
  }
  p.constraints.push_back(std::move(power));
  p.senses.push_back(ConstraintSense::kLe);
  p.rhs = RVec(s.K_I + 1);
  for (int i = 0; i < s.K_I; ++i) p.rhs[i] = s.sigma2[i];
  p.rhs[s.K_I] = s.P;
  return p;
}

}  // namespace

RealSdp build_sdr1(const Scenario& s) { return build_sdr(s, true); }

RealSdp build_sdr2(const Scenario& s) { return build_sdr(s, false); }

SdrSolution solve_sdp(const RealSdp& p, double tol) {
  RealSdpSolution raw = solve_real_sdp(p, tol);
  SdrSolution sol;
  const int nblocks = static_cast<int>(p.block_sizes.size());
  for (int b = 0; b + 1 < nblocks; ++b) {
    sol.W.push_back(recover_complex(raw.X.blocks[b]));
  }
  sol.W_E = recover_complex(raw.X.blocks[nblocks - 1]);
  // Blocks whose mass sits at the solver's complementarity noise floor are
  // numerically zero; drop them so downstream structure checks see exact
  // zeros instead of interior-point dust.
  double total_trace = std::real(sol.W_E.trace());
  for (const CMat& w : sol.W) total_trace += std::real(w.trace());
  const double floor = 1e3 * tol * std::max(total_trace, 0.0);
  for (CMat& w : sol.W) {
    if (std::real(w.trace()) <= floor) w.setZero();
  }
  if (std::real(sol.W_E.trace()) <= floor) sol.W_E.setZero();
  sol.value = raw.value;
  sol.term = raw.term;
  std::vector<double> lambdas;
  for (size_t m = 0; m < p.senses.size(); ++m) {
    if (p.senses[m] == ConstraintSense::kGe) {
      lambdas.push_back(std::max(0.0, raw.y[m]));
    } else if (p.senses[m] == ConstraintSense::kLe) {
      sol.beta = std::max(0.0, -raw.y[m]);
    }
  }
  sol.lambdas = Eigen::Map<RVec>(lambdas.data(), lambdas.size());
  return sol;
}

CVec extract_rank_one(const HermitianMatrix& w, double tol) {
  const EigenDecomposition ed = hermitian_eig(w);
  const double tr = ed.values.sum();
  if (tr <= 0.0) {
    throw Error(ErrorCode::kRankDeficient, "extract_rank_one: zero matrix");
  }
  const double ratio = ed.values[0] / tr;
  if (ratio < 1.0 - tol) {
    throw Error(ErrorCode::kRankDeficient,
                "extract_rank_one: dominant-eigenvalue ratio below threshold");
  }
  return std::sqrt(std::max(0.0, ed.values[0])) * ed.vectors.col(0);
}

KktMatrices kkt_matrices(const RVec& lambdas, double beta, const Scenario& s,
                         ReceiverType type) {
  const EnergyProfile e = energy_matrix(s);
  const CMat id = CMat::Identity(s.M, s.M);
  KktMatrices k;
  for (int i = 0; i < s.K_I; ++i) {
    CMat a = e.G.mat() - beta * id;
    for (int m = 0; m < s.K_I; ++m) {
      const CMat hh = s.H.row(m).adjoint() * s.H.row(m);
      a += (m == i) ? CMat(lambdas[i] / s.gamma[i] * hh)
                    : CMat(-lambdas[m] * hh);
    }
    k.A.emplace_back(a);
  }
  CMat c = e.G.mat() - beta * id;
  if (type == ReceiverType::kTypeI) {
    for (int m = 0; m < s.K_I; ++m) {
      c -= lambdas[m] * s.H.row(m).adjoint() * s.H.row(m);
    }
  }
  k.C = HermitianMatrix(c);
  return k;
}

StructureReport verify_structure(const SdrSolution& sol, const Scenario& s,
                                 ReceiverType type, double tol) {
  StructureReport rep;
  const EnergyProfile e = energy_matrix(s);
  rep.trace_we = std::real(sol.W_E.trace());
  auto fail = [&rep](const std::string& what) { rep.failures.push_back(what); };

  if (type == ReceiverType::kTypeI && s.K_I > 0) {
    if (rep.trace_we > tol * s.P) {
      fail("energy covariance not vanishing for the interference-limited type");
    }
  } else if (rep.trace_we > 1e-8 * s.P) {
    const double aligned =
        std::real(e.v_E.dot(sol.W_E * e.v_E)) / rep.trace_we;
    if (aligned < 1.0 - tol) {
      fail("energy covariance not aligned with the dominant energy direction");
    }
  }

  for (const CMat& w : sol.W) {
    const EigenDecomposition ed = hermitian_eig(HermitianMatrix(w));
    const double tr = std::max(ed.values.sum(), 1e-300);
    rep.dominant_ratios.push_back(ed.values[0] / tr);
    if (ed.values[0] / tr < 1.0 - tol) {
      fail("information covariance not rank one");
    }
  }

  const KktMatrices k = kkt_matrices(sol.lambdas, sol.beta, s, type);
  const double scale =
      std::max({e.G.frobenius_norm(), sol.beta, 1e-300});
  rep.max_kkt_eigenvalue = -std::numeric_limits<double>::infinity();
  auto psd_margin = [&](const HermitianMatrix& m, const std::string& name) {
    const double top = hermitian_eig(m).values[0];
    rep.max_kkt_eigenvalue = std::max(rep.max_kkt_eigenvalue, top);
    if (top > tol * scale) fail(name + " not negative semidefinite");
  };
  for (size_t i = 0; i < k.A.size(); ++i) {
    psd_margin(k.A[i], "KKT matrix A_" + std::to_string(i));
  }
  psd_margin(k.C, "KKT energy matrix");

  rep.max_slack_residual = 0.0;
  const double block_floor = 1e-8 * s.P;
  for (size_t i = 0; i < sol.W.size(); ++i) {
    const double wn = sol.W[i].norm();
    if (wn <= block_floor) continue;
    const double res = (k.A[i].mat() * sol.W[i]).norm() / (wn * scale);
    rep.max_slack_residual = std::max(rep.max_slack_residual, res);
    if (res > tol) fail("complementary slackness A_i W_i != 0");
  }
  const double wen = sol.W_E.norm();
  if (wen > block_floor) {
    const double res = (k.C.mat() * sol.W_E).norm() / (wen * scale);
    rep.max_slack_residual = std::max(rep.max_slack_residual, res);
    if (res > tol) fail("complementary slackness C W_E != 0");
  }

  rep.pass = rep.failures.empty();
  return rep;
}

bool dual_feasibility_check(const RVec& lambdas, double beta,
                            const Scenario& s, double tol) {
  if (lambdas.size() != s.K_I || lambdas.minCoeff() < 0.0 || beta < 0.0) {
    throw Error(ErrorCode::kInvalidInput, "dual_feasibility_check: inputs");
  }
  const EnergyProfile e = energy_matrix(s);
  for (int i = 0; i < s.K_I; ++i) {
    CMat z = beta * CMat::Identity(s.M, s.M) - e.G.mat();
    for (int k = 0; k < s.K_I; ++k) {
      if (k == i) continue;
      z += lambdas[k] * s.H.row(k).adjoint() * s.H.row(k);
    }
    const HermitianMatrix zh(z);
    const double norm_scale = std::max(1.0, zh.frobenius_norm());
    if (!is_psd(zh, tol * norm_scale)) return false;
    if (lambdas[i] == 0.0) continue;
    const CVec b = std::sqrt(lambdas[i] / s.gamma[i]) * s.H.row(i).adjoint();
    try {
      if (!psd_dominance_check(zh, b, tol)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

void export_sdp(const RealSdp& p, const std::string& path) {
  p.validate();
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "export_sdp: cannot open " + path);
  out << "blocks";
  for (int n : p.block_sizes) out << ' ' << n;
  out << '\n';
  out.precision(17);
  auto emit = [&](const BlockMatrix& m) {
    for (size_t b = 0; b < m.blocks.size(); ++b) {
      const RMat& blk = m.blocks[b];
      for (Eigen::Index r = 0; r < blk.rows(); ++r) {
        for (Eigen::Index c = r; c < blk.cols(); ++c) {
          if (blk(r, c) != 0.0) {
            out << b << ' ' << r << ' ' << c << ' ' << blk(r, c) << '\n';
          }
        }
      }
    }
    out << '\n';
  };
  out << "objective maximize\n";
  emit(p.objective);
  for (size_t m = 0; m < p.constraints.size(); ++m) {
    const char* sense = p.senses[m] == ConstraintSense::kGe
                            ? ">="
                            : (p.senses[m] == ConstraintSense::kLe ? "<=" : "=");
    out << "constraint " << m << ' ' << sense << ' ' << p.rhs[m] << '\n';
    emit(p.constraints[m]);
  }
  if (!out) throw Error(ErrorCode::kIoError, "export_sdp: write failed");
}

}  // namespace swipt
