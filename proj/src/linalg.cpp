#include "swipt/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace swipt {

HermitianMatrix::HermitianMatrix(const CMat& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "HermitianMatrix: not square");
  }
  if (!a.allFinite()) {
    throw Error(ErrorCode::kInvalidInput,
                "HermitianMatrix: non-finite entries");
  }
  a_ = 0.5 * (a + a.adjoint());
}

namespace {

// Rotate v so its largest-magnitude component is real-positive.
void fix_phase(Eigen::Ref<CVec> v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const Complex pivot = v[imax];
  const double mag = std::abs(pivot);
  if (mag > 0.0) {
    v *= std::conj(pivot) / mag;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMat> es(a.mat());
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kSolverFailure, "hermitian_eig failed");
  }
  const int n = a.n();
  // Eigen returns ascending order; re-sort descending while keeping the
  // original (ascending-index) order inside degenerate clusters.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return es.eigenvalues()[i] > es.eigenvalues()[j];
  });
  EigenDecomposition d;
  d.values.resize(n);
  d.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    d.values[k] = es.eigenvalues()[idx[k]];
    d.vectors.col(k) = es.eigenvectors().col(idx[k]);
    fix_phase(d.vectors.col(k));
  }
  return d;
}

DominantEigpair dominant_eigpair(const HermitianMatrix& g) {
  EigenDecomposition d = hermitian_eig(g);
  DominantEigpair p;
  p.value = d.values[0];
  p.vector = d.vectors.col(0);
  return p;
}

HermitianMatrix pinv(const HermitianMatrix& a, double tol) {
  EigenDecomposition d = hermitian_eig(a);
  const int n = a.n();
  const double max_abs = n > 0 ? d.values.cwiseAbs().maxCoeff() : 0.0;
  if (tol < 0.0) {
    tol = 1e-10 * n;
  }
  const double cutoff = tol * max_abs;
  CMat out = CMat::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double ev = d.values[k];
    if (std::abs(ev) > cutoff && ev != 0.0) {
      out += d.vectors.col(k) * d.vectors.col(k).adjoint() / ev;
    }
  }
  return HermitianMatrix(out);
}

bool is_psd(const HermitianMatrix& a, double tol) {
  if (a.n() == 0) return true;
  Eigen::SelfAdjointEigenSolver<CMat> es(a.mat(),
                                         Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

double spectral_radius(const CMat& b) {
  if (b.rows() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "spectral_radius: not square");
  }
  if (!b.allFinite()) {
    throw Error(ErrorCode::kInvalidInput, "spectral_radius: non-finite");
  }
  if (b.rows() == 0) return 0.0;
  Eigen::ComplexEigenSolver<CMat> es(b, /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

CMat null_space_basis(const CMat& h) {
  const Eigen::Index k = h.rows();
  const Eigen::Index m = h.cols();
  if (k >= m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "null_space_basis: need fewer rows than columns");
  }
  Eigen::JacobiSVD<CMat> svd(h, Eigen::ComputeFullV);
  const double smax = svd.singularValues()[0];
  if (svd.singularValues()[k - 1] <= 1e-12 * smax) {
    throw Error(ErrorCode::kRankDeficient, "null_space_basis: rank-deficient");
  }
  CMat basis = svd.matrixV().rightCols(m - k);
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    fix_phase(basis.col(c));
  }
  return basis;
}

bool psd_dominance_check(const HermitianMatrix& a, const CVec& b, double tol) {
  if (b.size() != a.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "psd_dominance_check: size");
  }
  if (!is_psd(a, tol)) {
    throw Error(ErrorCode::kInvalidInput, "psd_dominance_check: A not PSD");
  }
  const HermitianMatrix ap = pinv(a);
  const double quad = std::real(b.dot(ap.mat() * b));
  const double bnorm = b.norm();
  // Range condition: b must lie in range(A), otherwise A - b b^H has a
  // strictly negative direction regardless of the quadratic form.
  const CVec residual = b - a.mat() * (ap.mat() * b);
  if (residual.norm() > tol * std::max(bnorm, 1e-300)) return false;
  return quad <= 1.0 + tol;
}

}  // namespace swipt
