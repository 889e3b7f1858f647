#ifndef SWIPT_LINALG_HPP
#define SWIPT_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

#include "swipt/errors.hpp"

namespace swipt {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// Dense complex matrix kept conjugate-symmetric by construction.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  // Symmetrizes the input: stores (A + A^H)/2. Throws on non-finite entries.
  explicit HermitianMatrix(const CMat& a);

  static HermitianMatrix Identity(int n) {
    return HermitianMatrix(CMat::Identity(n, n));
  }
  static HermitianMatrix Zero(int n) {
    return HermitianMatrix(CMat::Zero(n, n));
  }

  int n() const { return static_cast<int>(a_.rows()); }
  const CMat& mat() const { return a_; }
  double frobenius_norm() const { return a_.norm(); }

 private:
  CMat a_;
};

// Real eigenvalues in descending order, orthonormal eigenvectors as columns.
struct EigenDecomposition {
  RVec values;
  CMat vectors;
};

struct DominantEigpair {
  double value = 0.0;
  CVec vector;
};

// Full eigendecomposition of a Hermitian matrix. Eigenvalues descending;
// ties keep the solver's ascending-order column order, so degenerate
// eigenspaces come out lowest-index first. Each eigenvector is phase-fixed
// so that its largest-magnitude component is real and positive.
EigenDecomposition hermitian_eig(const HermitianMatrix& a);

// Largest eigenvalue and its unit eigenvector.
DominantEigpair dominant_eigpair(const HermitianMatrix& g);

// Moore-Penrose pseudoinverse through the eigendecomposition. Eigenvalues
// with magnitude below tol * max|eig| are treated as zero. A negative tol
// selects the default cutoff 1e-10 * n * max|eig|.
HermitianMatrix pinv(const HermitianMatrix& a, double tol = -1.0);

// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const HermitianMatrix& a, double tol);

// Maximum absolute eigenvalue of a general square matrix.
double spectral_radius(const CMat& b);

// Orthonormal basis of the null space of a full-row-rank K x M matrix,
// K < M. Returned as an M x (M-K) matrix.
CMat null_space_basis(const CMat& h);

// Tests A >= b b^H for PSD A via the pseudoinverse quadratic form
// b^H A^+ b <= 1 + tol combined with the range condition
// ||(I - A A^+) b|| <= tol * ||b||. Throws if A is not PSD within tol.
bool psd_dominance_check(const HermitianMatrix& a, const CVec& b, double tol);

}  // namespace swipt

#endif  // SWIPT_LINALG_HPP
