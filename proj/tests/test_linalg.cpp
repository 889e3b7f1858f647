#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "swipt/linalg.hpp"

using namespace swipt;
using swipt::testing::random_complex;
using swipt::testing::random_hermitian;
using swipt::testing::random_psd;

TEST_CASE("HermitianMatrix symmetrizes and validates") {
  CMat a(2, 2);
  a << Complex(1, 0), Complex(2, 3), Complex(0, 0), Complex(4, 0);
  HermitianMatrix h(a);
  CHECK((h.mat() - h.mat().adjoint()).cwiseAbs().maxCoeff() <= 1e-12);

  CMat bad = CMat::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(HermitianMatrix{bad}, Error);
  CHECK_THROWS_AS(HermitianMatrix{CMat::Zero(2, 3)}, Error);
}

TEST_CASE("hermitian_eig identity and diagonal") {
  const EigenDecomposition id = hermitian_eig(HermitianMatrix::Identity(2));
  CHECK(id.values[0] == doctest::Approx(1.0));
  CHECK(id.values[1] == doctest::Approx(1.0));

  CMat d = CMat::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  const EigenDecomposition ed = hermitian_eig(HermitianMatrix(d));
  CHECK(ed.values[0] == doctest::Approx(3.0));
  CHECK(ed.values[1] == doctest::Approx(1.0));
  CHECK(std::abs(ed.vectors(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(ed.vectors(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reconstruction and orthonormality") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const HermitianMatrix a = random_hermitian(6, rng);
    const EigenDecomposition ed = hermitian_eig(a);
    const CMat rec = ed.vectors * ed.values.asDiagonal() *
                     ed.vectors.adjoint();
    CHECK((rec - a.mat()).norm() <= 1e-9 * a.frobenius_norm());
    const CMat gram = ed.vectors.adjoint() * ed.vectors;
    CHECK((gram - CMat::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-10);
    for (int i = 1; i < 6; ++i) CHECK(ed.values[i - 1] >= ed.values[i]);
  }
}

TEST_CASE("dominant_eigpair rank one and tie break") {
  CMat g = CMat::Zero(3, 3);
  g(0, 0) = 0.5;
  const DominantEigpair r1 = dominant_eigpair(HermitianMatrix(g));
  CHECK(r1.value == doctest::Approx(0.5));
  CHECK(std::abs(r1.vector[0]) == doctest::Approx(1.0));
  CHECK(r1.vector[0].real() > 0.0);

  const DominantEigpair tie = dominant_eigpair(HermitianMatrix::Identity(3));
  CHECK(tie.value == doctest::Approx(1.0));
  CHECK(std::abs(tie.vector[0]) == doctest::Approx(1.0));
}

TEST_CASE("dominant_eigpair beats random Rayleigh probes") {
  std::mt19937_64 rng(12);
  const HermitianMatrix g = random_psd(5, rng);
  const DominantEigpair dom = dominant_eigpair(g);
  const double best = std::real(dom.vector.dot(g.mat() * dom.vector));
  CHECK(best == doctest::Approx(dom.value));
  for (int k = 0; k < 1000; ++k) {
    CVec u = random_complex(5, 1, rng);
    u.normalize();
    const double probe = std::real(u.dot(g.mat() * u));
    CHECK(probe <= best + 1e-10);
  }
}

TEST_CASE("pinv diagonal, inverse and Penrose conditions") {
  CMat d = CMat::Zero(2, 2);
  d(0, 0) = 2.0;
  const HermitianMatrix p = pinv(HermitianMatrix(d));
  CHECK(std::real(p.mat()(0, 0)) == doctest::Approx(0.5));
  CHECK(std::abs(p.mat()(1, 1)) <= 1e-15);

  std::mt19937_64 rng(13);
  const HermitianMatrix a = random_psd(4, rng);
  CHECK((pinv(a).mat() * a.mat() - CMat::Identity(4, 4)).norm() <= 1e-9);

  // Rank-deficient: A = B B^H with tall B.
  const CMat b = random_complex(5, 2, rng);
  const HermitianMatrix low(b * b.adjoint());
  const CMat dag = pinv(low).mat();
  CHECK((low.mat() * dag * low.mat() - low.mat()).norm() <=
        1e-9 * low.frobenius_norm());
  CHECK((dag * low.mat() * dag - dag).norm() <= 1e-9 * dag.norm());
  CHECK((low.mat() * dag - (low.mat() * dag).adjoint()).norm() <= 1e-9);
  CHECK((dag * low.mat() - (dag * low.mat()).adjoint()).norm() <= 1e-9);
}

TEST_CASE("is_psd basic and boundary") {
  CHECK(is_psd(HermitianMatrix::Identity(3), 1e-9));
  CMat d = CMat::Identity(2, 2);
  d(1, 1) = -1e-3;
  CHECK_FALSE(is_psd(HermitianMatrix(d), 1e-9));

  std::mt19937_64 rng(14);
  for (int k = 0; k < 10; ++k) {
    const HermitianMatrix g = random_psd(4, rng);
    const double xi = dominant_eigpair(g).value;
    const HermitianMatrix shifted(xi * CMat::Identity(4, 4) - g.mat());
    CHECK(is_psd(shifted, 1e-9 * std::max(1.0, xi)));
  }
}

TEST_CASE("spectral_radius basics and power iteration oracle") {
  CMat d = CMat::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.8;
  CHECK(spectral_radius(d) == doctest::Approx(0.8));
  CHECK(spectral_radius(CMat::Zero(3, 3)) == doctest::Approx(0.0));

  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> un(0.0, 1.0);
  RMat b(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) b(r, c) = un(rng);
  }
  RVec x = RVec::Ones(4);
  double rho = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const RVec y = b * x;
    rho = y.norm() / x.norm();
    x = y / y.norm();
  }
  CHECK(spectral_radius(b.cast<Complex>()) == doctest::Approx(rho).epsilon(1e-8));
}

TEST_CASE("null_space_basis") {
  CMat h(1, 2);
  h << Complex(1, 0), Complex(0, 0);
  const CMat basis = null_space_basis(h);
  CHECK(basis.cols() == 1);
  CHECK(std::abs(basis(1, 0)) == doctest::Approx(1.0));

  std::mt19937_64 rng(16);
  const CMat h2 = random_complex(2, 4, rng);
  const CMat v = null_space_basis(h2);
  CHECK(v.cols() == 2);
  CHECK((h2 * v).norm() <= 1e-10 * h2.norm());
  CHECK((v.adjoint() * v - CMat::Identity(2, 2)).cwiseAbs().maxCoeff() <=
        1e-10);

  CHECK_THROWS_AS(null_space_basis(random_complex(4, 4, rng)), Error);
  CMat rankdef(2, 4);
  rankdef.row(0) = random_complex(1, 4, rng);
  rankdef.row(1) = 2.0 * rankdef.row(0);
  CHECK_THROWS_AS(null_space_basis(rankdef), Error);
}

TEST_CASE("psd_dominance_check boundary cases") {
  CVec e1 = CVec::Zero(2);
  e1[0] = 1.0;
  CHECK(psd_dominance_check(HermitianMatrix::Identity(2), e1, 1e-9));
  HermitianMatrix half(CMat(0.5 * CMat::Identity(2, 2)));
  CHECK_FALSE(psd_dominance_check(half, e1, 1e-9));

  CMat neg = CMat::Identity(2, 2);
  neg(1, 1) = -1.0;
  CHECK_THROWS_AS(psd_dominance_check(HermitianMatrix(neg), e1, 1e-9), Error);
}

TEST_CASE("psd_dominance_check agrees with eigenvalue test") {
  std::mt19937_64 rng(17);
  int agreements = 0;
  for (int k = 0; k < 1000; ++k) {
    const HermitianMatrix a = random_psd(3, rng);
    CVec b = random_complex(3, 1, rng, 0.4);
    if (k % 3 == 0) {
      // Force the in-range case so both branches are exercised.
      b = a.mat() * b;
      b *= 0.7 / std::max(b.norm(), 1e-12);
    }
    const bool claimed = psd_dominance_check(a, b, 1e-9);
    const HermitianMatrix diff(a.mat() - b * b.adjoint());
    const bool oracle = is_psd(diff, 1e-7 * std::max(1.0, a.frobenius_norm()));
    if (claimed == oracle) ++agreements;
  }
  // Boundary instances may disagree within tolerance; demand near-total
  // agreement.
  CHECK(agreements >= 995);
}
