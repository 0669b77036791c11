#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstring>

#include "mpkit/enp.hpp"
#include "mpkit/matrix_stats.hpp"
#include "mpkit/rng.hpp"
#include "test_support.hpp"

using Eigen::MatrixXd;
using Eigen::VectorXd;
using mpkit::Spectrum;

namespace {

MatrixXd random_matrix(mpkit::Xoshiro256pp& gen, int rows, int cols) {
  MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = gen.standard_normal();
  return m;
}

MatrixXd equicorrelation(int p, double rho) {
  return MatrixXd::Constant(p, p, rho) + (1.0 - rho) * MatrixXd::Identity(p, p);
}

}  // namespace

TEST_CASE("sample covariance: pinned shapes") {
  CHECK(mpkit::sample_covariance(MatrixXd::Ones(2, 4)).isApprox(MatrixXd::Ones(2, 2), 1e-15));

  MatrixXd x(2, 4);
  x << 1, 1, 1, 1,
       1, -1, 1, -1;  // orthogonal rows with squared norm n
  CHECK(mpkit::sample_covariance(x).isApprox(MatrixXd::Identity(2, 2), 1e-15));

  mpkit::Xoshiro256pp gen(9301);
  const MatrixXd r = random_matrix(gen, 7, 23);
  const double trace = mpkit::sample_covariance(r).trace();
  CHECK(trace / 7 == doctest::Approx(r.squaredNorm() / (7.0 * 23.0)).epsilon(1e-12));

  CHECK_THROWS_AS(mpkit::sample_covariance(MatrixXd::Ones(2, 1)), std::invalid_argument);
}

TEST_CASE("centered covariance: shift invariance") {
  CHECK(mpkit::centered_covariance(MatrixXd::Constant(3, 5, 2.5)).isZero(1e-15));

  mpkit::Xoshiro256pp gen(9302);
  const MatrixXd x = random_matrix(gen, 5, 11);
  MatrixXd shifted = x;
  shifted.row(2).array() += 17.0;
  CHECK(mpkit::centered_covariance(shifted).isApprox(mpkit::centered_covariance(x), 1e-12));

  const MatrixXd centered = x.colwise() - x.rowwise().mean();
  CHECK(mpkit::centered_covariance(x) == mpkit::sample_covariance(centered));
}

TEST_CASE("sample correlation: pinned values and errors") {
  MatrixXd twin(2, 3);
  twin << 1, 2, 3,
          1, 2, 3;
  const MatrixXd r = mpkit::sample_correlation(twin);
  CHECK(r(0, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r(0, 0) == 1.0);  // exactly

  MatrixXd anti(2, 3);
  anti << 1, 2, 3,
          -1, -2, -3;
  CHECK(mpkit::sample_correlation(anti)(0, 1) == doctest::Approx(-1.0).epsilon(1e-14));

  MatrixXd with_constant(2, 3);
  with_constant << 1, 2, 3,
                   4, 4, 4;
  try {
    mpkit::sample_correlation(with_constant);
    FAIL("expected ConstantRowError");
  } catch (const mpkit::ConstantRowError& e) {
    CHECK(e.row == 1);
  }

  MatrixXd with_zero(2, 3);
  with_zero << 1, 2, 3,
               0, 0, 0;
  CHECK_THROWS_AS(mpkit::noncentered_correlation(with_zero), mpkit::ZeroRowError);
}

TEST_CASE("sample correlation: population off-diagonals near rho at large n") {
  mpkit::EnpParams params;
  params.p = 2;
  params.n = 100000;
  params.rho = 0.6;
  params.seed = 9303;
  const MatrixXd r = mpkit::sample_correlation(mpkit::sample_enp(params));
  CHECK(std::abs(r(0, 1) - 0.6) < 3.0 / std::sqrt(100000.0));
}

TEST_CASE("noncentered correlation equals the centered one for mean-zero rows") {
  MatrixXd x(2, 4);
  x << 1, -1, 2, -2,
       3, -3, 1, -1;  // every row sums to zero exactly
  CHECK(mpkit::noncentered_correlation(x).isApprox(mpkit::sample_correlation(x), 1e-15));

  mpkit::Xoshiro256pp gen(9304);
  const MatrixXd y = random_matrix(gen, 3, 9);
  const MatrixXd rt = mpkit::noncentered_correlation(y);
  // spot value against the literal dot-product formula
  const double direct = y.row(0).dot(y.row(2)) / (y.row(0).norm() * y.row(2).norm());
  CHECK(rt(0, 2) == doctest::Approx(direct).epsilon(1e-13));
  CHECK(rt(1, 1) == 1.0);
}

TEST_CASE("symmetric eigenvalues: identity, equicorrelation, trace, determinant") {
  const Spectrum id3 = mpkit::symmetric_eigenvalues(MatrixXd::Identity(3, 3));
  CHECK(id3.eigenvalues() == std::vector<double>{1.0, 1.0, 1.0});

  const Spectrum equi = mpkit::symmetric_eigenvalues(equicorrelation(100, 0.5));
  CHECK(equi.largest() == doctest::Approx(1.0 + 99.0 * 0.5).epsilon(1e-12));
  for (int i = 1; i < 100; ++i) CHECK(equi[i] == doctest::Approx(0.5).epsilon(1e-10));

  mpkit::Xoshiro256pp gen(9305);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = 2 + static_cast<int>(gen.next() % 5);  // up to 6
    MatrixXd m = random_matrix(gen, p, p);
    m = ((m + m.transpose()) / 2.0).eval();
    m = (m * m.transpose()).eval();  // PSD
    m = ((m + m.transpose()) / 2.0).eval();
    const Spectrum s = mpkit::symmetric_eigenvalues(m);
    CHECK(s.trace() == doctest::Approx(m.trace()).epsilon(1e-10));
    double product = 1.0;
    for (double v : s.eigenvalues()) product *= v;
    const double det = test_support::cofactor_determinant(m);
    CHECK(product == doctest::Approx(det).epsilon(1e-8));
  }
}

TEST_CASE("symmetric eigenvalues: contract violations") {
  MatrixXd asym(2, 2);
  asym << 1.0, 0.5,
          0.2, 1.0;
  CHECK_THROWS_AS(mpkit::symmetric_eigenvalues(asym), mpkit::NotSymmetricError);

  MatrixXd indefinite(2, 2);
  indefinite << 1.0, 0.0,
                0.0, -0.5;
  CHECK_THROWS_AS(mpkit::symmetric_eigenvalues(indefinite), mpkit::IndefiniteMatrixError);

  // round-off negatives within -1e-10 * lambda_1 clamp to zero
  MatrixXd nearly(2, 2);
  nearly << 1.0, 0.0,
            0.0, -1e-12;
  const Spectrum s = mpkit::symmetric_eigenvalues(nearly);
  CHECK(s[1] == 0.0);
}

TEST_CASE("eigensolver residual bound holds for the implied eigenbasis") {
  mpkit::Xoshiro256pp gen(9306);
  for (int trial = 0; trial < 5; ++trial) {
    const int p = 30;
    MatrixXd m = random_matrix(gen, p, p);
    m = (m * m.transpose() / p).eval();
    m = ((m + m.transpose()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(m);
    const double scale = m.norm();
    for (int k = 0; k < p; ++k) {
      const VectorXd residual = m * solver.eigenvectors().col(k) -
                                solver.eigenvalues()(k) * solver.eigenvectors().col(k);
      CHECK(residual.norm() <= 1e-8 * scale);
    }
  }
}

TEST_CASE("constructors are bit-stable for identical inputs") {
  mpkit::Xoshiro256pp gen(9307);
  const MatrixXd x = random_matrix(gen, 20, 50);
  const MatrixXd a = mpkit::sample_correlation(x);
  const MatrixXd b = mpkit::sample_correlation(x);
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.data(), b.data(), sizeof(double) * static_cast<size_t>(a.size())) == 0);
  const Spectrum s1 = mpkit::symmetric_eigenvalues(a);
  const Spectrum s2 = mpkit::symmetric_eigenvalues(b);
  CHECK(s1.eigenvalues() == s2.eigenvalues());
}
