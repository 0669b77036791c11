#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "mpkit/spectrum.hpp"

namespace mpkit {

// Data-matrix convention throughout: p x n, rows are variables and columns
// are observations.

struct ConstantRowError : std::runtime_error {
  explicit ConstantRowError(int row_)
      : std::runtime_error("constant row " + std::to_string(row_) + ": zero centered norm"), row(row_) {}
  int row;
};

struct ZeroRowError : std::runtime_error {
  explicit ZeroRowError(int row_)
      : std::runtime_error("zero row " + std::to_string(row_) + ": zero norm"), row(row_) {}
  int row;
};

struct NotSymmetricError : std::runtime_error {
  NotSymmetricError() : std::runtime_error("matrix is not symmetric within tolerance") {}
};

struct IndefiniteMatrixError : std::runtime_error {
  IndefiniteMatrixError()
      : std::runtime_error("matrix has a negative eigenvalue beyond round-off tolerance") {}
};

namespace detail {

template <typename Derived>
void check_data_matrix(const Eigen::MatrixBase<Derived>& x, Eigen::Index min_cols) {
  if (x.rows() < 1 || x.cols() < min_cols)
    throw std::invalid_argument("data matrix: need p >= 1 rows and n >= " +
                                std::to_string(min_cols) + " columns");
  if (!x.derived().allFinite()) throw std::invalid_argument("data matrix: entries must be finite");
}

// Symmetric p x p Gram matrix A A^T * scale, built through a rank update so
// the result is exactly symmetric.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gram(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a, Scalar scale) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat s = Mat::Zero(a.rows(), a.rows());
  s.template selfadjointView<Eigen::Lower>().rankUpdate(a, scale);
  return s.template selfadjointView<Eigen::Lower>();
}

}  // namespace detail

// S = X X^T / n.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> sample_covariance(
    const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  detail::check_data_matrix(x, 2);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> xv = x.derived();
  return detail::gram<Scalar>(xv, Scalar(1) / Scalar(xv.cols()));
}

// S~ = E E^T with E = (X - row means) / sqrt(n); invariant under adding a
// constant to any row.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> centered_covariance(
    const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  detail::check_data_matrix(x, 2);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> xc = x.derived();
  xc.colwise() -= xc.rowwise().mean();
  return detail::gram<Scalar>(xc, Scalar(1) / Scalar(xc.cols()));
}

// R = Y Y^T with rows centered and normalized to unit Euclidean norm. Unit
// diagonal by construction; rows with zero centered norm are rejected.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> sample_correlation(
    const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  detail::check_data_matrix(x, 2);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> y = x.derived();
  y.colwise() -= y.rowwise().mean();
  for (Eigen::Index i = 0; i < y.rows(); ++i) {
    const Scalar norm = y.row(i).norm();
    if (!(norm > Scalar(0))) throw ConstantRowError(static_cast<int>(i));
    y.row(i) /= norm;
  }
  auto r = detail::gram<Scalar>(y, Scalar(1));
  r.diagonal().setOnes();  // unit rows: diagonal is exactly 1
  return r;
}

// R~ = Y~ Y~^T with rows normalized but not centered; zero rows rejected.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> noncentered_correlation(
    const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  detail::check_data_matrix(x, 2);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> y = x.derived();
  for (Eigen::Index i = 0; i < y.rows(); ++i) {
    const Scalar norm = y.row(i).norm();
    if (!(norm > Scalar(0))) throw ZeroRowError(static_cast<int>(i));
    y.row(i) /= norm;
  }
  auto r = detail::gram<Scalar>(y, Scalar(1));
  r.diagonal().setOnes();
  return r;
}

// Descending eigenvalues of a symmetric positive semi-definite matrix.
// Asymmetry beyond 1e-12 (relative to the largest entry) is rejected;
// round-off negatives above -1e-10 * lambda_1 are clamped to zero, anything
// lower is treated as genuine indefiniteness. The implied eigenbasis
// satisfies ||M v - lambda v|| <= 1e-8 ||M||.
Spectrum symmetric_eigenvalues(const Eigen::Ref<const Eigen::MatrixXd>& m);

}  // namespace mpkit
