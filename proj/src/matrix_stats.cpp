#include "mpkit/matrix_stats.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace mpkit {

Spectrum symmetric_eigenvalues(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("symmetric_eigenvalues: square matrix required");
  if (!m.allFinite()) throw std::invalid_argument("symmetric_eigenvalues: entries must be finite");

  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(scale, 1e-300)) throw NotSymmetricError();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric_eigenvalues: eigensolver failed to converge");

  const Eigen::VectorXd& ascending = solver.eigenvalues();
  const double largest = ascending(ascending.size() - 1);
  const double clamp_floor = -1e-10 * std::max(largest, 0.0);

  std::vector<double> values(static_cast<size_t>(ascending.size()));
  for (Eigen::Index i = 0; i < ascending.size(); ++i) {
    double v = ascending(ascending.size() - 1 - i);
    if (v < 0.0) {
      if (v < clamp_floor) throw IndefiniteMatrixError();
      v = 0.0;  // round-off negative on a PSD input
    }
    values[static_cast<size_t>(i)] = v;
  }
  return Spectrum(std::move(values));
}

}  // namespace mpkit
