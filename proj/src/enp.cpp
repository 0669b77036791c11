#include "mpkit/enp.hpp"

#include <cmath>
#include <stdexcept>

#include "mpkit/matrix_stats.hpp"
#include "mpkit/rng.hpp"

namespace mpkit {
namespace {

void validate(const EnpParams& params) {
  if (params.p < 1) throw std::invalid_argument("sample_enp: p must be at least 1");
  if (params.n < 2) throw std::invalid_argument("sample_enp: n must be at least 2");
  if (!(params.rho >= 0.0 && params.rho < 1.0))
    throw std::invalid_argument("sample_enp: rho must lie in [0, 1)");
  if (!(params.sigma > 0.0)) throw std::invalid_argument("sample_enp: sigma must be positive");
  if (params.mu.size() != 0 && params.mu.size() != params.p)
    throw std::invalid_argument("sample_enp: mu must be empty or of length p");
  if (params.d.size() != 0 && params.d.size() != params.p)
    throw std::invalid_argument("sample_enp: d must be empty or of length p");
  for (Eigen::Index i = 0; i < params.d.size(); ++i)
    if (!(params.d(i) > 0.0)) throw std::invalid_argument("sample_enp: d entries must be positive");
}

}  // namespace

Eigen::MatrixXd sample_enp(const EnpParams& params) {
  validate(params);
  const double shared = params.sigma * std::sqrt(params.rho);
  const double own = params.sigma * std::sqrt(1.0 - params.rho);

  Xoshiro256pp gen(params.seed);
  Eigen::MatrixXd x(params.p, params.n);
  for (int j = 0; j < params.n; ++j) {
    const double eta = gen.standard_normal();
    for (int i = 0; i < params.p; ++i) {
      double v = shared * eta + own * gen.standard_normal();
      if (params.d.size() != 0) v *= params.d(i);
      if (params.mu.size() != 0) v += params.mu(i);
      x(i, j) = v;
    }
  }
  return x;
}

double rho_hat(const Eigen::Ref<const Eigen::MatrixXd>& correlation) {
  return symmetric_eigenvalues(correlation).largest() / static_cast<double>(correlation.rows());
}

}  // namespace mpkit
