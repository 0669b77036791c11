#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace mpkit {

// One draw from the equi-correlated normal population
// N_p(mu, D C(rho) D) with C(rho) the matrix of ones on the diagonal and
// rho off it, and D = sigma * diag(d).
struct EnpParams {
  int p = 1;
  int n = 2;
  double rho = 0.0;
  double sigma = 1.0;
  Eigen::VectorXd mu;  // empty: zero offset
  Eigen::VectorXd d;   // empty: identity scaling; entries must be positive
  uint64_t seed = 0;
};

// p x n data matrix from the rank-one decomposition
//   x_ij = mu_i + d_i * sigma * (sqrt(rho) eta_j + sqrt(1-rho) xi_ij)
// with eta_j, xi_ij independent standard normals. Draw order is fixed per
// column: eta_j first, then xi_1j..xi_pj. Bit-reproducible for a seed.
Eigen::MatrixXd sample_enp(const EnpParams& params);

// Equi-correlation estimator lambda_1(R) / p of a correlation matrix.
double rho_hat(const Eigen::Ref<const Eigen::MatrixXd>& correlation);

}  // namespace mpkit
