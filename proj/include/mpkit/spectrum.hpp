#pragma once

#include <vector>

#include "mpkit/step_distribution.hpp"

namespace mpkit {

// Relative gap below which neighboring eigenvalues count as tied. Floating
// eigensolvers never reproduce exact multiplicities, so the strict-drop
// condition of the CPV rule is tested as lambda_q - lambda_{q+1} >
// kTieTolerance * lambda_1.
inline constexpr double kTieTolerance = 1e-10;

// Eigenvalue list of a real symmetric positive semi-definite matrix, kept
// sorted descending. Carrier of every empirical-spectral quantity.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> eigenvalues);

  int dimension() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& eigenvalues() const { return values_; }
  double operator[](int i) const { return values_[static_cast<size_t>(i)]; }
  double largest() const { return values_.front(); }
  double trace() const { return trace_; }

  Spectrum scaled(double k) const;  // k * spectrum, k > 0

 private:
  std::vector<double> values_;  // descending
  double trace_;
};

// Empirical spectral distribution F(x) = #{i : lambda_i <= x} / p.
double esd_eval(const Spectrum& s, double x);

// F as an explicit step function (ties share a jump).
StepDistribution esd_step(const Spectrum& s);

// Guttman-Kaiser fraction: share of eigenvalues strictly above the mean
// eigenvalue trace/p. Invariant under positive scaling.
double gk_fraction(const Spectrum& s);

// Eigenvalue-mass share G(x) = sum_{lambda_i <= x} lambda_i / trace as a
// step function; jumps sit at tie-group maxima. Requires a positive trace.
StepDistribution g_step(const Spectrum& s);

// CPV retained fraction: the largest q/p with cumulative top-eigenvalue
// share <= t and a strict drop after position q (q = 0 always qualifies,
// q = p never does). Also evaluated through the complementary-ESD
// representation 1 - F((G)^-(1-t)); the two routes must agree.
double cpv_fraction(const Spectrum& s, double t);

}  // namespace mpkit
