#pragma once

#include <vector>

#include "mpkit/extended_real.hpp"

namespace mpkit {

// Right-continuous nondecreasing step function vanishing at -infinity, with
// total mass at most 1. Defective functions (total mass < 1) are permitted;
// they arise as (1-rho)-scaled mass-share limits.
class StepDistribution {
 public:
  // jump_points strictly increasing; cumulative[i] is the value on
  // [jump_points[i], jump_points[i+1]), nondecreasing with final value in
  // (0, 1].
  StepDistribution(std::vector<double> jump_points, std::vector<double> cumulative);

  double eval(double x) const;        // F(x)
  double left_limit(double x) const;  // F(x-)
  double total_mass() const;

  const std::vector<double>& jump_points() const { return x_; }
  const std::vector<double>& cumulative() const { return cum_; }

  // k * F for k in (0, 1]; defective when k < 1.
  StepDistribution scaled_mass(double k) const;

 private:
  std::vector<double> x_;
  std::vector<double> cum_;
};

// Generalized inverse inf{x : F(x) >= u} with inf(empty set) = +infinity;
// u <= 0 yields -infinity since every x then satisfies the condition.
ExtendedReal step_generalized_inverse(const StepDistribution& d, double u);

}  // namespace mpkit
