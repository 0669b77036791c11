#pragma once

#include <functional>
#include <vector>

#include "mpkit/mp_law.hpp"
#include "mpkit/step_distribution.hpp"

namespace mpkit {

// Evaluation adapter shared by the metric routines: right-continuous value,
// left limit, and the points where the function can change abruptly. For a
// step function the critical points are its jumps and the supremum taken
// over them (plus left limits) is exact; for a Marchenko-Pastur law they are
// the atom plus a support grid, exact against step functions (between jumps
// one side is constant and the other monotone) and grid-resolved between two
// laws.
struct CdfView {
  std::function<double(double)> value;
  std::function<double(double)> left_value;
  std::vector<double> critical_points;  // sorted
};

CdfView make_cdf_view(const StepDistribution& d);
CdfView make_cdf_view(const MPLaw& law);

// sup_x |F(x) - G(x)|.
double kolmogorov_distance(const CdfView& f, const CdfView& g);

// inf{eps > 0 : F(x-eps)-eps <= G(x) <= F(x+eps)+eps for all x}, resolved
// by bisection to 1e-9; never exceeds the Kolmogorov distance.
double levy_distance(const CdfView& f, const CdfView& g);

}  // namespace mpkit
