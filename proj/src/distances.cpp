#include "mpkit/distances.hpp"

#include <algorithm>
#include <cmath>

namespace mpkit {
namespace {

constexpr int kAnalyticGridPoints = 2001;
constexpr double kLevyTolerance = 1e-9;

std::vector<double> merge_sorted(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CdfView make_cdf_view(const StepDistribution& d) {
  CdfView view;
  view.value = [d](double x) { return d.eval(x); };
  view.left_value = [d](double x) { return d.left_limit(x); };
  view.critical_points = d.jump_points();
  return view;
}

CdfView make_cdf_view(const MPLaw& law) {
  CdfView view;
  view.value = [law](double x) { return mp_cdf(law, x); };
  // The only discontinuity is the atom at the origin (c > 1).
  view.left_value = [law](double x) { return x == 0.0 ? 0.0 : mp_cdf(law, x); };
  const double a = law.lower_edge();
  const double b = law.upper_edge();
  std::vector<double> pts;
  if (law.point_mass() > 0.0) pts.push_back(0.0);
  for (int i = 0; i < kAnalyticGridPoints; ++i)
    pts.push_back(a + (b - a) * i / (kAnalyticGridPoints - 1));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  view.critical_points = std::move(pts);
  return view;
}

double kolmogorov_distance(const CdfView& f, const CdfView& g) {
  double sup = 0.0;
  for (const auto& z : merge_sorted(f.critical_points, g.critical_points)) {
    sup = std::max(sup, std::abs(f.value(z) - g.value(z)));
    sup = std::max(sup, std::abs(f.left_value(z) - g.left_value(z)));
  }
  return sup;
}

namespace {

// F(x-eps)-eps <= G(x) <= F(x+eps)+eps for all x. Both sides are
// right-continuous and piecewise monotone between critical points, so each
// supremum is attained at a piece start: a critical point of one function,
// or a critical point of the other shifted by eps. Every function is only
// ever evaluated at its own critical points or at a singly-shifted point of
// the other's: shifting a point by eps and back can cross the originating
// jump in rounding and read the wrong side of it.
bool levy_feasible(const CdfView& f, const CdfView& g, double eps) {
  for (const double z : g.critical_points) {
    if (g.value(z) - f.value(z + eps) > eps) return false;  // sup G - F(.+eps)
    if (f.value(z - eps) - g.value(z) > eps) return false;  // sup F(.-eps) - G
  }
  for (const double w : f.critical_points) {
    if (g.value(w - eps) - f.value(w) > eps) return false;
    if (f.value(w) - g.value(w + eps) > eps) return false;
  }
  return true;
}

}  // namespace

double levy_distance(const CdfView& f, const CdfView& g) {
  const double k = kolmogorov_distance(f, g);
  if (k <= 0.0) return 0.0;
  double lo = 0.0, hi = k;  // eps = K is always feasible
  while (hi - lo > kLevyTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (levy_feasible(f, g, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace mpkit
