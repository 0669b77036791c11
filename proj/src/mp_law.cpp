#include "mpkit/mp_law.hpp"

#include <cmath>
#include <stdexcept>

namespace mpkit {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxBisectIterations = 200;

double atom_of(double c) { return c > 1.0 ? 1.0 - 1.0 / c : 0.0; }

// Distribution function of F_{c,1} on the closed support. The antiderivative
// is written with arctan((r^2-1)/(2r)) = 2 atan(r) - pi/2 (valid for all
// r > 0), which keeps both arctangent terms on a single branch across the
// whole interval; the second term's argument reduces to the same shape after
// s = r |1-sqrt(c)| / (1+sqrt(c)).
double cdf_std(double c, double x) {
  const double sc = std::sqrt(c);
  const double a = (1.0 - sc) * (1.0 - sc);
  const double b = (1.0 + sc) * (1.0 + sc);
  const double atom = atom_of(c);
  if (x < 0.0) return 0.0;
  if (x >= b) return 1.0;
  if (x <= a) return atom;  // right-continuous at the lower edge
  const double r = std::sqrt((b - x) / (x - a));
  const double s = (std::abs(1.0 - sc) / (1.0 + sc)) * r;
  double f = kPi * c + std::sqrt((b - x) * (x - a)) -
             (1.0 + c) * (2.0 * std::atan(r) - kPi / 2.0) +
             std::abs(1.0 - c) * (2.0 * std::atan(s) - kPi / 2.0);
  f /= 2.0 * kPi * c;
  if (c > 1.0) f += (c - 1.0) / (2.0 * c);
  return std::min(1.0, std::max(atom, f));
}

// G_{c,1}(x): the integral of lambda times the density has the closed form
// of a shifted circle segment with center m = 1+c and radius h = 2 sqrt(c).
double mass_share_std(double c, double x) {
  const double sc = std::sqrt(c);
  const double a = (1.0 - sc) * (1.0 - sc);
  const double b = (1.0 + sc) * (1.0 + sc);
  if (x <= a) return 0.0;
  if (x >= b) return 1.0;
  const double m = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double root = std::sqrt((b - x) * (x - a));
  const double v =
      (0.5 * (x - m) * root + 0.5 * h * h * (std::asin((x - m) / h) + kPi / 2.0)) /
      (2.0 * kPi * c);
  return std::min(1.0, std::max(0.0, v));
}

// Smallest x with f(x) >= u on [lo, hi], for f nondecreasing with
// f(lo) < u <= f(hi). Keeps f(hi) >= u invariant and returns hi, so the
// level condition holds at the result; stops once the bracket collapses.
template <typename F>
double bisect_level(const F& f, double lo, double hi, double u) {
  for (int i = 0; i < kMaxBisectIterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 1e-13) break;
  }
  return hi;
}

void check_limit_args(double c, double rho) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("gk/cpv limit: c must be positive");
  if (!(rho >= 0.0 && rho < 1.0)) throw std::invalid_argument("gk/cpv limit: rho must lie in [0, 1)");
}

}  // namespace

MPLaw::MPLaw(double c_, double sigma2_) : c(c_), sigma2(sigma2_) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("MPLaw: c must be positive and finite");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw std::invalid_argument("MPLaw: sigma2 must be positive and finite");
}

double MPLaw::lower_edge() const {
  const double sc = std::sqrt(c);
  return sigma2 * (1.0 - sc) * (1.0 - sc);
}

double MPLaw::upper_edge() const {
  const double sc = std::sqrt(c);
  return sigma2 * (1.0 + sc) * (1.0 + sc);
}

double MPLaw::point_mass() const { return atom_of(c); }

double mp_pdf(const MPLaw& law, double x) {
  if (x <= 0.0) return 0.0;
  const double y = x / law.sigma2;
  const double sc = std::sqrt(law.c);
  const double a = (1.0 - sc) * (1.0 - sc);
  const double b = (1.0 + sc) * (1.0 + sc);
  if (y <= a || y >= b) return 0.0;
  return std::sqrt((b - y) * (y - a)) / (2.0 * kPi * law.c * y) / law.sigma2;
}

double mp_cdf(const MPLaw& law, double x) { return cdf_std(law.c, x / law.sigma2); }

double mp_quantile(const MPLaw& law, double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("mp_quantile: u must lie in [0, 1]");
  if (u <= law.point_mass()) return 0.0;
  const double sc = std::sqrt(law.c);
  const double a = (1.0 - sc) * (1.0 - sc);
  const double b = (1.0 + sc) * (1.0 + sc);
  if (u >= 1.0) return law.sigma2 * b;
  const double c = law.c;
  return law.sigma2 * bisect_level([c](double x) { return cdf_std(c, x); }, a, b, u);
}

double mp_mass_share(const MPLaw& law, double x) { return mass_share_std(law.c, x / law.sigma2); }

ExtendedReal mp_mass_share_inverse(const MPLaw& law, double u) {
  if (u <= 0.0) return ExtendedReal::neg_inf();
  if (u > 1.0) return ExtendedReal::pos_inf();
  const double sc = std::sqrt(law.c);
  const double a = (1.0 - sc) * (1.0 - sc);
  const double b = (1.0 + sc) * (1.0 + sc);
  if (u >= 1.0) return ExtendedReal::finite(law.sigma2 * b);
  const double c = law.c;
  return ExtendedReal::finite(
      law.sigma2 * bisect_level([c](double x) { return mass_share_std(c, x); }, a, b, u));
}

double gk_limit(double c, double rho) {
  check_limit_args(c, rho);
  return 1.0 - cdf_std(c, 1.0 / (1.0 - rho));
}

double cpv_limit(double c, double rho, double t) {
  check_limit_args(c, rho);
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("cpv_limit: t must lie in (0, 1)");
  const MPLaw std_law(c, 1.0);
  const ExtendedReal threshold = mp_mass_share_inverse(std_law, (1.0 - t) / (1.0 - rho));
  if (threshold.is_pos_inf()) return 0.0;  // t < rho: empty level set
  return 1.0 - mp_cdf(std_law, threshold.value());
}

}  // namespace mpkit
