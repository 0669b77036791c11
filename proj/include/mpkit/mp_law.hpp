#pragma once

#include "mpkit/extended_real.hpp"

namespace mpkit {

// Marchenko-Pastur distribution with index c (the limit of p/n) and scale
// sigma2. The absolutely continuous part lives on
// [sigma2 (1-sqrt(c))^2, sigma2 (1+sqrt(c))^2]; for c > 1 there is an
// additional point mass 1 - 1/c at the origin. The mean is sigma2, and
// F_{c,sigma2}(x) = F_{c,1}(x / sigma2); every evaluation below is routed
// through the sigma2 = 1 kernel so that scaling identity holds exactly.
struct MPLaw {
  double c;
  double sigma2;

  explicit MPLaw(double c, double sigma2 = 1.0);

  double lower_edge() const;
  double upper_edge() const;
  double point_mass() const;  // max(0, 1 - 1/c)
};

// Density of the continuous part; 0 outside the open support, in particular
// 0 at x <= 0 even when c > 1 (the atom is reported by point_mass alone).
double mp_pdf(const MPLaw& law, double x);

// Right-continuous distribution function in closed form. F(x) = 0 for x < 0,
// F(x) = point mass on [0, lower edge], F(x) = 1 from the upper edge on.
double mp_cdf(const MPLaw& law, double x);

// Generalized inverse F^-(u) = inf{x : F(x) >= u}, u in [0, 1]. Returns 0
// whenever u does not exceed the point mass, and the upper edge at u = 1.
// Bisection contract: argument resolved to 1e-10 or better, <= 200 steps.
double mp_quantile(const MPLaw& law, double u);

// Share of the total eigenvalue mass carried at or below x:
//   G(x) = integral of lambda over (-inf, x] d mu / sigma2.
// Continuous, 0 up to the lower edge (the atom carries no lambda-weight),
// strictly increasing on the support, 1 from the upper edge on.
double mp_mass_share(const MPLaw& law, double x);

// Generalized inverse of G with the inf(empty set) = +infinity convention:
// u <= 0 -> -infinity, u in (0, 1] -> the preimage in (lower edge, upper
// edge], u > 1 -> +infinity. Same bisection contract as mp_quantile.
ExtendedReal mp_mass_share_inverse(const MPLaw& law, double u);

// Limiting Guttman-Kaiser fraction 1 - F_{c,1}(1/(1-rho)). Equals 1/c
// exactly once c >= (1/sqrt(1-rho) + 1)^2.
double gk_limit(double c, double rho);

// Limiting cumulative-percentage-of-variation fraction
//   1 - F_{c,1}((G_{c,1})^-((1-t)/(1-rho)))
// for threshold t in (0,1); identically 0 when t <= rho.
double cpv_limit(double c, double rho, double t);

}  // namespace mpkit
