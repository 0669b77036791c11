#include "mpkit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace mpkit {
namespace {

// Indices (into the descending list) at which a new tie group starts.
// Adjacent eigenvalues are chained into one group while their gap stays
// within kTieTolerance * lambda_1.
std::vector<int> tie_group_starts(const std::vector<double>& desc) {
  const double tol = kTieTolerance * desc.front();
  std::vector<int> starts{0};
  for (size_t i = 1; i < desc.size(); ++i) {
    if (desc[i - 1] - desc[i] > tol) starts.push_back(static_cast<int>(i));
  }
  return starts;
}

}  // namespace

Spectrum::Spectrum(std::vector<double> eigenvalues) : values_(std::move(eigenvalues)) {
  if (values_.empty()) throw std::invalid_argument("Spectrum: at least one eigenvalue required");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Spectrum: eigenvalues must be finite");
    if (v < 0.0) throw std::invalid_argument("Spectrum: eigenvalues must be nonnegative");
  }
  std::sort(values_.begin(), values_.end(), std::greater<double>());
  trace_ = 0.0;
  for (double v : values_) trace_ += v;
}

Spectrum Spectrum::scaled(double k) const {
  if (!(k > 0.0)) throw std::invalid_argument("Spectrum::scaled: k must be positive");
  std::vector<double> v(values_);
  for (double& x : v) x *= k;
  return Spectrum(std::move(v));
}

double esd_eval(const Spectrum& s, double x) {
  const auto& v = s.eigenvalues();
  // first position holding a value <= x in the descending list
  auto it = std::lower_bound(v.begin(), v.end(), x, [](double lhs, double rhs) { return lhs > rhs; });
  return static_cast<double>(v.end() - it) / static_cast<double>(v.size());
}

StepDistribution esd_step(const Spectrum& s) {
  const auto& v = s.eigenvalues();
  const double p = static_cast<double>(v.size());
  std::vector<double> jumps, cum;
  int count = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {  // ascending
    ++count;
    if (!jumps.empty() && *it == jumps.back()) {
      cum.back() = count / p;
    } else {
      jumps.push_back(*it);
      cum.push_back(count / p);
    }
  }
  return StepDistribution(std::move(jumps), std::move(cum));
}

double gk_fraction(const Spectrum& s) {
  const double mean = s.trace() / s.dimension();
  int count = 0;
  for (double v : s.eigenvalues()) {
    if (v > mean) ++count;  // strict: ties with the mean are not retained
    else break;             // descending order
  }
  return static_cast<double>(count) / s.dimension();
}

StepDistribution g_step(const Spectrum& s) {
  if (!(s.trace() > 0.0)) throw std::invalid_argument("g_step: spectrum must carry positive mass");
  const auto& desc = s.eigenvalues();
  const std::vector<int> starts = tie_group_starts(desc);
  const int groups = static_cast<int>(starts.size());

  // Ascending group masses and their prefix sums; the final prefix doubles
  // as the total so the top cumulative value is exactly 1.
  std::vector<double> jumps(static_cast<size_t>(groups));
  std::vector<double> cum(static_cast<size_t>(groups));
  double running = 0.0;
  for (int g = groups - 1; g >= 0; --g) {
    const int lo = starts[static_cast<size_t>(g)];
    const int hi = g + 1 < groups ? starts[static_cast<size_t>(g) + 1] : s.dimension();
    double mass = 0.0;
    for (int i = hi - 1; i >= lo; --i) mass += desc[static_cast<size_t>(i)];
    running += mass;
    const int j = groups - 1 - g;  // ascending position
    jumps[static_cast<size_t>(j)] = desc[static_cast<size_t>(lo)];  // group maximum
    cum[static_cast<size_t>(j)] = running;
  }
  const double total = running;
  for (double& c : cum) c /= total;
  cum.back() = 1.0;
  return StepDistribution(std::move(jumps), std::move(cum));
}

double cpv_fraction(const Spectrum& s, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("cpv_fraction: t must lie in (0, 1)");
  if (!(s.trace() > 0.0)) throw std::invalid_argument("cpv_fraction: spectrum must carry positive mass");

  const auto& v = s.eigenvalues();
  const int p = s.dimension();
  const double tol = kTieTolerance * v.front();

  // Direct enumeration of the definition.
  int best_q = 0;
  double top_sum = 0.0;
  for (int q = 1; q < p; ++q) {
    top_sum += v[static_cast<size_t>(q - 1)];
    if (top_sum / s.trace() > t) break;  // prefix shares only grow from here
    if (v[static_cast<size_t>(q - 1)] - v[static_cast<size_t>(q)] > tol) best_q = q;
  }
  const double direct = static_cast<double>(best_q) / p;

  // Complementary-ESD representation through the mass-share inverse. The two
  // routes can only disagree when a cumulative share sits within rounding of
  // the threshold itself.
  const ExtendedReal threshold = step_generalized_inverse(g_step(s), 1.0 - t);
  const double via_esd = threshold.is_pos_inf() ? 0.0 : 1.0 - esd_eval(s, threshold.value());
  if (std::abs(direct - via_esd) > 1e-9)
    throw std::logic_error("cpv_fraction: enumeration and ESD representation disagree");

  return direct;
}

}  // namespace mpkit
