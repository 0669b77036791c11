#include "mpkit/step_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpkit {

StepDistribution::StepDistribution(std::vector<double> jump_points, std::vector<double> cumulative)
    : x_(std::move(jump_points)), cum_(std::move(cumulative)) {
  if (x_.empty() || x_.size() != cum_.size())
    throw std::invalid_argument("StepDistribution: need matching nonempty jump and value lists");
  for (size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(cum_[i]))
      throw std::invalid_argument("StepDistribution: entries must be finite");
    if (i > 0 && !(x_[i] > x_[i - 1]))
      throw std::invalid_argument("StepDistribution: jump points must be strictly increasing");
    if (i > 0 && cum_[i] < cum_[i - 1])
      throw std::invalid_argument("StepDistribution: cumulative values must be nondecreasing");
  }
  if (!(cum_.back() > 0.0) || cum_.back() > 1.0 + 1e-9)
    throw std::invalid_argument("StepDistribution: total mass must lie in (0, 1]");
}

double StepDistribution::eval(double x) const {
  // value on [x_i, x_{i+1}) is cum_i
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  if (it == x_.begin()) return 0.0;
  return cum_[static_cast<size_t>(it - x_.begin()) - 1];
}

double StepDistribution::left_limit(double x) const {
  auto it = std::lower_bound(x_.begin(), x_.end(), x);
  if (it == x_.begin()) return 0.0;
  return cum_[static_cast<size_t>(it - x_.begin()) - 1];
}

double StepDistribution::total_mass() const { return cum_.back(); }

StepDistribution StepDistribution::scaled_mass(double k) const {
  if (!(k > 0.0 && k <= 1.0)) throw std::invalid_argument("scaled_mass: k must lie in (0, 1]");
  std::vector<double> cum(cum_.size());
  for (size_t i = 0; i < cum_.size(); ++i) cum[i] = k * cum_[i];
  return StepDistribution(x_, std::move(cum));
}

ExtendedReal step_generalized_inverse(const StepDistribution& d, double u) {
  if (u <= 0.0) return ExtendedReal::neg_inf();
  const auto& cum = d.cumulative();
  auto it = std::lower_bound(cum.begin(), cum.end(), u);
  if (it == cum.end()) return ExtendedReal::pos_inf();
  return ExtendedReal::finite(d.jump_points()[static_cast<size_t>(it - cum.begin())]);
}

}  // namespace mpkit
