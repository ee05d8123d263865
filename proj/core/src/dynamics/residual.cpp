#include "polar/dynamics/residual.hpp"

#include <algorithm>
#include <cmath>

namespace polar {

void ResidualReport::record(std::string_view label, double value) {
  const double v = std::isnan(value) ? INFINITY : std::abs(value);
  auto it = std::find_if(components_.begin(), components_.end(),
                         [&](const Component& c) { return c.label == label; });
  if (it == components_.end())
    components_.push_back({std::string(label), v});
  else
    it->max_abs = std::max(it->max_abs, v);
  max_abs_ = std::max(max_abs_, v);
}

void ResidualReport::merge(const ResidualReport& other, const std::optional<Point>& at) {
  const bool worse = other.max_abs_ > max_abs_ || (!worst_point_ && other.max_abs_ >= max_abs_);
  for (const auto& c : other.components_) {
    auto it = std::find_if(components_.begin(), components_.end(),
                           [&](const Component& x) { return x.label == c.label; });
    if (it == components_.end())
      components_.push_back(c);
    else
      it->max_abs = std::max(it->max_abs, c.max_abs);
  }
  if (keep_rows_) {
    if (at)
      rows_.push_back({*at, other.max_abs_});
    else if (other.worst_point_)
      rows_.push_back({*other.worst_point_, other.max_abs_});
  }
  if (worse) {
    max_abs_ = other.max_abs_;
    worst_point_ = at ? at : other.worst_point_;
  }
  for (const auto& w : other.warnings_)
    if (std::find(warnings_.begin(), warnings_.end(), w) == warnings_.end()) warnings_.push_back(w);
  if (other.tolerance_ > tolerance_) {
    if (configured_ == 0.0) configured_ = tolerance_;
    tolerance_ = other.tolerance_;
  }
}

void ResidualReport::warn(std::string message) {
  if (std::find(warnings_.begin(), warnings_.end(), message) == warnings_.end())
    warnings_.push_back(std::move(message));
}

void ResidualReport::widen_tolerance(double tol, std::string reason) {
  if (tol <= tolerance_) return;
  if (configured_ == 0.0) configured_ = tolerance_;
  tolerance_ = tol;
  warn(std::move(reason));
}

double ResidualReport::component(std::string_view label) const {
  for (const auto& c : components_)
    if (c.label == label) return c.max_abs;
  return 0.0;
}

}  // namespace polar
