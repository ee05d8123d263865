#pragma once

// Finite-difference partials of a point-valued tensor function, Richardson
// extrapolated from steps h and 2h, with a round-off floor estimate.

#include <algorithm>
#include <array>
#include <limits>

#include "polar/geometry/field.hpp"

namespace polar::detail {

template <int Rank>
struct FdPartials {
  std::array<Tensor<Rank>, kDim> d;
  double noise_floor = 0.0;  // round-off estimate on each partial
};

template <int Rank, class Fn>
FdPartials<Rank> extrapolated_partials(Fn&& f, const Point& p, const FdScheme& sch,
                                       const ChartDomain& dom) {
  if (sch.order != 2 && sch.order != 4) throw ContractViolation("finite-difference order must be 2 or 4");
  const int reach = sch.order == 4 ? 4 : 2;
  FdPartials<Rank> out;
  double scale = 0.0;
  double hmin = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kDim; ++k) {
    const double h = sch.step_at(p, k);
    hmin = std::min(hmin, h);
    dom.require(p.shifted(k, -reach * h));
    dom.require(p.shifted(k, reach * h));
    auto diff = [&](double hh) {
      if (sch.order == 4) {
        const Tensor<Rank> a = f(p.shifted(k, -2 * hh));
        const Tensor<Rank> b = f(p.shifted(k, -hh));
        const Tensor<Rank> c = f(p.shifted(k, hh));
        const Tensor<Rank> e = f(p.shifted(k, 2 * hh));
        scale = std::max({scale, a.max_abs(), b.max_abs(), c.max_abs(), e.max_abs()});
        return (a - 8.0 * b + 8.0 * c - e) * (1.0 / (12.0 * hh));
      }
      const Tensor<Rank> b = f(p.shifted(k, -hh));
      const Tensor<Rank> c = f(p.shifted(k, hh));
      scale = std::max({scale, b.max_abs(), c.max_abs()});
      return (c - b) * (1.0 / (2.0 * hh));
    };
    const Tensor<Rank> d1 = diff(h);
    const Tensor<Rank> d2 = diff(2 * h);
    const double w = sch.order == 4 ? 16.0 : 4.0;
    out.d[k] = (w * d1 - d2) * (1.0 / (w - 1.0));
  }
  out.noise_floor = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale) / hmin;
  return out;
}

}  // namespace polar::detail
