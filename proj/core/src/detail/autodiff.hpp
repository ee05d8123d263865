#pragma once

// Forward-mode partials for closed-form fields. Evaluators are generic
// lambdas taking std::array<S,4> and returning std::array<S, 4^Rank>, so the
// same expression serves values (S = double) and partials (S = Jet).

#include <array>
#include <type_traits>
#include <utility>

#include <ceres/jet.h>

#include "polar/geometry/field.hpp"

namespace polar::detail {

using Jet4 = ceres::Jet<double, 4>;

template <int Rank, class Fn>
Field<Rank> autodiff_field(Fn fn, typename Tensor<Rank>::Signature sig) {
  auto value = [fn, sig](const Point& p) {
    Tensor<Rank> t(sig);
    const auto c = fn(p.x);
    for (std::size_t i = 0; i < Tensor<Rank>::size; ++i) t[i] = c[i];
    return t;
  };
  auto partials = [fn, sig](const Point& p) {
    std::array<Jet4, 4> xj;
    for (int k = 0; k < 4; ++k) xj[k] = Jet4(p.x[k], k);
    const auto c = fn(xj);
    typename Field<Rank>::Partials d;
    for (int k = 0; k < 4; ++k) {
      d[k] = Tensor<Rank>(sig);
      for (std::size_t i = 0; i < Tensor<Rank>::size; ++i) d[k][i] = c[i].v[k];
    }
    return d;
  };
  return Field<Rank>::analytic(value, partials);
}

// Scalar type of a generic evaluator argument.
template <class Arr>
using scalar_of = std::decay_t<decltype(std::declval<Arr>()[0])>;

}  // namespace polar::detail
