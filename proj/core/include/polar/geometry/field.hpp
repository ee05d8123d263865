#pragma once

#include <array>
#include <functional>
#include <memory>
#include <utility>

#include "polar/errors.hpp"
#include "polar/geometry/point.hpp"
#include "polar/geometry/tensor.hpp"

namespace polar {

enum class DerivativeStrategy { Analytic, FiniteDifference };

// Central differences. Step along x_k is step * max(1, |x_k|).
struct FdScheme {
  int order = 2;
  double step = 1e-5;

  double step_at(const Point& p, int k) const;
};

template <int Rank>
class Field {
 public:
  using Value = Tensor<Rank>;
  using Partials = std::array<Tensor<Rank>, kDim>;  // Partials[k] = d_k T
  using Evaluator = std::function<Value(const Point&)>;
  using PartialsEvaluator = std::function<Partials(const Point&)>;

  Field() = default;

  static Field analytic(Evaluator f, PartialsEvaluator df) {
    Field out;
    out.f_ = std::move(f);
    out.df_ = std::move(df);
    return out;
  }
  static Field finite_difference(Evaluator f, FdScheme scheme = {}) {
    Field out;
    out.f_ = std::move(f);
    out.scheme_ = scheme;
    return out;
  }
  static Field constant(const Value& v) {
    return analytic([v](const Point&) { return v; },
                    [v](const Point&) {
                      Partials d;
                      for (auto& t : d) t = Value(v.signature());
                      return d;
                    });
  }

  bool valid() const { return static_cast<bool>(f_); }
  DerivativeStrategy strategy() const {
    return df_ ? DerivativeStrategy::Analytic : DerivativeStrategy::FiniteDifference;
  }
  const FdScheme& scheme() const { return scheme_; }

  Value operator()(const Point& p) const { return f_(p); }

  // Partials by the field's own strategy. With a domain, finite-difference
  // stencils are checked against it first.
  Partials partials(const Point& p, const ChartDomain* domain = nullptr) const {
    if (df_) return df_(p);
    return fd_partials(p, scheme_, domain);
  }

  Partials fd_partials(const Point& p, const FdScheme& scheme,
                       const ChartDomain* domain = nullptr) const {
    Partials d;
    for (int k = 0; k < kDim; ++k) {
      const double h = scheme.step_at(p, k);
      if (domain) {
        const int reach = scheme.order == 4 ? 2 : 1;
        domain->require(p.shifted(k, -reach * h));
        domain->require(p.shifted(k, reach * h));
      }
      if (scheme.order == 4) {
        d[k] = (f_(p.shifted(k, -2 * h)) - 8.0 * f_(p.shifted(k, -h)) +
                8.0 * f_(p.shifted(k, h)) - f_(p.shifted(k, 2 * h))) *
               (1.0 / (12.0 * h));
      } else if (scheme.order == 2) {
        d[k] = (f_(p.shifted(k, h)) - f_(p.shifted(k, -h))) * (1.0 / (2.0 * h));
      } else {
        throw ContractViolation("finite-difference order must be 2 or 4");
      }
    }
    return d;
  }

  // Same values, derivatives forced to finite differences.
  Field as_finite_difference(FdScheme scheme) const {
    return finite_difference(f_, scheme);
  }

 private:
  Evaluator f_;
  PartialsEvaluator df_;
  FdScheme scheme_{};
};

using ScalarField = Field<0>;
using VectorField = Field<1>;

}  // namespace polar
