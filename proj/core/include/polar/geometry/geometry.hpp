#pragma once

#include "polar/geometry/field.hpp"
#include "polar/geometry/metric.hpp"
#include "polar/geometry/point.hpp"
#include "polar/geometry/tensor.hpp"

namespace polar {

// Orientation: eps_{t r theta phi} = +sqrt|g|. Calibrated against the
// hydrogen sheet element, see tests/unit/test_kinematics.cpp.
inline constexpr double kLeviCivitaSign = +1.0;

inline constexpr double kDegenerateDet = 1e-300;

double determinant(const Rank2& g);

// Gamma^a_{bc}, signature (U, L, L).
Rank3 christoffel(const Metric& metric, const Point& p);

// R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} + ..., from order-4
// differences of the Christoffel symbols.
Rank4 riemann(const Metric& metric, const Point& p, FdScheme scheme = {4, 1e-4});

Rank4 levi_civita_tensor(const Metric& metric, const Point& p);
// Flat-index permutation sign of (a,b,c,d), 0 when any two coincide.
int permutation_sign(int a, int b, int c, int d);

// Slot-wise index moves with an explicit metric sample.
template <int Rank>
Tensor<Rank> contract_slot(const Tensor<Rank>& t, int slot, const Rank2& m, Variance result);

template <int Rank>
Tensor<Rank> raise(const Tensor<Rank>& t, int slot, const Rank2& g_inv) {
  if (t.variance(slot) == Variance::Upper) throw ContractViolation("slot already upper");
  return contract_slot(t, slot, g_inv, Variance::Upper);
}
template <int Rank>
Tensor<Rank> lower(const Tensor<Rank>& t, int slot, const Rank2& g) {
  if (t.variance(slot) == Variance::Lower) throw ContractViolation("slot already lower");
  return contract_slot(t, slot, g, Variance::Lower);
}
template <int Rank>
Tensor<Rank> raise_all(Tensor<Rank> t, const Rank2& g_inv) {
  for (int s = 0; s < Rank; ++s)
    if (t.variance(s) == Variance::Lower) t = contract_slot(t, s, g_inv, Variance::Upper);
  return t;
}
template <int Rank>
Tensor<Rank> lower_all(Tensor<Rank> t, const Rank2& g) {
  for (int s = 0; s < Rank; ++s)
    if (t.variance(s) == Variance::Upper) t = contract_slot(t, s, g, Variance::Lower);
  return t;
}

// Flips the variance of one slot using the metric at p.
template <int Rank>
Tensor<Rank> raise_lower(const Tensor<Rank>& t, int slot, const Metric& metric, const Point& p) {
  if (slot < 0 || slot >= Rank) throw ContractViolation("slot out of range");
  metric.domain().require(p);
  if (t.variance(slot) == Variance::Lower) return raise(t, slot, metric.g_inv()(p));
  return lower(t, slot, metric.g()(p));
}

// Adds the connection terms to coordinate partials. Slot 0 of the result
// is the derivative index.
template <int Rank>
Tensor<Rank + 1> covariant_from_partials(const Tensor<Rank>& value,
                                         const std::array<Tensor<Rank>, kDim>& partials,
                                         const Rank3& gamma);

template <int Rank>
Tensor<Rank + 1> covariant_derivative(const Field<Rank>& field, const Metric& metric,
                                      const Point& p) {
  metric.domain().require(p);
  const auto d = field.partials(p, &metric.domain());
  return covariant_from_partials(field(p), d, christoffel(metric, p));
}

// Everything point-local that the polar machinery needs from the chart.
struct LocalGeometry {
  Point point;
  Rank2 g;
  Rank2 g_inv;
  Rank3 gamma;
  Rank4 eps;     // lower
  Rank4 eps_up;  // upper
  double sqrt_det = 0.0;
};

LocalGeometry local_geometry(const Metric& metric, const Point& p);

// ---- template definitions ----

template <int Rank>
Tensor<Rank> contract_slot(const Tensor<Rank>& t, int slot, const Rank2& m, Variance result) {
  Tensor<Rank> out(t.signature());
  out.set_variance(slot, result);
  const std::size_t st = Tensor<Rank>::stride(slot);
  for (std::size_t f = 0; f < Tensor<Rank>::size; ++f) {
    const int a = Tensor<Rank>::index_of(f, slot);
    const std::size_t base = f - static_cast<std::size_t>(a) * st;
    double s = 0.0;
    for (int b = 0; b < kDim; ++b) s += m(a, b) * t[base + static_cast<std::size_t>(b) * st];
    out[f] = s;
  }
  return out;
}

template <int Rank>
Tensor<Rank + 1> covariant_from_partials(const Tensor<Rank>& value,
                                         const std::array<Tensor<Rank>, kDim>& partials,
                                         const Rank3& gamma) {
  typename Tensor<Rank + 1>::Signature sig;
  sig[0] = Variance::Lower;
  for (int s = 0; s < Rank; ++s) sig[static_cast<std::size_t>(s + 1)] = value.variance(s);
  Tensor<Rank + 1> out(sig);
  constexpr std::size_t n = Tensor<Rank>::size;
  for (int k = 0; k < kDim; ++k) {
    for (std::size_t f = 0; f < n; ++f) {
      double v = partials[k][f];
      for (int s = 0; s < Rank; ++s) {
        const std::size_t st = Tensor<Rank>::stride(s);
        const int a = Tensor<Rank>::index_of(f, s);
        const std::size_t base = f - static_cast<std::size_t>(a) * st;
        for (int l = 0; l < kDim; ++l) {
          const double tl = value[base + static_cast<std::size_t>(l) * st];
          if (value.variance(s) == Variance::Upper)
            v += gamma(a, k, l) * tl;
          else
            v -= gamma(l, k, a) * tl;
        }
      }
      out[static_cast<std::size_t>(k) * n + f] = v;
    }
  }
  return out;
}

}  // namespace polar
