#include "polar/geometry/metric.hpp"

#include <cmath>
#include <utility>

#include "detail/autodiff.hpp"

namespace polar {

using detail::scalar_of;

Metric::Metric(std::string name, Field<2> g, Field<2> g_inv, Field<0> sqrt_det, ChartDomain domain)
    : name_(std::move(name)),
      g_(std::move(g)),
      g_inv_(std::move(g_inv)),
      sqrt_det_(std::move(sqrt_det)),
      domain_(domain) {}

Metric Metric::flat_spherical(ChartDomain domain) {
  constexpr Tensor<2>::Signature lo{Variance::Lower, Variance::Lower};
  constexpr Tensor<2>::Signature up{Variance::Upper, Variance::Upper};
  auto g = detail::autodiff_field<2>(
      [](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::sin;
        const S r = x[1];
        const S st = sin(x[2]);
        std::array<S, 16> c{};
        c[0] = S(1.0);
        c[5] = S(-1.0);
        c[10] = -r * r;
        c[15] = -r * r * st * st;
        return c;
      },
      lo);
  auto g_inv = detail::autodiff_field<2>(
      [](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::sin;
        const S r = x[1];
        const S st = sin(x[2]);
        std::array<S, 16> c{};
        c[0] = S(1.0);
        c[5] = S(-1.0);
        c[10] = -1.0 / (r * r);
        c[15] = -1.0 / (r * r * st * st);
        return c;
      },
      up);
  auto sqrt_det = detail::autodiff_field<0>(
      [](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::abs;
        using std::sin;
        return std::array<S, 1>{x[1] * x[1] * abs(sin(x[2]))};
      },
      {});
  auto gamma = detail::autodiff_field<3>(
      [](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::cos;
        using std::sin;
        const S r = x[1];
        const S st = sin(x[2]), ct = cos(x[2]);
        std::array<S, 64> c{};
        auto set = [&c](int a, int b, int d, const S& v) {
          c[static_cast<std::size_t>(16 * a + 4 * b + d)] = v;
          c[static_cast<std::size_t>(16 * a + 4 * d + b)] = v;
        };
        set(1, 2, 2, -r);
        set(1, 3, 3, -r * st * st);
        set(2, 1, 2, 1.0 / r);
        set(2, 3, 3, -st * ct);
        set(3, 1, 3, 1.0 / r);
        set(3, 2, 3, ct / st);
        return c;
      },
      {Variance::Upper, Variance::Lower, Variance::Lower});
  Metric m("flat_spherical", std::move(g), std::move(g_inv), std::move(sqrt_det), domain);
  m.set_christoffel_field(std::move(gamma));
  return m;
}

Metric& Metric::set_christoffel_field(Field<3> gamma) {
  christoffel_ = std::move(gamma);
  return *this;
}

Metric Metric::minkowski() {
  Rank2 eta;
  eta(0, 0) = 1.0;
  eta(1, 1) = eta(2, 2) = eta(3, 3) = -1.0;
  Rank2 eta_up = Rank2::upper();
  eta_up(0, 0) = 1.0;
  eta_up(1, 1) = eta_up(2, 2) = eta_up(3, 3) = -1.0;
  Scalar one;
  one() = 1.0;
  return Metric("minkowski", Field<2>::constant(eta), Field<2>::constant(eta_up),
                Field<0>::constant(one), ChartDomain::cartesian());
}

}  // namespace polar
