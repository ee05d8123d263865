#include "polar/geometry/geometry.hpp"

#include <cmath>

namespace polar {

double determinant(const Rank2& g) {
  double m[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = g(i, j);
  // Gaussian elimination with partial pivoting.
  double det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      for (int j = 0; j < 4; ++j) std::swap(m[c][j], m[piv][j]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int j = c; j < 4; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

namespace {

void require_nondegenerate(const Rank2& g, const Point& p) {
  if (std::abs(determinant(g)) < kDegenerateDet)
    throw SingularChartError("degenerate metric at " + p.str());
}

}  // namespace

Rank3 christoffel(const Metric& metric, const Point& p) {
  metric.domain().require(p);
  const Rank2 g = metric.g()(p);
  require_nondegenerate(g, p);
  const Rank2 gi = metric.g_inv()(p);
  const auto dg = metric.g().partials(p, &metric.domain());
  Rank3 out({Variance::Upper, Variance::Lower, Variance::Lower});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b; c < 4; ++c) {
        double s = 0.0;
        for (int d = 0; d < 4; ++d) {
          const double gad = gi(a, d);
          if (gad == 0.0) continue;
          s += gad * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
        }
        out(a, b, c) = out(a, c, b) = 0.5 * s;
      }
  return out;
}

Rank4 riemann(const Metric& metric, const Point& p, FdScheme scheme) {
  const Rank3 gam = christoffel(metric, p);
  const auto dgam = metric.christoffel_field()
                        ? metric.christoffel_field()->partials(p, &metric.domain())
                        : Field<3>::finite_difference([&metric](const Point& q) { return christoffel(metric, q); },
                                                      scheme)
                              .partials(p, &metric.domain());
  Rank4 out({Variance::Upper, Variance::Lower, Variance::Lower, Variance::Lower});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = dgam[c](a, d, b) - dgam[d](a, c, b);
          for (int e = 0; e < 4; ++e) v += gam(a, c, e) * gam(e, d, b) - gam(a, d, e) * gam(e, c, b);
          out(a, b, c, d) = v;
        }
  return out;
}

int permutation_sign(int a, int b, int c, int d) {
  int v[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (v[i] == v[j]) return 0;
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3 - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  return sign;
}

Rank4 levi_civita_tensor(const Metric& metric, const Point& p) {
  metric.domain().require(p);
  require_nondegenerate(metric.g()(p), p);
  const double sd = metric.sqrt_det()(p)();
  Rank4 eps;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) eps(a, b, c, d) = kLeviCivitaSign * sd * permutation_sign(a, b, c, d);
  return eps;
}

LocalGeometry local_geometry(const Metric& metric, const Point& p) {
  LocalGeometry geo;
  geo.point = p;
  geo.g = metric.g()(p);
  geo.g_inv = metric.g_inv()(p);
  geo.gamma = christoffel(metric, p);
  geo.eps = levi_civita_tensor(metric, p);
  geo.eps_up = raise_all(geo.eps, geo.g_inv);
  geo.sqrt_det = metric.sqrt_det()(p)();
  return geo;
}

}  // namespace polar
