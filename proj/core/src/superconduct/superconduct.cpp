#include "polar/superconduct/superconduct.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <utility>

#include "polar/geometry/geometry.hpp"
#include "polar/kinematics/kinematics.hpp"

namespace polar::superconduct {

namespace {

Field<1> scaled_field(Field<1> f, double k) {
  return Field<1>::analytic([f, k](const Point& p) { return f(p) * k; },
                            [f, k](const Point& p) {
                              auto d = f.partials(p);
                              for (auto& t : d) t *= k;
                              return d;
                            });
}

std::string idx(const char* name, int a, int b) {
  return std::string(name) + "[" + std::to_string(a) + std::to_string(b) + "]";
}

// curl_ab = d_a X_b - d_b X_a
Rank2 curl(const Field<1>& f, const Point& p, const ChartDomain& dom) {
  const auto d = f.partials(p, &dom);
  Rank2 c;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) c(a, b) = d[a](b) - d[b](a);
  return c;
}

QuantizationResult finish(double circulation, double flux) {
  QuantizationResult r;
  r.circulation = circulation;
  r.flux = flux;
  r.delta_tau = circulation + flux;
  const double w = r.delta_tau / (2.0 * std::numbers::pi);
  r.winding = std::lround(w);
  r.deviation = std::abs(w - static_cast<double>(r.winding));
  return r;
}

// Gauss-Legendre nodes on [0, 1].
constexpr double kGlNode = 0.38729833462074168852;  // sqrt(3/5)/2
constexpr std::array<double, 3> kGlX{0.5 - kGlNode, 0.5, 0.5 + kGlNode};
constexpr std::array<double, 3> kGlW{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

Point lerp(const Point& a, const Point& b, double t) {
  Point p;
  for (int k = 0; k < kDim; ++k) p[k] = a[k] + t * (b[k] - a[k]);
  return p;
}

// Integral of X_k dx^k along the chord a -> b.
double chord_integral(const CondensateState& st, const Field<1>& X, const Point& a, const Point& b) {
  double s = 0.0;
  for (int g = 0; g < 3; ++g) {
    const Point q = lerp(a, b, kGlX[g]);
    st.require(q);
    const Vector v = X(q);
    double w = 0.0;
    for (int k = 0; k < kDim; ++k) w += v(k) * (b[k] - a[k]);
    s += kGlW[g] * w;
  }
  return s;
}

// (m/(q^2 n)) J.dl along one chord, with J = q n u
double circulation(const CondensateState& st, const Point& a, const Point& b) {
  return chord_integral(st, st.u, a, b) * st.m / st.q;
}

}  // namespace

CondensateState CondensateState::from_constitutive(double n, double q, double m, Field<1> A, Field<1> tau_gradient,
                                                   Field<1> s, Metric metric) {
  if (!A.valid() || !tau_gradient.valid()) throw ContractViolation("condensate needs A and the phase gradient");
  if (!(m > 0.0)) throw ContractViolation("condensate mass must be positive");
  CondensateState st;
  st.n = n;
  st.q = q;
  st.m = m;
  st.metric = std::move(metric);
  st.A = A;
  st.tau_gradient = tau_gradient;
  st.s = std::move(s);
  // u = q(D tau - A)/m
  const Field<1> tg = tau_gradient;
  const double k = q / m;
  st.u = Field<1>::analytic([tg, A, k](const Point& p) { return (tg(p) - A(p)) * k; },
                            [tg, A, k](const Point& p) {
                              auto d = tg.partials(p);
                              const auto da = A.partials(p);
                              for (int i = 0; i < kDim; ++i) d[i] = (d[i] - da[i]) * k;
                              return d;
                            });
  st.validate();
  return st;
}

void CondensateState::validate() const {
  if (!(n > 0.0)) throw ContractViolation("condensate density must be positive");
  if (!(m > 0.0)) throw ContractViolation("condensate mass must be positive");
  if (q == 0.0) throw ContractViolation("condensate charge must be nonzero");
  if (!u.valid() || !A.valid() || !tau_gradient.valid())
    throw ContractViolation("condensate needs u, A and the phase gradient");
}

void CondensateState::require(const Point& p) const {
  metric.domain().require(p);
  if (core_radius > 0.0 && metric.domain().kind == ChartKind::Cartesian) {
    const double rho2 = p[1] * p[1] + p[2] * p[2];
    if (rho2 < core_radius * core_radius) throw DomainError("point inside excluded core: " + p.str());
  }
}

Vector CondensateState::P(const Point& p) const { return (tau_gradient(p) - A(p)) * q; }

energetics::FluidProjection condensate_projection(const CondensateState& st, const Point& p) {
  if (st.beta != 0.0) throw ContractViolation("condensate projection needs beta = 0");
  st.validate();
  if (!st.s.valid()) throw ContractViolation("condensate projection needs a reference direction s");
  st.require(p);
  const LocalGeometry geo = local_geometry(st.metric, p);
  const auto pair = kinematics::CongruencePair::from_lower(st.u(p), st.s(p), geo);
  const auto proj = kinematics::projectors(pair, geo);
  const Vector zero;
  const Rank2 T = energetics::hydrodynamic_tensor(st.P(p), pair.u_up * st.n, zero, zero, Rank3{}, geo);
  // both spin states of the pair
  return energetics::project_fluid(energetics::symmetrize_belinfante(T) * 2.0, pair, proj);
}

energetics::FluidProjection condensate_closed_form(const CondensateState& st, const Point& p) {
  st.validate();
  if (!st.s.valid()) throw ContractViolation("condensate projection needs a reference direction s");
  st.require(p);
  const LocalGeometry geo = local_geometry(st.metric, p);
  const auto pair = kinematics::CongruencePair::from_lower(st.u(p), st.s(p), geo);
  const auto proj = kinematics::projectors(pair, geo);
  const Vector P = st.P(p);
  energetics::FluidProjection fp;
  fp.mu = 2.0 * st.n * dot(P, pair.u_up);
  fp.Q = -st.n * dot(P, pair.s_up);
  for (int a = 0; a < kDim; ++a)
    for (int c = 0; c < kDim; ++c) fp.Qv(a) += st.n * P(c) * proj.N_up(c, a);
  fp.m_frak = fp.mu;
  return fp;
}

ResidualReport london_residual(const CondensateState& st, const Point& p, double tolerance) {
  st.validate();
  st.require(p);
  const ChartDomain& dom = st.metric.domain();
  // Christoffel terms cancel in both antisymmetrized derivatives.
  const Rank2 curl_J = curl(scaled_field(st.u, st.q * st.n), p, dom);
  const Field<1> Pf = Field<1>::analytic([&st](const Point& x) { return st.P(x); },
                                         [&st](const Point& x) {
                                           auto d = st.tau_gradient.partials(x);
                                           const auto da = st.A.partials(x);
                                           for (int i = 0; i < kDim; ++i) d[i] = (d[i] - da[i]) * st.q;
                                           return d;
                                         });
  const Rank2 F = curl(Pf, p, dom) * (-1.0 / st.q);
  ResidualReport rep("london", tolerance);
  for (int a = 0; a < kDim; ++a)
    for (int b = a + 1; b < kDim; ++b)
      rep.record(idx("L", a, b), st.m * curl_J(a, b) + st.n * st.q * st.q * F(a, b));
  return rep;
}

Loop circle_loop(const Point& center, double radius, int segments, int turns) {
  if (segments < 3) throw ContractViolation("a loop needs at least three segments");
  if (turns < 1) throw ContractViolation("loop turns must be positive");
  Loop l;
  const int n = segments * turns;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / segments;
    Point p = center;
    p[1] += radius * std::cos(a);
    p[2] += radius * std::sin(a);
    l.vertices.push_back(p);
  }
  return l;
}

Surface disk_surface(const Point& center, double radius, int rings, int segments) {
  if (rings < 1 || segments < 3) throw ContractViolation("disk needs rings >= 1 and segments >= 3");
  Surface s;
  s.vertices.push_back(center);
  for (int r = 1; r <= rings; ++r)
    for (int j = 0; j < segments; ++j) {
      const double a = 2.0 * std::numbers::pi * j / segments;
      const double rad = radius * r / rings;
      Point p = center;
      p[1] += rad * std::cos(a);
      p[2] += rad * std::sin(a);
      s.vertices.push_back(p);
    }
  auto at = [segments](int r, int j) { return 1 + (r - 1) * segments + (j % segments); };
  for (int j = 0; j < segments; ++j) s.triangles.push_back({0, at(1, j), at(1, j + 1)});
  for (int r = 1; r < rings; ++r)
    for (int j = 0; j < segments; ++j) {
      s.triangles.push_back({at(r, j), at(r + 1, j), at(r + 1, j + 1)});
      s.triangles.push_back({at(r, j), at(r + 1, j + 1), at(r, j + 1)});
    }
  return s;
}

QuantizationResult quantization_check(const CondensateState& st, const Loop& loop) {
  st.validate();
  const auto& v = loop.vertices;
  if (v.size() < 3) throw ContractViolation("a loop needs at least three vertices");
  double circ = 0.0, flux = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    circ += circulation(st, v[i], v[(i + 1) % v.size()]);
    flux += chord_integral(st, st.A, v[i], v[(i + 1) % v.size()]);
  }
  return finish(circ, flux);
}

QuantizationResult quantization_check(const CondensateState& st, const Surface& surf) {
  st.validate();
  if (surf.triangles.empty()) throw ContractViolation("surface has no triangles");
  const int nv = static_cast<int>(surf.vertices.size());
  // Interior edges appear once in each direction and cancel.
  std::map<std::pair<int, int>, int> edges;
  // Symmetric three-point rule on the reference triangle (area 1/2).
  constexpr double kA = 1.0 / 6.0, kB = 2.0 / 3.0;
  constexpr std::array<std::array<double, 2>, 3> nodes{{{kA, kA}, {kB, kA}, {kA, kB}}};
  double flux = 0.0;
  for (const auto& t : surf.triangles) {
    for (int i : t)
      if (i < 0 || i >= nv) throw ContractViolation("triangle vertex index out of range");
    const Point& p0 = surf.vertices[static_cast<std::size_t>(t[0])];
    const Point& p1 = surf.vertices[static_cast<std::size_t>(t[1])];
    const Point& p2 = surf.vertices[static_cast<std::size_t>(t[2])];
    for (const auto& nd : nodes) {
      Point q;
      for (int k = 0; k < kDim; ++k) q[k] = p0[k] + nd[0] * (p1[k] - p0[k]) + nd[1] * (p2[k] - p0[k]);
      st.require(q);
      const Rank2 F = curl(st.A, q, st.metric.domain());
      double w = 0.0;
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) w += F(a, b) * (p1[a] - p0[a]) * (p2[b] - p0[b]);
      flux += w / 6.0;
    }
    for (int e = 0; e < 3; ++e) {
      const int a = t[static_cast<std::size_t>(e)], b = t[static_cast<std::size_t>((e + 1) % 3)];
      auto it = edges.find({b, a});
      if (it != edges.end()) {
        if (--it->second == 0) edges.erase(it);
      } else {
        ++edges[{a, b}];
      }
    }
  }
  double circ = 0.0;
  for (const auto& [e, count] : edges)
    circ += count * circulation(st, surf.vertices[static_cast<std::size_t>(e.first)],
                                surf.vertices[static_cast<std::size_t>(e.second)]);
  return finish(circ, flux);
}

MeissnerResult meissner_profile(double n, double q, double m, double L, int samples, const MeissnerOptions& opts) {
  if (samples < 3) throw ContractViolation("Meissner profile needs at least 3 samples");
  if (!(n > 0.0) || !(m > 0.0) || !(L > 0.0)) throw ContractViolation("Meissner profile needs n, m, L > 0");
  if (q == 0.0) throw ContractViolation("Meissner profile needs q != 0");
  const double k2 = q * q * n / m + opts.scalar_curvature / 3.0 - opts.conformal_shift;
  if (!(k2 > 0.0)) throw ContractViolation("curvature terms leave no decaying solution");

  MeissnerResult res;
  res.lambda_theory = std::sqrt(m / (q * q * n));
  if (L < 5.0 * res.lambda_theory)
    res.warnings.push_back("slab length " + std::to_string(L) + " is below 5 lambda = " +
                           std::to_string(5.0 * res.lambda_theory) + ", profile truncated");

  const auto N = static_cast<std::size_t>(samples);
  const double h = L / static_cast<double>(N - 1);
  res.x.resize(N);
  res.F.assign(N, 0.0);
  for (std::size_t i = 0; i < N; ++i) res.x[i] = h * static_cast<double>(i);
  res.F[0] = opts.F0;

  // F_{i-1} - (2 + k^2 h^2) F_i + F_{i+1} = 0, Thomas algorithm.
  const std::size_t M = N - 2;
  if (M > 0) {
    const double diag = -(2.0 + k2 * h * h);
    std::vector<double> c(M), d(M);
    c[0] = 1.0 / diag;
    d[0] = -opts.F0 / diag;
    for (std::size_t i = 1; i < M; ++i) {
      const double den = diag - c[i - 1];
      c[i] = 1.0 / den;
      d[i] = -d[i - 1] / den;
    }
    res.F[M] = d[M - 1];
    for (std::size_t i = M - 1; i >= 1; --i) res.F[i] = d[i - 1] - c[i - 1] * res.F[i + 1];
  }

  // least squares of ln|F| against x
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int cnt = 0;
  const double floor = std::abs(opts.F0) * 1e-12;
  for (std::size_t i = 0; i < N && res.x[i] <= 0.5 * L; ++i) {
    const double a = std::abs(res.F[i]);
    if (!(a > floor)) continue;
    const double y = std::log(a);
    sx += res.x[i];
    sy += y;
    sxx += res.x[i] * res.x[i];
    sxy += res.x[i] * y;
    ++cnt;
  }
  const double den = cnt * sxx - sx * sx;
  const double slope = cnt >= 2 && den > 0.0 ? (cnt * sxy - sx * sy) / den : 0.0;
  if (slope < 0.0) {
    res.lambda_fit = -1.0 / slope;
    res.rel_err = std::abs(res.lambda_fit - res.lambda_theory) / res.lambda_theory;
  } else {
    res.lambda_fit = std::numeric_limits<double>::quiet_NaN();
    res.rel_err = std::numeric_limits<double>::quiet_NaN();
    res.warnings.push_back("no decaying profile to fit");
  }
  return res;
}

}  // namespace polar::superconduct
