#include "polar/hydrogen/hydrogen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "detail/autodiff.hpp"

namespace polar::hydrogen {

using detail::scalar_of;
namespace cl = clifford;

double HydrogenParams::Gamma() const { return std::sqrt(1.0 - alpha * alpha); }

void HydrogenParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ContractViolation("alpha must lie in (0, 1)");
  if (!(mass > 0.0)) throw ContractViolation("mass must be positive");
  if (!(K > 0.0)) throw ContractViolation("K must be positive");
}

double Delta(double alpha, double theta) {
  const double s = std::sin(theta);
  return 1.0 / std::sqrt(1.0 - alpha * alpha * s * s);
}

namespace {

template <class S>
S delta_of(double alpha, const S& theta) {
  using std::sin;
  using std::sqrt;
  const S s = sin(theta);
  return 1.0 / sqrt(1.0 - alpha * alpha * s * s);
}

constexpr Tensor<1>::Signature kLow1{Variance::Lower};
constexpr Tensor<2>::Signature kFrame{Variance::Lower, Variance::Upper};
constexpr Tensor<3>::Signature kLow3{Variance::Lower, Variance::Lower, Variance::Lower};

// Real and imaginary parts of the four spinor components.
template <class S>
std::array<S, 8> spinor_parts(const HydrogenParams& hp, const std::array<S, 4>& x) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  const double G = hp.Gamma();
  const double a = hp.alpha;
  const double E = hp.mass * G;
  const S r = x[1];
  const S rho = hp.K / std::sqrt(1.0 + G) * exp((G - 1.0) * log(r) - a * hp.mass * r);
  const S ct = cos(E * x[0]);
  const S st = sin(E * x[0]);
  const S cth = cos(x[2]);
  const S sth = sin(x[2]);
  const S ph = x[3] - E * x[0];
  std::array<S, 8> c{};
  c[0] = rho * (1.0 + G) * ct;
  c[1] = -rho * (1.0 + G) * st;
  c[2] = S(0.0);
  c[3] = S(0.0);
  c[4] = rho * a * cth * st;
  c[5] = rho * a * cth * ct;
  c[6] = -rho * a * sth * sin(ph);
  c[7] = rho * a * sth * cos(ph);
  return c;
}

cl::Spinor spinor_value(const HydrogenParams& hp, const Point& p) {
  const auto c = spinor_parts<double>(hp, p.x);
  cl::Spinor psi;
  for (int i = 0; i < 4; ++i) psi(i) = cl::Complex(c[2 * i], c[2 * i + 1]);
  return psi;
}

cl::SpinorPartials spinor_partials(const HydrogenParams& hp, const Point& p) {
  std::array<detail::Jet4, 4> xj;
  for (int k = 0; k < 4; ++k) xj[k] = detail::Jet4(p.x[k], k);
  const auto c = spinor_parts<detail::Jet4>(hp, xj);
  cl::SpinorPartials d;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i) d[k](i) = cl::Complex(c[2 * i].v[k], c[2 * i + 1].v[k]);
  return d;
}

Field<2> textbook_tetrad() {
  return detail::autodiff_field<2>(
      [](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::cos;
        using std::sin;
        const S r = x[1];
        const S st = sin(x[2]), ct = cos(x[2]);
        const S sp = sin(x[3]), cp = cos(x[3]);
        std::array<S, 16> e{};
        e[0] = S(1.0);
        e[5] = st * cp;
        e[6] = ct * cp / r;
        e[7] = -sp / (r * st);
        e[9] = st * sp;
        e[10] = ct * sp / r;
        e[11] = cp / (r * st);
        e[13] = ct;
        e[14] = -st / r;
        return e;
      },
      kFrame);
}

Field<2> boosted_tetrad(double alpha) {
  const double G = std::sqrt(1.0 - alpha * alpha);
  return detail::autodiff_field<2>(
      [alpha, G](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::cos;
        using std::sin;
        const S r = x[1];
        const S st = sin(x[2]), ct = cos(x[2]);
        const S D = delta_of(alpha, x[2]);
        std::array<S, 16> e{};
        e[0] = D;
        e[3] = alpha * D / r;
        e[5] = G * st * D;
        e[6] = ct * D / r;
        e[8] = alpha * st * D;
        e[11] = D / (r * st);
        e[13] = ct * D;
        e[14] = -G * st * D / r;
        return e;
      },
      kFrame);
}

}  // namespace

HydrogenFields fields(const HydrogenParams& hp, ChartDomain domain) {
  hp.validate();
  const double a = hp.alpha;
  const double G = hp.Gamma();
  const double m = hp.mass;
  const double K = hp.K;
  const bool corrected = hp.use_corrected_P;

  auto phi2 = detail::autodiff_field<0>(
      [a, G, m, K](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::exp;
        using std::log;
        const S r = x[1];
        return std::array<S, 1>{K * K * exp(-2.0 * (1.0 - G) * log(r) - 2.0 * a * m * r) / delta_of(a, x[2])};
      },
      {});
  auto beta = detail::autodiff_field<0>(
      [a, G](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::atan;
        using std::cos;
        return std::array<S, 1>{-atan((a / G) * cos(x[2]))};
      },
      {});
  auto s = detail::autodiff_field<1>(
      [a, G](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::cos;
        using std::sin;
        const S D = delta_of(a, x[2]);
        return std::array<S, 4>{S(0.0), -D * cos(x[2]), G * D * x[1] * sin(x[2]), S(0.0)};
      },
      kLow1);
  auto u = detail::autodiff_field<1>(
      [a](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::sin;
        const S D = delta_of(a, x[2]);
        const S st = sin(x[2]);
        return std::array<S, 4>{D, S(0.0), S(0.0), -a * D * x[1] * st * st};
      },
      kLow1);
  auto P = detail::autodiff_field<1>(
      [a, G, m, corrected](const auto& x) {
        using S = scalar_of<decltype(x)>;
        S pt = S(m * G);
        if (corrected) pt = pt + a / x[1];
        return std::array<S, 4>{pt, S(0.0), S(0.0), S(-0.5)};
      },
      kLow1);
  auto R = detail::autodiff_field<3>(
      [a, G](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::cos;
        using std::sin;
        const S r = x[1];
        const S st = sin(x[2]), ct = cos(x[2]);
        const S D = delta_of(a, x[2]);
        std::array<S, 64> c{};
        auto set = [&c](int i, int j, int k, const S& v) {
          c[static_cast<std::size_t>(16 * i + 4 * j + k)] = v;
          c[static_cast<std::size_t>(16 * j + 4 * i + k)] = -v;
        };
        set(0, 3, 2, -a * r * st * ct * D * D);
        set(1, 2, 2, -r * (1.0 - G * D * D));
        set(1, 3, 3, -r * st * st);
        set(2, 3, 3, -r * r * st * ct);
        return c;
      },
      kLow3);
  auto V = detail::autodiff_field<1>(
      [a, G](const auto& x) {
        using S = scalar_of<decltype(x)>;
        using std::cos;
        using std::sin;
        const S D = delta_of(a, x[2]);
        const S st = sin(x[2]), ct = cos(x[2]);
        return std::array<S, 4>{S(0.0), S(0.0), S(0.0), -0.5 * D * D * (G * st * st + ct * ct)};
      },
      kLow1);
  auto A = detail::autodiff_field<1>(
      [a](const auto& x) {
        using S = scalar_of<decltype(x)>;
        return std::array<S, 4>{a / x[1], S(0.0), S(0.0), S(0.0)};
      },
      kLow1);

  dynamics::PolarFields pf{Metric::flat_spherical(domain), phi2, beta, u, s, P, R, Field<1>{}, m, -1.0};
  cl::SpinorField psi{[hp](const Point& p) { return spinor_value(hp, p); },
                      [hp](const Point& p) { return spinor_partials(hp, p); }};
  return HydrogenFields{hp, std::move(pf), std::move(V), textbook_tetrad(), boosted_tetrad(a), std::move(psi),
                        cl::GaugePotential{-1.0, std::move(A)}};
}

TextbookSpinor textbook_spinor(const HydrogenParams& hp, const Point& p) {
  hp.validate();
  ChartDomain::spherical().require(p);
  TextbookSpinor ts;
  ts.psi = spinor_value(hp, p);
  ts.dpsi = spinor_partials(hp, p);
  ts.tetrad_textbook = textbook_tetrad()(p);
  ts.tetrad_boosted = boosted_tetrad(hp.alpha)(p);
  return ts;
}

StressClosedForms stress_closed_forms(const HydrogenParams& hp, const Point& pt) {
  const double a = hp.alpha, G = hp.Gamma(), m = hp.mass, r = pt.r();
  const double s = std::sin(pt.theta()), c = std::cos(pt.theta());
  const double D = Delta(a, pt.theta());
  const double D2 = D * D, D3 = D2 * D, D4 = D3 * D, D5 = D4 * D;
  const double f = hp.K * hp.K * std::exp(-2.0 * (1.0 - G) * std::log(r) - 2.0 * a * m * r) / D;
  const double s2 = s * s, c2 = c * c, s4 = s2 * s2;
  const double bracket = G * (1.0 - G) * (2.0 - D2) + 3.0 * a * a * D2 * (G * s2 + c2) + 2.0 * m * r * a * G;
  StressClosedForms o;
  o.mu = 2.0 * f * (m * G * D + 0.5 * a * D3 * (G * s2 + 2.0 * c2 + G * G * s2) / r);
  o.p = a * f * D3 * (G * s2 + 2.0 * c2 + G * G * s2) / (3.0 * r);
  o.Pi = -a * f * D3 * (G * s2 + 2.0 * c2 - 2.0 * G * G * s2) / (3.0 * r);
  o.Q = 0.0;
  o.Pi_r = -f * a * G * G * D4 * c * s2 / r;
  o.Pi_theta = -f * a * G * D4 * c2 * s / (r * r);
  o.Q_t = -0.5 * f * a * D2 * s2 * bracket / r;
  o.Q_phi = -0.5 * f * D2 * bracket / (r * r);
  o.Pi_rr = -0.5 * a * G * G * G * f * D5 * s4 / r;
  o.Pi_rtheta = -0.5 * a * G * G * D5 * f * s2 * s * c / (r * r);
  o.Pi_thetatheta = -0.5 * a * G * D5 * f * s2 * c2 / (r * r * r);
  o.Pi_tt = 0.5 * a * a * a * G * f * D5 * s4 / r;
  o.Pi_tphi = 0.5 * a * a * G * D5 * f * s2 / (r * r);
  o.Pi_phiphi = 0.5 * a * G * f * D5 / (r * r * r);
  o.Pi_1 = -f * a * G * D3 * s * c / r;
  o.Q_2 = -0.5 * f * D * s * bracket / r;
  o.Pi_11 = -0.5 * a * G * f * D3 * s2 / r;
  o.six_RT = a * D3 * (G * s2 + G * G * s2 + 2.0 * c2) / r;
  o.Omega = -0.5 * a * D3 * (G * s2 + 2.0 * c2) / r;
  return o;
}

void GridSpec::validate() const {
  if (n_r < 2 || n_theta < 2) throw ContractViolation("grid counts must be at least 2");
  if (!(r_min > 0.0) || !(r_max > r_min)) throw ContractViolation("grid needs 0 < r_min < r_max");
  if (!(theta_margin > 0.0) || !(theta_margin < std::numbers::pi / 2))
    throw ContractViolation("theta margin must lie in (0, pi/2)");
}

std::vector<Point> GridSpec::points() const {
  validate();
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n_r * n_theta));
  const double lr0 = std::log(r_min), lr1 = std::log(r_max);
  const double th0 = theta_margin, th1 = std::numbers::pi - theta_margin;
  for (int i = 0; i < n_r; ++i) {
    const double r = i == 0 ? r_min : i == n_r - 1 ? r_max : std::exp(lr0 + (lr1 - lr0) * i / (n_r - 1));
    for (int j = 0; j < n_theta; ++j) out.emplace_back(0.0, r, th0 + (th1 - th0) * j / (n_theta - 1), 0.0);
  }
  return out;
}

std::string GridSpec::str() const {
  std::ostringstream os;
  os << n_r << "x" << n_theta << " r=[" << r_min << "," << r_max << "] theta_margin=" << theta_margin;
  return os.str();
}

bool Suite::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.report.passed(); });
}

std::vector<std::string> Suite::failing_families() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.report.passed() && std::find(out.begin(), out.end(), c.family) == out.end()) out.push_back(c.family);
  return out;
}

const Check* Suite::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.report.name() == name) return &c;
  return nullptr;
}

namespace {

// Relative error against a reference magnitude.
double rel_err(double computed, double closed, double scale) {
  return std::abs(computed - closed) / std::max(scale, std::numeric_limits<double>::min());
}

struct StressSample {
  const char* name;
  double computed;
  double closed;
  double scale;
};

std::vector<StressSample> stress_samples(const HydrogenFields& hf, const dynamics::PolarState& st,
                                         const energetics::FluidProjection& fp, const Point& p) {
  const StressClosedForms cf = stress_closed_forms(hf.params, p);
  const Rank2 eb = hf.tetrad_boosted(p);
  // Frame components X^a = eta^ab e_b^mu X_mu.
  const Vector Piv_low = lower(fp.Piv, 0, st.geo.g);
  const Vector Qv_low = lower(fp.Qv, 0, st.geo.g);
  const Vector Pi_f = cl::coordinate_to_frame(Piv_low, eb);
  const Vector Q_f = cl::coordinate_to_frame(Qv_low, eb);
  const Rank2 Pit_low = lower_all(fp.Pit, st.geo.g);
  double Pi11 = 0.0, Pi22 = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Pi11 += eb(1, mu) * eb(1, nu) * Pit_low(mu, nu);
      Pi22 += eb(2, mu) * eb(2, nu) * Pit_low(mu, nu);
    }
  // Upper coordinate slots carry 1, 1, r, r sin(theta) relative to unit
  // vectors; errors are measured against the largest unit-frame component
  // of the same vector or tensor.
  const double r = p.r();
  const double w[4] = {1.0, 1.0, r, r * std::sin(p.theta())};
  const double vec_pi = std::max(std::abs(cf.Pi_r) * w[1], std::abs(cf.Pi_theta) * w[2]);
  const double vec_q = std::max(std::abs(cf.Q_t) * w[0], std::abs(cf.Q_phi) * w[3]);
  const double ten = std::max({std::abs(cf.Pi_rr) * w[1] * w[1], std::abs(cf.Pi_rtheta) * w[1] * w[2],
                               std::abs(cf.Pi_thetatheta) * w[2] * w[2], std::abs(cf.Pi_tt) * w[0] * w[0],
                               std::abs(cf.Pi_tphi) * w[0] * w[3], std::abs(cf.Pi_phiphi) * w[3] * w[3]});
  return {
      {"mu", fp.mu, cf.mu, std::abs(cf.mu)},
      {"p", fp.p, cf.p, std::abs(cf.p)},
      // Pi changes sign where tan^2 theta is near 2; measure it against p
      {"Pi", fp.Pi, cf.Pi, std::max(std::abs(cf.Pi), std::abs(cf.p))},
      {"Pi^r", fp.Piv(1), cf.Pi_r, vec_pi / w[1]},
      {"Pi^theta", fp.Piv(2), cf.Pi_theta, vec_pi / w[2]},
      {"Q^t", fp.Qv(0), cf.Q_t, vec_q / w[0]},
      {"Q^phi", fp.Qv(3), cf.Q_phi, vec_q / w[3]},
      {"Pi^rr", fp.Pit(1, 1), cf.Pi_rr, ten / (w[1] * w[1])},
      {"Pi^rtheta", fp.Pit(1, 2), cf.Pi_rtheta, ten / (w[1] * w[2])},
      {"Pi^thetatheta", fp.Pit(2, 2), cf.Pi_thetatheta, ten / (w[2] * w[2])},
      {"Pi^tt", fp.Pit(0, 0), cf.Pi_tt, ten / (w[0] * w[0])},
      {"Pi^tphi", fp.Pit(0, 3), cf.Pi_tphi, ten / (w[0] * w[3])},
      {"Pi^phiphi", fp.Pit(3, 3), cf.Pi_phiphi, ten / (w[3] * w[3])},
      // eta^{11} = -1 flips the sign of a lowered spatial frame component
      {"Pi^1", -Pi_f(1), cf.Pi_1, std::abs(cf.Pi_1)},
      {"Q^2", -Q_f(2), cf.Q_2, std::abs(cf.Q_2)},
      {"Pi^11", Pi11, cf.Pi_11, std::abs(cf.Pi_11)},
      {"-Pi^22", -Pi22, cf.Pi_11, std::abs(cf.Pi_11)},
  };
}

// Collects point reports into named checks.
class SuiteBuilder {
 public:
  SuiteBuilder(Suite& suite, bool keep_rows) : suite_(suite), keep_rows_(keep_rows) {}

  ResidualReport& check(const std::string& family, const std::string& name, double tol) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      suite_.checks.push_back({family, ResidualReport(name, tol)});
      if (keep_rows_) suite_.checks.back().report.keep_per_point();
      it = index_.emplace(name, suite_.checks.size() - 1).first;
    }
    return suite_.checks[it->second].report;
  }
  void merge(const std::string& family, const ResidualReport& r, const Point& p) {
    check(family, r.name(), r.configured_tolerance()).merge(r, p);
  }
  template <class Fn>
  void guarded(const std::string& family, const std::string& name, double tol, const Point& p, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      ResidualReport r(name, tol);
      r.record("exception", std::numeric_limits<double>::infinity());
      r.warn(name + ": " + e.what());
      merge(family, r, p);
    }
  }

 private:
  Suite& suite_;
  bool keep_rows_;
  std::map<std::string, std::size_t> index_;
};

// Chart that leaves room for difference stencils around every grid point.
ChartDomain chart_for(const GridSpec& grid) {
  const ChartDomain d = ChartDomain::spherical();
  return ChartDomain::spherical(std::min(d.r_min, 0.5 * grid.r_min), std::min(d.theta_margin, 0.5 * grid.theta_margin));
}

Rank2 expected_grad_s(const HydrogenParams& hp, const Point& p) {
  const double G = hp.Gamma(), r = p.r(), s = std::sin(p.theta()), c = std::cos(p.theta());
  const double D = Delta(hp.alpha, p.theta());
  Rank2 e;
  e(2, 1) = G * D * s * (G * D * D - 1.0);
  e(2, 2) = r * D * c * (G * D * D - 1.0);
  e(3, 3) = (G - 1.0) * r * D * c * s * s;
  return e;
}

Rank2 expected_grad_u(const HydrogenParams& hp, const Point& p) {
  const double a = hp.alpha, r = p.r(), s = std::sin(p.theta()), c = std::cos(p.theta());
  const double D = Delta(a, p.theta());
  Rank2 e;
  e(2, 0) = a * a * D * D * D * s * c;
  e(2, 3) = -a * r * D * D * D * c * s;
  e(3, 1) = a * D * s * s;
  e(3, 2) = a * r * D * s * c;
  return e;
}

}  // namespace

Suite verify(const HydrogenParams& hp, const GridSpec& grid, const VerifyOptions& opts) {
  Suite suite;
  suite.grid = grid.str();
  const HydrogenFields hf = fields(hp, chart_for(grid));
  const auto pts = grid.points();
  const Tolerances& tol = opts.tol;
  SuiteBuilder sb(suite, opts.keep_per_point);
  const cl::GammaSet gammas = cl::build_gammas(cl::Representation::Standard);
  const double a = hp.alpha, G = hp.Gamma(), m = hp.mass;

  // Declare checks up front so the report order is stable.
  const std::vector<std::pair<std::string, std::pair<std::string, double>>> order = {
      {"geometry", {"tetrad_orthonormality", tol.identity}},
      {"geometry", {"projector_identities", tol.identity}},
      {"geometry", {"sheet_tensors", tol.identity}},
      {"kinematics", {"gradient_closed_forms", tol.identity}},
      {"kinematics", {"kinematic_roundtrip", tol.identity}},
      {"kinematics", {"connection_assembly", tol.identity}},
      {"kinematics", {"twist", opts.exact}},
      {"spinor", {"dirac_residual", tol.analytic}},
      {"spinor", {"polar_from_spinor", tol.identity}},
      {"spinor", {"boosted_frame", tol.identity}},
      {"momentum", {"normal_form", tol.analytic}},
      {"momentum", {"momentum_group", tol.analytic}},
      {"momentum", {"AB_groups", tol.analytic}},
      {"momentum", {"projected", tol.analytic}},
      {"momentum", {"bilinear_group", tol.analytic}},
      {"momentum", {"spinor_derivative", tol.analytic}},
      {"momentum", {"energy_tensor_oracle", tol.analytic}},
      {"momentum", {"stress_reproduction", tol.analytic}},
      {"momentum", {"fluid_cross_check", tol.analytic}},
      {"momentum", {"integrability", tol.second_derivative}},
      {"momentum", {"conservation", tol.second_derivative}},
      {"energetics", {"flux_Q", opts.exact}},
      {"energetics", {"thermodynamic_identities", tol.identity}},
      {"energetics", {"temperature", tol.identity}},
      {"energetics", {"projection_roundtrip", tol.identity}},
      {"energetics", {"energy_conditions", std::numeric_limits<double>::min()}},
      {"energetics", {"current_divergence", tol.analytic}},
      {"energetics", {"spin_curvature", tol.identity}},
  };
  for (const auto& [fam, nt] : order) sb.check(fam, nt.first, nt.second);

  const int stride = std::max(1, opts.second_derivative_stride);
  for (std::size_t n = 0; n < pts.size(); ++n) {
    const Point& p = pts[n];
    const int ir = static_cast<int>(n) / grid.n_theta;
    const int it = static_cast<int>(n) % grid.n_theta;
    const double r = p.r(), th = p.theta();
    const double D = Delta(a, th);

    dynamics::PolarState st;
    kinematics::KinematicData kin;
    try {
      st = hf.polar.at(p);
      kin = st.kinematics();
    } catch (const std::exception& e) {
      for (auto& c : suite.checks) {
        ResidualReport rr(c.report.name(), c.report.configured_tolerance());
        rr.record("exception", std::numeric_limits<double>::infinity());
        rr.warn(c.report.name() + ": " + e.what());
        c.report.merge(rr, p);
      }
      continue;
    }

    // geometry
    sb.guarded("geometry", "tetrad_orthonormality", tol.identity, p, [&] {
      ResidualReport rr("tetrad_orthonormality", tol.identity);
      rr.record("textbook", cl::tetrad_orthonormality_defect(hf.tetrad_textbook(p), st.geo.g));
      rr.record("boosted", cl::tetrad_orthonormality_defect(hf.tetrad_boosted(p), st.geo.g));
      sb.merge("geometry", rr, p);
    });
    sb.guarded("geometry", "projector_identities", tol.identity, p, [&] {
      ResidualReport rr("projector_identities", tol.identity);
      rr.record("defect", kinematics::projector_identity_defect(st.pair, st.proj, st.geo));
      sb.merge("geometry", rr, p);
    });
    sb.guarded("geometry", "sheet_tensors", tol.identity, p, [&] {
      ResidualReport rr("sheet_tensors", tol.identity);
      const double s = std::sin(th), c = std::cos(th), D2 = D * D;
      Rank2 N = Rank2::upper();
      N(0, 0) = -a * a * D2 * s * s;
      N(1, 1) = -G * G * D2 * s * s;
      N(2, 2) = -D2 * c * c / (r * r);
      N(3, 3) = -D2 / (r * r * s * s);
      N(0, 3) = N(3, 0) = -a * D2 / r;
      N(1, 2) = N(2, 1) = -G * D2 * c * s / r;
      Rank2 E = Rank2::upper();
      E(0, 1) = -a * G * D2 * s * s;
      E(0, 2) = -a * D2 * s * c / r;
      E(1, 3) = G * D2 / r;
      E(2, 3) = D2 * (c / s) / (r * r);
      E = E - transpose(E);
      // compare at unit coordinate scale: angular slots carry factors of r
      auto scaled = [r, s](const Rank2& t) {
        Rank2 o = t;
        const double w[4] = {1.0, 1.0, r, r * s};
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) o(i, j) *= w[i] * w[j];
        return o;
      };
      rr.record("N", max_abs_difference(scaled(st.proj.N_up), scaled(N)));
      rr.record("eps", max_abs_difference(scaled(st.proj.eps2_up), scaled(E)));
      sb.merge("geometry", rr, p);
    });

    // kinematics
    sb.guarded("kinematics", "gradient_closed_forms", tol.identity, p, [&] {
      ResidualReport rr("gradient_closed_forms", tol.identity);
      const double s = std::sin(th), c = std::cos(th), D2 = D * D;
      rr.record("grad_s", max_abs_difference(st.grad_s, expected_grad_s(hp, p)));
      rr.record("grad_u", max_abs_difference(st.grad_u, expected_grad_u(hp, p)));
      Vector sds, sdu, uds, udu;
      for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
          sds(j) += st.pair.s_up(i) * st.grad_s(i, j);
          sdu(j) += st.pair.s_up(i) * st.grad_u(i, j);
          uds(j) += st.pair.u_up(i) * st.grad_s(i, j);
          udu(j) += st.pair.u_up(i) * st.grad_u(i, j);
        }
      const double GD2 = G * D2 - 1.0;
      rr.record("s.grad s", max_abs_difference(sds, Vector::lower({0.0, -G * G * D2 * s * s * GD2 / r,
                                                                  -G * D2 * s * c * GD2, 0.0})));
      rr.record("s.grad u",
                max_abs_difference(sdu, Vector::lower({-G * D * s * a * a * D2 * D * s * c / r, 0.0, 0.0,
                                                       a * G * D2 * D2 * c * s * s})));
      rr.record("u.grad s",
                max_abs_difference(uds, Vector::lower({0.0, 0.0, 0.0, a * D2 * (G - 1.0) * c * s * s})));
      rr.record("u.grad u", max_abs_difference(udu, Vector::lower({0.0, a * a * D2 * s * s / r,
                                                                  a * a * D2 * s * c, 0.0})));
      double dus = 0.0;
      for (int i = 0; i < 4; ++i) dus += st.grad_u(3, i) * st.pair.s_up(i);
      rr.record("grad_phi u.s", dus + a * D2 * (G - 1.0) * c * s * s);
      rr.record("Omega", kin.Omega - stress_closed_forms(hp, p).Omega);
      sb.merge("kinematics", rr, p);
    });
    sb.guarded("kinematics", "kinematic_roundtrip", tol.identity, p, [&] {
      ResidualReport rr("kinematic_roundtrip", tol.identity);
      const auto g = kinematics::reconstruct_gradients(kin, st.pair, st.proj, st.geo);
      rr.record("grad_u", max_abs_difference(g.grad_u, st.grad_u));
      rr.record("grad_s", max_abs_difference(g.grad_s, st.grad_s));
      sb.merge("kinematics", rr, p);
    });
    sb.guarded("kinematics", "connection_assembly", tol.identity, p, [&] {
      ResidualReport rr("connection_assembly", tol.identity);
      const Vector V = hf.V(p);
      rr.record("V", max_abs_difference(st.conn.V, V));
      const auto whole = kinematics::assemble_R(kin, st.pair, V, st.proj, st.geo);
      const auto full = kinematics::connection_from_gradients(st.grad_u, st.grad_s, st.pair, V, st.proj, st.geo);
      const double scale = std::max(1.0, st.conn.R.max_abs());
      rr.record("assembled", max_abs_difference(whole.R, st.conn.R) / scale);
      rr.record("from_gradients", max_abs_difference(full.R, st.conn.R) / scale);
      rr.record("gradient_identity",
                kinematics::gradient_identity_defect(st.conn.R, st.grad_u, st.grad_s, st.pair));
      sb.merge("kinematics", rr, p);
    });
    sb.guarded("kinematics", "twist", opts.exact, p, [&] {
      ResidualReport rr("twist", opts.exact);
      rr.record("xi", kin.xi);
      sb.merge("kinematics", rr, p);
    });

    // spinor oracle
    cl::SpinorPartials nabla_psi;
    cl::Spinor psi;
    Rank2 e_tb;
    bool have_spinor = false;
    sb.guarded("spinor", "dirac_residual", tol.analytic, p, [&] {
      ResidualReport rr("dirac_residual", tol.analytic);
      psi = hf.psi.value(p);
      e_tb = hf.tetrad_textbook(p);
      const Rank3 C = cl::spin_connection(hf.tetrad_textbook, hf.polar.metric, p);
      nabla_psi = cl::spinor_covariant_derivative(hf.psi, gammas, C, hf.coulomb.qA(p), p);
      const cl::Spinor res = cl::dirac_residual(psi, nabla_psi, gammas, e_tb, m);
      rr.record("max_component", res.cwiseAbs().maxCoeff());
      have_spinor = true;
      sb.merge("spinor", rr, p);
    });
    sb.guarded("spinor", "polar_from_spinor", tol.identity, p, [&] {
      ResidualReport rr("polar_from_spinor", tol.identity);
      const auto pd = cl::polar_decompose(hf.psi.value(p), gammas);
      const Rank2 e = hf.tetrad_textbook(p);
      const Vector u = lower(cl::frame_to_coordinate(pd.u, e), 0, st.geo.g);
      const Vector s = lower(cl::frame_to_coordinate(pd.s, e), 0, st.geo.g);
      rr.record("phi2", (pd.phi2 - st.phi2) / st.phi2);
      rr.record("beta", pd.beta - st.beta);
      // angular covector slots scale with r
      auto unit = [r, th](Vector v) {
        v(2) /= r;
        v(3) /= r * std::sin(th);
        return v;
      };
      rr.record("u", max_abs_difference(unit(u), unit(st.pair.u)));
      rr.record("s", max_abs_difference(unit(s), unit(st.pair.s)));
      sb.merge("spinor", rr, p);
    });
    sb.guarded("spinor", "boosted_frame", tol.identity, p, [&] {
      ResidualReport rr("boosted_frame", tol.identity);
      const Rank2 eb = hf.tetrad_boosted(p);
      rr.record("u", max_abs_difference(cl::coordinate_to_frame(st.pair.u, eb), Vector::lower({1, 0, 0, 0})));
      rr.record("s", max_abs_difference(cl::coordinate_to_frame(st.pair.s, eb), Vector::lower({0, 0, 0, -1})));
      sb.merge("spinor", rr, p);
    });

    // momentum family: everything that reads P
    sb.guarded("momentum", "normal_form", tol.analytic, p,
               [&] { sb.merge("momentum", dynamics::residual_normal_form(st, tol.analytic), p); });
    sb.guarded("momentum", "momentum_group", tol.analytic, p,
               [&] { sb.merge("momentum", dynamics::residual_momentum_group(st, tol.analytic), p); });
    sb.guarded("momentum", "AB_groups", tol.analytic, p,
               [&] { sb.merge("momentum", dynamics::residual_AB_groups(st, tol.analytic), p); });
    sb.guarded("momentum", "projected", tol.analytic, p,
               [&] { sb.merge("momentum", dynamics::residual_projected(st, kin, tol.analytic), p); });
    sb.guarded("momentum", "bilinear_group", tol.analytic, p, [&] {
      // the ten equations scale with phi2
      ResidualReport rr = dynamics::residual_bilinear_group(st, tol.analytic);
      sb.merge("momentum", rr, p);
    });
    sb.guarded("momentum", "spinor_derivative", tol.analytic, p, [&] {
      if (!have_spinor) throw ContractViolation("spinor oracle unavailable");
      ResidualReport rr("spinor_derivative", tol.analytic);
      Rank3 R_frame;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < 4; ++k) {
            double v = 0.0;
            for (int mu = 0; mu < 4; ++mu)
              for (int nu = 0; nu < 4; ++nu) v += e_tb(i, mu) * e_tb(j, nu) * st.conn.R(mu, nu, k);
            R_frame(i, j, k) = v;
          }
      const auto polar = cl::polar_spinor_derivative(psi, st.grad_ln_phi2, st.grad_beta, R_frame, st.P, gammas);
      const double w[4] = {1.0, 1.0, 1.0 / r, 1.0 / (r * std::sin(th))};
      for (int k = 0; k < 4; ++k) rr.record("d" + std::to_string(k), (polar[k] - nabla_psi[k]).cwiseAbs().maxCoeff() * w[k]);
      sb.merge("momentum", rr, p);
    });

    energetics::EnergyTensors et;
    energetics::FluidProjection fp, cfp;
    sb.guarded("momentum", "energy_tensor_oracle", tol.analytic, p, [&] {
      et = energetics::energy_tensor(st);
      if (!have_spinor) throw ContractViolation("spinor oracle unavailable");
      ResidualReport rr("energy_tensor_oracle", tol.analytic);
      const Rank2 Ts = energetics::symmetrize_belinfante(
          cl::spinor_energy_tensor(psi, nabla_psi, gammas, e_tb, st.geo.g_inv));
      const double w[4] = {1.0, 1.0, r, r * std::sin(th)};
      double worst = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(Ts(i, j) - et.T_sym(i, j)) * w[i] * w[j]);
      rr.record("T_sym", worst);
      sb.merge("momentum", rr, p);
    });
    sb.guarded("momentum", "stress_reproduction", tol.analytic, p, [&] {
      et = energetics::energy_tensor(st);
      fp = energetics::project_fluid(et.T_sym, st, kin);
      ResidualReport rr("stress_reproduction", tol.analytic);
      for (const auto& smp : stress_samples(hf, st, fp, p))
        rr.record(smp.name, rel_err(smp.computed, smp.closed, smp.scale));
      sb.merge("momentum", rr, p);
    });
    sb.guarded("momentum", "fluid_cross_check", tol.analytic, p, [&] {
      cfp = energetics::closed_form_projection(st, kin);
      ResidualReport rr("fluid_cross_check", tol.analytic);
      rr.record("mu", fp.mu - cfp.mu);
      rr.record("p", fp.p - cfp.p);
      rr.record("Q", fp.Q - cfp.Q);
      rr.record("Pi", fp.Pi - cfp.Pi);
      rr.record("Q^a", max_abs_difference(lower(fp.Qv, 0, st.geo.g), lower(cfp.Qv, 0, st.geo.g)));
      rr.record("Pi^a", max_abs_difference(lower(fp.Piv, 0, st.geo.g), lower(cfp.Piv, 0, st.geo.g)));
      rr.record("Pi^ab", max_abs_difference(lower_all(fp.Pit, st.geo.g), lower_all(cfp.Pit, st.geo.g)));
      sb.merge("momentum", rr, p);
    });

    const bool second = ir % stride == 0 && it % stride == 0;
    if (second) {
      sb.guarded("momentum", "integrability", tol.second_derivative, p, [&] {
        sb.merge("momentum", dynamics::integrability(hf.polar, p, {4, 1e-4}, tol.second_derivative), p);
      });
      sb.guarded("momentum", "conservation", tol.second_derivative, p, [&] {
        energetics::MpdOptions mo;
        mo.tolerance = tol.second_derivative;
        mo.curvature_tolerance = tol.identity;
        const ResidualReport mpd = energetics::mpd_residuals(hf.polar, p, mo);
        ResidualReport cons("conservation", tol.second_derivative);
        ResidualReport spin_curv("spin_curvature", tol.identity);
        for (const auto& c : mpd.components()) {
          if (c.label == "SR")
            spin_curv.record("S.R", c.max_abs);
          else if (c.label != "divU")
            cons.record(c.label, c.max_abs);
        }
        if (mpd.tolerance() > mpd.configured_tolerance())
          cons.widen_tolerance(mpd.tolerance(), mpd.warnings().empty() ? "widened" : mpd.warnings().front());
        sb.merge("momentum", cons, p);
        sb.merge("energetics", spin_curv, p);
      });
    }

    // energetics: P-free, built on the closed-form projection
    sb.guarded("energetics", "flux_Q", opts.exact, p, [&] {
      cfp = energetics::closed_form_projection(st, kin);
      ResidualReport rr("flux_Q", opts.exact);
      rr.record("Q", cfp.Q);
      sb.merge("energetics", rr, p);
    });
    sb.guarded("energetics", "thermodynamic_identities", tol.identity, p, [&] {
      ResidualReport rr("thermodynamic_identities", tol.identity);
      const double f = st.phi2;
      const double bh = dot(st.pair.s_up, st.grad_beta);
      rr.record("trace", cfp.m_frak - 2.0 * f * m * std::cos(st.beta));
      rr.record("p_s", cfp.p_s + f * bh);
      rr.record("p_perp", cfp.p_perp - f * kin.Omega);
      rr.record("mu_split", cfp.mu - (cfp.m_frak + cfp.p_s - 2.0 * cfp.p_perp));
      rr.record("mu_temperature", cfp.mu - 2.0 * f * (m * std::cos(st.beta) + cfp.T3R));
      sb.merge("energetics", rr, p);
    });
    sb.guarded("energetics", "temperature", tol.identity, p, [&] {
      ResidualReport rr("temperature", tol.identity);
      const StressClosedForms cf = stress_closed_forms(hp, p);
      rr.record("6RT", 2.0 * cfp.T3R - cf.six_RT);
      rr.record("covariant", energetics::temperature_covariant(st) - cfp.T3R);
      rr.record("m_cos_beta", m * std::cos(st.beta) - m * G * D);
      sb.merge("energetics", rr, p);
    });
    sb.guarded("energetics", "projection_roundtrip", tol.identity, p, [&] {
      ResidualReport rr("projection_roundtrip", tol.identity);
      const Rank2 T = energetics::reassemble(cfp, st.pair, st.proj);
      const auto back = energetics::project_fluid(T, st.pair, st.proj);
      rr.record("mu", back.mu - cfp.mu);
      rr.record("p", back.p - cfp.p);
      rr.record("Pi", back.Pi - cfp.Pi);
      rr.record("Q", back.Q - cfp.Q);
      rr.record("Q^a", max_abs_difference(lower(back.Qv, 0, st.geo.g), lower(cfp.Qv, 0, st.geo.g)));
      rr.record("Pi^a", max_abs_difference(lower(back.Piv, 0, st.geo.g), lower(cfp.Piv, 0, st.geo.g)));
      rr.record("Pi^ab", max_abs_difference(lower_all(back.Pit, st.geo.g), lower_all(cfp.Pit, st.geo.g)));
      sb.merge("energetics", rr, p);
    });
    sb.guarded("energetics", "energy_conditions", std::numeric_limits<double>::min(), p, [&] {
      ResidualReport rr("energy_conditions", std::numeric_limits<double>::min());
      const auto ec = energetics::energy_conditions(cfp, st.phi2);
      auto violation = [](double v) { return v > 0.0 ? 0.0 : std::max(-v, std::numeric_limits<double>::min()); };
      rr.record("strong", violation(ec.strong));
      rr.record("weak", violation(ec.weak));
      sb.merge("energetics", rr, p);
    });
    sb.guarded("energetics", "current_divergence", tol.analytic, p, [&] {
      ResidualReport rr("current_divergence", tol.analytic);
      const auto b = dynamics::bilinear_bridge(st);
      double div = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) div += st.geo.g_inv(i, j) * b.grad_U(i, j);
      rr.record("divU", div);
      sb.merge("energetics", rr, p);
    });
  }
  return suite;
}

std::vector<StressRow> stress_table(const HydrogenParams& hp, const GridSpec& grid) {
  const HydrogenFields hf = fields(hp, chart_for(grid));
  std::vector<StressRow> rows;
  for (const Point& p : grid.points()) {
    const auto st = hf.polar.at(p);
    const auto kin = st.kinematics();
    const auto et = energetics::energy_tensor(st);
    const auto fp = energetics::project_fluid(et.T_sym, st, kin);
    for (const auto& smp : stress_samples(hf, st, fp, p))
      rows.push_back({p, smp.name, smp.computed, smp.closed, rel_err(smp.computed, smp.closed, smp.scale)});
    rows.push_back({p, "Q", fp.Q, 0.0, std::abs(fp.Q)});
  }
  return rows;
}

}  // namespace polar::hydrogen
