#include "polar/energetics/energetics.hpp"

#include <cmath>
#include <string>

#include "detail/fd.hpp"

namespace polar::energetics {

using kinematics::directional_split;
using kinematics::raise_vector;

Rank2 hydrodynamic_tensor(const Vector& P, const Vector& U_up, const Vector& S, const Vector& grad_beta,
                          const Rank3& R, const LocalGeometry& geo) {
  const Vector P_up = raise_vector(P, geo);
  const Vector db_up = raise_vector(grad_beta, geo);
  const Vector S_up = raise_vector(S, geo);
  // R_ij^b
  const Rank3 R_llu = raise(R, 2, geo.g_inv);
  Rank2 T = Rank2::upper();
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      double rr = 0.0;
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
          const double r = R_llu(i, j, b);
          if (r == 0.0) continue;
          for (int k = 0; k < kDim; ++k) rr += r * geo.eps_up(a, i, j, k) * S(k);
        }
      T(a, b) = P_up(b) * U_up(a) + 0.5 * db_up(b) * S_up(a) - 0.25 * rr;
    }
  return T;
}

EnergyTensors energy_tensor(const PolarState& st, bool with_F) {
  EnergyTensors et;
  const double w = 2.0 * st.phi2;
  const Vector U_up = st.pair.u_up * w;
  const Vector S = st.pair.s * w;
  const Vector S_up = st.pair.s_up * w;
  et.T = hydrodynamic_tensor(st.P, U_up, S, st.grad_beta, st.conn.R, st.geo);
  et.T_sym = symmetrize_belinfante(et.T);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) {
        double v = 0.0;
        for (int k = 0; k < kDim; ++k) v += st.geo.eps(a, b, c, k) * S_up(k);
        et.S3(a, b, c) = 0.25 * v;
      }
  et.J = U_up * st.charge;
  if (with_F) {
    if (st.charge == 0.0)
      throw GaugeDegenerateError("field strength requested for a neutral state at " + st.geo.point.str());
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b) et.F(a, b) = -(st.grad_P(a, b) - st.grad_P(b, a)) / st.charge;
    et.has_F = true;
  }
  return et;
}

Rank2 symmetrize_belinfante(const Rank2& T) { return (T + transpose(T)) * 0.5; }

FluidProjection project_fluid(const Rank2& T, const CongruencePair& c, const ProjectorPair& pr) {
  // Sheet pieces are small differences of large components of T, so the
  // contractions accumulate in long double.
  using L = long double;
  const Vector& u = c.u;
  const Vector& s = c.s;
  L mu = 0, Q = 0, p = 0, Pi = 0, NT = 0;
  L Tu[kDim] = {}, Ts[kDim] = {};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      const L tab = T(a, b);
      Tu[a] += tab * u(b);
      Ts[a] += tab * s(b);
      mu += tab * u(a) * u(b);
      Q -= tab * s(a) * u(b);
      p -= tab * (L(pr.N(a, b)) - L(s(a)) * s(b)) / 3;
      Pi += tab * (L(pr.N(a, b)) + 2 * L(s(a)) * s(b)) / 3;
      NT += tab * pr.N(a, b);
    }
  FluidProjection fp;
  fp.mu = static_cast<double>(mu);
  fp.Q = static_cast<double>(Q);
  fp.p = static_cast<double>(p);
  fp.Pi = static_cast<double>(Pi);
  for (int a = 0; a < kDim; ++a) {
    L q = 0, pv = 0;
    for (int e = 0; e < kDim; ++e) {
      q += pr.N_mixed(a, e) * Tu[e];
      pv -= pr.N_mixed(a, e) * Ts[e];
    }
    fp.Qv(a) = static_cast<double>(q);
    fp.Piv(a) = static_cast<double>(pv);
  }
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      L v = 0;
      for (int cc = 0; cc < kDim; ++cc)
        for (int d = 0; d < kDim; ++d) v += L(pr.N_mixed(a, cc)) * pr.N_mixed(b, d) * T(cc, d);
      fp.Pit(a, b) = static_cast<double>(v - L(0.5) * pr.N_up(a, b) * NT);
    }
  fp.m_frak = static_cast<double>(mu - 3 * p);
  fp.p_s = static_cast<double>(p + Pi);
  fp.p_perp = static_cast<double>(Pi / 2 - p);
  return fp;
}

FluidProjection project_fluid(const Rank2& T_sym, const PolarState& st, const KinematicData& kin) {
  FluidProjection fp = project_fluid(T_sym, st.pair, st.proj);
  fp.T3R = temperature(kin, dot(st.pair.s_up, st.grad_beta));
  return fp;
}

FluidProjection closed_form_projection(const PolarState& st, const KinematicData& kin) {
  FluidProjection fp;
  const double f = st.phi2;
  const auto bet = directional_split(st.grad_beta, st.pair, st.proj);
  const auto lnp = directional_split(st.grad_ln_phi2, st.pair, st.proj);
  const double m = st.mass;
  fp.mu = 2.0 * f * (m * std::cos(st.beta) - kin.Omega - 0.5 * bet.hat);
  fp.p = -f * (2.0 * kin.Omega + bet.hat) / 3.0;
  fp.Q = f * (kin.xi + bet.dot);
  fp.Pi = 2.0 * f * (kin.Omega - bet.hat) / 3.0;

  const Rank2& eu = st.proj.eps2_up;
  const Vector Om_up = raise_vector(kin.Omega_v, st.geo);
  const Vector db_up = raise_vector(bet.delta, st.geo);
  for (int a = 0; a < kDim; ++a) {
    double q = 0.0, pv = 0.0;
    for (int k = 0; k < kDim; ++k) {
      q += eu(a, k) * (2.0 * kin.Acc_v(k) - kin.a_v(k) - lnp.delta(k));
      pv += kin.Sigma_v(k) * eu(k, a);
    }
    fp.Qv(a) = 0.5 * f * q;
    fp.Piv(a) = 0.5 * f * (pv + Om_up(a) + db_up(a));
  }
  // Sigma^a_j
  const Rank2 Sig_mixed = raise(kin.Sigma_t, 0, st.geo.g_inv);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      double v = 0.0;
      for (int j = 0; j < kDim; ++j) v += Sig_mixed(a, j) * eu(j, b) + Sig_mixed(b, j) * eu(j, a);
      fp.Pit(a, b) = -0.5 * f * v;
    }
  fp.m_frak = fp.mu - 3.0 * fp.p;
  fp.p_s = fp.p + fp.Pi;
  fp.p_perp = 0.5 * fp.Pi - fp.p;
  fp.T3R = temperature(kin, bet.hat);
  return fp;
}

Rank2 reassemble(const FluidProjection& fp, const CongruencePair& c, const ProjectorPair& pr) {
  const Vector& u = c.u_up;
  const Vector& s = c.s_up;
  Rank2 T = Rank2::upper();
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      T(a, b) = fp.mu * u(a) * u(b) + fp.Q * (u(a) * s(b) + s(a) * u(b)) + fp.p_s * s(a) * s(b) +
                fp.p_perp * pr.N_up(a, b) + u(a) * fp.Qv(b) + fp.Qv(a) * u(b) + s(a) * fp.Piv(b) +
                fp.Piv(a) * s(b) + fp.Pit(a, b);
  return T;
}

double temperature(const KinematicData& kin, double beta_hat) { return -0.5 * beta_hat - kin.Omega; }

double temperature_covariant(const PolarState& st) {
  double v = -0.5 * dot(st.pair.s_up, st.grad_beta);
  const Vector& s = st.pair.s;
  const Vector& u = st.pair.u;
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i) {
      if (s(k) == 0.0 || u(i) == 0.0) continue;
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) v += 0.5 * st.geo.eps_up(k, i, a, b) * s(k) * u(i) * st.grad_u(a, b);
    }
  return v;
}

EnergyConditions energy_conditions(const FluidProjection& fp, double phi2) {
  if (!(phi2 > 0.0)) throw ContractViolation("phi2 must be positive");
  EnergyConditions ec;
  ec.strong = (fp.mu + 3.0 * fp.p) / (2.0 * phi2);
  ec.weak = fp.mu / phi2;
  ec.strong_ok = ec.strong >= 0.0;
  ec.weak_ok = ec.weak >= 0.0;
  return ec;
}

EnergyConditions energy_conditions_from_temperature(double m_cos_beta, double T3R) {
  EnergyConditions ec;
  ec.strong = m_cos_beta + 2.0 * T3R;
  ec.weak = 2.0 * (m_cos_beta + T3R);
  ec.strong_ok = ec.strong >= 0.0;
  ec.weak_ok = ec.weak >= 0.0;
  return ec;
}

namespace {

std::string idx(const char* name, int a) { return std::string(name) + "[" + std::to_string(a) + "]"; }
std::string idx(const char* name, int a, int b) {
  return std::string(name) + "[" + std::to_string(a) + std::to_string(b) + "]";
}

// 1/4 F_cd F^cd g^ab - F^ac F^b_c
Rank2 field_stress(const Rank2& F, const LocalGeometry& geo) {
  const Rank2 F_up = raise_all(F, geo.g_inv);
  const Rank2 F_ul = raise(F, 0, geo.g_inv);  // F^a_c
  double FF = 0.0;
  for (int c = 0; c < kDim; ++c)
    for (int d = 0; d < kDim; ++d) FF += F(c, d) * F_up(c, d);
  Rank2 T = Rank2::upper();
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      double v = 0.25 * FF * geo.g_inv(a, b);
      for (int c = 0; c < kDim; ++c) v -= F_up(a, c) * F_ul(b, c);
      T(a, b) = v;
    }
  return T;
}

}  // namespace

ResidualReport mpd_residuals(const PolarFields& fields, const Point& p, const MpdOptions& opts) {
  ResidualReport rep("mpd", opts.tolerance);
  rep.set_point(p);
  const PolarState st = fields.at(p);
  const bool charged = st.charge != 0.0;
  const EnergyTensors et = energy_tensor(st, charged);

  auto tensor_at = [&](const Point& q) {
    const PolarState sq = fields.at(q);
    EnergyTensors e = energy_tensor(sq, charged && opts.include_field_stress);
    Rank2 T = e.T;
    if (opts.include_field_stress) T += field_stress(e.F, sq.geo);
    return T;
  };
  const auto fd = detail::extrapolated_partials<2>(tensor_at, p, opts.scheme, fields.metric.domain());
  Rank2 T0 = et.T;
  if (opts.include_field_stress) T0 += field_stress(et.F, st.geo);
  // slot 0 is the derivative index
  const Rank3 DT = covariant_from_partials(T0, fd.d, st.geo.gamma);

  const double floor = 4.0 * fd.noise_floor;

  // S_abk R^abki with R^a_bcd from the chart
  const Rank4 riem = riemann(fields.metric, p);
  Rank4 riem_up = riem;
  for (int sl = 1; sl < 4; ++sl) riem_up = raise(riem_up, sl, st.geo.g_inv);
  Vector SR = Vector::upper();
  for (int i = 0; i < kDim; ++i)
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b)
        for (int k = 0; k < kDim; ++k) SR(i) += et.S3(a, b, k) * riem_up(a, b, k, i);

  Rank2 F_up = Rank2::upper();
  if (charged) F_up = raise_all(et.F, st.geo.g_inv);
  const Vector J_low = lower(et.J, 0, st.geo.g);
  for (int i = 0; i < kDim; ++i) {
    double div = 0.0, force = 0.0;
    for (int k = 0; k < kDim; ++k) {
      div += DT(k, k, i);
      force += J_low(k) * F_up(k, i);
    }
    rep.record(idx("consT", i), div - SR(i) + force);
  }

  const dynamics::BilinearBridge b = dynamics::bilinear_bridge(st);
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j) {
      double ds = 0.0;
      for (int k = 0; k < kDim; ++k)
        for (int q = 0; q < kDim; ++q) {
          const double e = st.geo.eps_up(k, i, j, q);
          if (e == 0.0) continue;
          ds += 0.25 * e * b.grad_S(k, q);
        }
      rep.record(idx("consS", i, j), ds + 0.5 * (et.T(i, j) - et.T(j, i)));
    }

  double divU = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) divU += st.geo.g_inv(i, j) * b.grad_U(i, j);
  rep.record("divU", divU);
  double sr = 0.0;
  for (int i = 0; i < kDim; ++i) sr = std::max(sr, std::abs(SR(i)));
  rep.record("SR", sr);
  if (sr >= opts.curvature_tolerance)
    rep.warn("mpd: S.R term " + std::to_string(sr) + " above " + std::to_string(opts.curvature_tolerance) + " at " +
             p.str());
  // only a residual above the configured tolerance is attributed to round-off
  if (rep.max_abs() > opts.tolerance && 10.0 * floor > opts.tolerance)
    rep.widen_tolerance(10.0 * floor, "mpd: finite-difference noise floor " + std::to_string(floor) + " at " +
                                          p.str() + ", tolerance widened");
  return rep;
}

}  // namespace polar::energetics
