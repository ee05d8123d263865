#include "polar/kinematics/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polar::kinematics {

Vector raise_vector(const Vector& v, const LocalGeometry& geo) { return raise(v, 0, geo.g_inv); }

Vector apply(const Rank2& m, const Vector& v) {
  Vector out({m.variance(0)});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out(a) += m(a, b) * v(b);
  return out;
}

CongruencePair CongruencePair::from_lower(const Vector& u, const Vector& s, const LocalGeometry& geo,
                                          double tolerance) {
  CongruencePair c;
  c.u = u;
  c.s = s;
  c.u_up = raise(u, 0, geo.g_inv);
  c.s_up = raise(s, 0, geo.g_inv);
  const double uu = dot(c.u_up, u);
  const double ss = dot(c.s_up, s);
  const double us = dot(c.u_up, s);
  if (std::abs(uu - 1.0) > tolerance || std::abs(ss + 1.0) > tolerance || std::abs(us) > tolerance)
    throw NormalizationError("congruence pair not orthonormal at " + geo.point.str() +
                             ": u.u=" + std::to_string(uu) + " s.s=" + std::to_string(ss) +
                             " u.s=" + std::to_string(us));
  return c;
}

ProjectorPair projectors(const CongruencePair& c, const LocalGeometry& geo) {
  ProjectorPair p;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      // extended precision: entries such as N_tt = 1 - u_t^2 cancel near the axis
      using L = long double;
      p.N(a, b) = static_cast<double>(L(geo.g(a, b)) - L(c.u(a)) * c.u(b) + L(c.s(a)) * c.s(b));
      p.N_up(a, b) =
          static_cast<double>(L(geo.g_inv(a, b)) - L(c.u_up(a)) * c.u_up(b) + L(c.s_up(a)) * c.s_up(b));
      p.N_mixed(a, b) =
          static_cast<double>(L(a == b ? 1.0 : 0.0) - L(c.u_up(a)) * c.u(b) + L(c.s_up(a)) * c.s(b));
      double e = 0.0;
      double eu = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          e += geo.eps(a, b, i, j) * c.u_up(i) * c.s_up(j);
          eu += geo.eps_up(a, b, i, j) * c.u(i) * c.s(j);
        }
      p.eps2(a, b) = e;
      p.eps2_up(a, b) = eu;
    }
  return p;
}

ProjectorPair projectors(const Field<1>& u, const Field<1>& s, const Metric& metric, const Point& p) {
  const LocalGeometry geo = local_geometry(metric, p);
  return projectors(CongruencePair::from_lower(u(p), s(p), geo), geo);
}

double projector_identity_defect(const CongruencePair& c, const ProjectorPair& p, const LocalGeometry&) {
  double worst = 0.0;
  auto track = [&worst](double v) { worst = std::max(worst, std::abs(v)); };
  double trace = 0.0;
  double ee = 0.0;
  for (int a = 0; a < 4; ++a) {
    trace += p.N_mixed(a, a);
    double nu = 0.0, ns = 0.0, eu = 0.0, es = 0.0;
    for (int b = 0; b < 4; ++b) {
      nu += p.N(b, a) * c.u_up(b);
      ns += p.N(b, a) * c.s_up(b);
      eu += p.eps2(b, a) * c.u_up(b);
      es += p.eps2(b, a) * c.s_up(b);
      ee += p.eps2(a, b) * p.eps2_up(a, b);
      double nn = 0.0, epe = 0.0;
      for (int d = 0; d < 4; ++d) {
        nn += p.N(d, a) * p.N_up(d, b);       // N_{da} N^{db} = N_a^b
        epe += p.eps2(a, d) * p.eps2_up(b, d);  // eps_{ad} eps^{bd} = N_a^b
      }
      track(nn - p.N_mixed(b, a));
      track(epe - p.N_mixed(b, a));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          track(p.eps2(a, b) * p.eps2_up(i, j) -
                (p.N_mixed(i, a) * p.N_mixed(j, b) - p.N_mixed(i, b) * p.N_mixed(j, a)));
    }
    track(nu);
    track(ns);
    track(eu);
    track(es);
  }
  track(trace - 2.0);
  track(ee - 2.0);
  return worst;
}

KinematicData decompose(const Rank2& gu, const Rank2& gs, const CongruencePair& c,
                        const ProjectorPair& p, const LocalGeometry& geo) {
  KinematicData k;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      k.theta_exp += geo.g_inv(i, j) * gu(i, j);
      k.Sigma += (p.N_up(i, j) + 2.0 * c.s_up(i) * c.s_up(j)) * gu(i, j) / 3.0;
      k.Omega += 0.5 * gu(i, j) * p.eps2_up(i, j);
      k.Acc += c.s_up(j) * c.u_up(i) * gu(i, j);
      k.phi_sheet += p.N_up(i, j) * gs(i, j);
      k.xi += 0.5 * gs(i, j) * p.eps2_up(i, j);
    }

  // u^b D_b u_a, s^b D_b s_a, u^b D_b s_a
  Vector udu, sds, uds;
  // s^j (D_i u_j + D_j u_i)
  Vector sym_s;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      udu(a) += c.u_up(b) * gu(b, a);
      sds(a) += c.s_up(b) * gs(b, a);
      uds(a) += c.u_up(b) * gs(b, a);
      sym_s(a) += c.s_up(b) * (gu(a, b) + gu(b, a));
    }
  // eps^{bijk} u_i D_j u_k
  Vector curl_u = Vector::upper();
  for (int b = 0; b < 4; ++b)
    for (int i = 0; i < 4; ++i) {
      if (c.u(i) == 0.0) continue;
      for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) curl_u(b) += geo.eps_up(b, i, j, l) * c.u(i) * gu(j, l);
    }

  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 4; ++i) {
      const double na = p.N_mixed(i, a);
      k.Sigma_v(a) += 0.5 * na * sym_s(i);
      k.Acc_v(a) += na * udu(i);
      k.a_v(a) += na * sds(i);
      k.alpha_v(a) += na * uds(i);
      k.Omega_v(a) += 0.5 * p.N(a, i) * curl_u(i);
    }

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double su = 0.0, ss = 0.0;
      for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) {
          const double w = 0.5 * (p.N_mixed(j, a) * p.N_mixed(l, b) + p.N_mixed(j, b) * p.N_mixed(l, a) -
                                  p.N(a, b) * p.N_up(l, j));
          su += w * gu(j, l);
          ss += w * gs(j, l);
        }
      k.Sigma_t(a, b) = su;
      k.zeta_t(a, b) = ss;
    }
  return k;
}

Gradients reconstruct_gradients(const KinematicData& k, const CongruencePair& c, const ProjectorPair& p,
                                const LocalGeometry& geo) {
  const Vector Om_up = raise(k.Omega_v, 0, geo.g_inv);
  const Vector eps_om = apply(p.eps2, Om_up);  // eps_ic Omega^c
  const Vector& u = c.u;
  const Vector& s = c.s;
  Gradients g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      g.grad_u(i, j) = k.Sigma_t(i, j) - (k.Sigma_v(i) * s(j) + k.Sigma_v(j) * s(i)) +
                       0.5 * k.Sigma * (p.N(i, j) + 2.0 * s(i) * s(j)) -
                       (s(i) * eps_om(j) - s(j) * eps_om(i)) + p.eps2(i, j) * k.Omega +
                       u(i) * k.Acc_v(j) - k.Acc * u(i) * s(j) +
                       k.theta_exp / 3.0 * (p.N(i, j) - s(i) * s(j));
      g.grad_s(i, j) = k.zeta_t(i, j) - s(i) * k.a_v(j) + (k.Sigma - k.theta_exp / 3.0) * s(i) * u(j) -
                       k.Sigma_v(i) * u(j) + eps_om(i) * u(j) - k.Acc * u(i) * u(j) + u(i) * k.alpha_v(j) +
                       p.eps2(i, j) * k.xi + 0.5 * p.N(i, j) * k.phi_sheet;
    }
  return g;
}

TensorialConnection make_connection(const Rank3& R, const Vector& V, const LocalGeometry& geo) {
  TensorialConnection t;
  t.R = R;
  t.V = V;
  const Rank3 Rup = raise_all(R, geo.g_inv);
  for (int k = 0; k < 4; ++k)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        t.R_trace(k) += R(k, a, b) * geo.g_inv(a, b);
        for (int c = 0; c < 4; ++c) t.B(k) += 0.5 * geo.eps(k, a, b, c) * Rup(a, b, c);
      }
  return t;
}

TensorialConnection assemble_R(const KinematicData& k, const CongruencePair& c, const Vector& V,
                               const ProjectorPair& p, const LocalGeometry& geo) {
  const Vector Om_up = raise(k.Omega_v, 0, geo.g_inv);
  const Vector eps_om = apply(p.eps2, Om_up);  // eps_bc Omega^c
  const Vector& u = c.u;
  const Vector& s = c.s;
  const double th3 = k.theta_exp / 3.0;
  Rank3 R;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      const double us = u(a) * s(b) - u(b) * s(a);
      for (int kk = 0; kk < 4; ++kk) {
        // X_[a Y_b] with a trailing k index
        auto ua = [&](const Rank2& Y) { return u(a) * Y(b, kk) - u(b) * Y(a, kk); };
        auto sa = [&](const Rank2& Y) { return s(a) * Y(b, kk) - s(b) * Y(a, kk); };
        auto uv = [&](const Vector& Y) { return u(a) * Y(b) - u(b) * Y(a); };
        auto sv = [&](const Vector& Y) { return s(a) * Y(b) - s(b) * Y(a); };
        double r = ua(k.Sigma_t) + uv(k.Acc_v) * u(kk) - uv(k.Sigma_v) * s(kk) - uv(eps_om) * s(kk) -
                   ua(p.eps2) * k.Omega + (th3 + 0.5 * k.Sigma) * ua(p.N);
        r += -sa(k.zeta_t) - sv(k.alpha_v) * u(kk) + sv(k.a_v) * s(kk) + sa(p.eps2) * k.xi -
             0.5 * k.phi_sheet * sa(p.N);
        r += -us * (k.Acc * u(kk) + th3 * s(kk) - k.Sigma * s(kk) + k.Sigma_v(kk) - eps_om(kk));
        r += 2.0 * p.eps2(a, b) * V(kk);
        R(a, b, kk) = r;
      }
    }
  return make_connection(R, V, geo);
}

TensorialConnection connection_from_gradients(const Rank2& gu, const Rank2& gs, const CongruencePair& c,
                                              const Vector& V, const ProjectorPair& p,
                                              const LocalGeometry& geo) {
  const Vector& u = c.u;
  const Vector& s = c.s;
  Rank3 R;
  for (int kk = 0; kk < 4; ++kk) {
    double dus = 0.0;  // s^c D_k u_c
    for (int cc = 0; cc < 4; ++cc) dus += c.s_up(cc) * gu(kk, cc);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        R(a, b, kk) = u(a) * gu(kk, b) - u(b) * gu(kk, a) + s(b) * gs(kk, a) - s(a) * gs(kk, b) +
                      (u(a) * s(b) - u(b) * s(a)) * dus + 2.0 * p.eps2(a, b) * V(kk);
  }
  return make_connection(R, V, geo);
}

Vector extract_V(const Rank3& R, const ProjectorPair& p, double tolerance) {
  const double scale = std::max(1.0, R.max_abs());
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b)
      for (int k = 0; k < 4; ++k)
        if (std::abs(R(a, b, k) + R(b, a, k)) > tolerance * scale)
          throw ContractViolation("tensorial connection is not antisymmetric in its first pair");
  Vector V;
  for (int k = 0; k < 4; ++k)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) V(k) += 0.25 * p.eps2_up(a, b) * R(a, b, k);
  return V;
}

double gradient_identity_defect(const Rank3& R, const Rank2& gu, const Rank2& gs, const CongruencePair& c) {
  double worst = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      double ru = 0.0, rs = 0.0;
      for (int i = 0; i < 4; ++i) {
        ru += c.u_up(i) * R(i, j, k);
        rs += c.s_up(i) * R(i, j, k);
      }
      worst = std::max({worst, std::abs(ru - gu(k, j)), std::abs(rs - gs(k, j))});
    }
  return worst;
}

DirectionalSplit directional_split(const Vector& grad_f, const CongruencePair& c, const ProjectorPair& p) {
  DirectionalSplit d;
  d.dot = dot(c.u_up, grad_f);
  d.hat = dot(c.s_up, grad_f);
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 4; ++i) d.delta(a) += p.N_mixed(i, a) * grad_f(i);
  return d;
}

DirectionalSplit directional_split(const Field<0>& f, const CongruencePair& c, const ProjectorPair& p,
                                   const Metric& metric, const Point& pt) {
  return directional_split(covariant_derivative(f, metric, pt), c, p);
}

}  // namespace polar::kinematics
