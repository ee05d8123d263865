#include "polar/dynamics/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "detail/fd.hpp"

namespace polar::dynamics {

using kinematics::directional_split;
using kinematics::raise_vector;

namespace {

std::string idx(const char* name, int a) { return std::string(name) + "[" + std::to_string(a) + "]"; }
std::string idx(const char* name, int a, int b) {
  return std::string(name) + "[" + std::to_string(a) + std::to_string(b) + "]";
}

Rank2 raise2(const Rank2& t, const Rank2& g_inv) { return raise_all(t, g_inv); }

}  // namespace

void PolarState::validate(double tolerance) const {
  if (!(phi2 > 0.0)) throw ContractViolation("phi2 must be positive at " + geo.point.str());
  CongruencePair::from_lower(pair.u, pair.s, geo, tolerance);
}

KinematicData PolarState::kinematics() const {
  return kinematics::decompose(grad_u, grad_s, pair, proj, geo);
}

PolarState PolarFields::at(const Point& p) const {
  const ChartDomain& dom = metric.domain();
  dom.require(p);
  PolarState st;
  st.geo = local_geometry(metric, p);
  st.mass = mass;
  st.charge = charge;

  st.phi2 = phi2(p)[0];
  if (!(st.phi2 > 0.0)) throw ContractViolation("phi2 must be positive at " + p.str());
  st.beta = beta(p)[0];
  const auto dphi2 = phi2.partials(p, &dom);
  const auto dbeta = beta.partials(p, &dom);
  for (int k = 0; k < kDim; ++k) {
    st.grad_ln_phi2(k) = dphi2[k][0] / st.phi2;
    st.grad_beta(k) = dbeta[k][0];
  }

  const Vector uv = u(p);
  const Vector sv = s(p);
  st.pair = CongruencePair::from_lower(uv, sv, st.geo);
  st.proj = kinematics::projectors(st.pair, st.geo);
  st.grad_u = covariant_from_partials(uv, u.partials(p, &dom), st.geo.gamma);
  st.grad_s = covariant_from_partials(sv, s.partials(p, &dom), st.geo.gamma);

  st.P = P(p);
  st.grad_P = covariant_from_partials(st.P, P.partials(p, &dom), st.geo.gamma);

  if (R.valid()) {
    const Rank3 r = R(p);
    st.conn = kinematics::make_connection(r, kinematics::extract_V(r, st.proj), st.geo);
  } else if (V.valid()) {
    st.conn = kinematics::connection_from_gradients(st.grad_u, st.grad_s, st.pair, V(p), st.proj, st.geo);
  } else {
    throw ContractViolation("PolarFields needs either R or V");
  }
  return st;
}

AuxFields aux_fields(const PolarState& st) {
  AuxFields a;
  a.Bvec = st.conn.B;
  a.Rvec = st.conn.R_trace;
  const Vector P_up = raise_vector(st.P, st.geo);
  const Vector& u = st.pair.u;
  const Vector& s = st.pair.s;
  const double cb = std::cos(st.beta);
  const double sb = std::sin(st.beta);
  const double pu = dot(P_up, u);
  const double ps = dot(P_up, s);
  for (int i = 0; i < kDim; ++i) {
    a.E(i) = 0.5 * (a.Bvec(i) + st.grad_beta(i) + 2.0 * st.mass * s(i) * cb);
    a.F(i) = 0.5 * (a.Rvec(i) + st.grad_ln_phi2(i) + 2.0 * st.mass * s(i) * sb);
    a.H(i) = a.Bvec(i) - 2.0 * (pu * s(i) - u(i) * ps);
    double e = 0.0;
    for (int j = 0; j < kDim; ++j) e += P_up(j) * st.proj.eps2(i, j);
    a.Xi(i) = a.Rvec(i) - 2.0 * e;
  }
  return a;
}

ResidualReport residual_normal_form(const PolarState& st, double tolerance) {
  ResidualReport rep("normal_form", tolerance);
  rep.set_point(st.geo.point);
  const AuxFields a = aux_fields(st);
  const Vector P_up = raise_vector(st.P, st.geo);
  const Vector& u = st.pair.u;
  const Vector& s = st.pair.s;
  const double pu = dot(P_up, u);
  const double ps = dot(P_up, s);
  for (int i = 0; i < kDim; ++i) {
    double pe = 0.0;
    for (int j = 0; j < kDim; ++j) pe += P_up(j) * st.proj.eps2(i, j);
    rep.record(idx("m", i), a.F(i) - pe);
    rep.record(idx("b", i), a.E(i) - (pu * s(i) - u(i) * ps));
  }
  return rep;
}

ResidualReport residual_momentum_group(const PolarState& st, double tolerance) {
  ResidualReport rep("momentum_group", tolerance);
  rep.set_point(st.geo.point);
  const AuxFields a = aux_fields(st);
  const Vector P_up = raise_vector(st.P, st.geo);
  const Vector& uu = st.pair.u_up;
  const Vector& su = st.pair.s_up;
  const double Eu = dot(a.E, uu), Es = dot(a.E, su), Fu = dot(a.F, uu), Fs = dot(a.F, su);
  for (int k = 0; k < kDim; ++k) {
    double Fe = 0.0, Ee = 0.0;
    for (int i = 0; i < kDim; ++i) {
      Fe += a.F(i) * st.proj.eps2_up(i, k);
      Ee += a.E(i) * st.proj.eps2_up(i, k);
    }
    rep.record(idx("momentum", k), Fe + (Eu * su(k) - uu(k) * Es) - P_up(k));
    rep.record(idx("complementary", k), (Fu * su(k) - uu(k) * Fs) - Ee);
  }
  return rep;
}

ResidualReport residual_AB_groups(const PolarState& st, double tolerance) {
  ResidualReport rep("AB_groups", tolerance);
  rep.set_point(st.geo.point);
  const AuxFields a = aux_fields(st);
  const Vector F_up = raise_vector(a.F, st.geo);
  const Vector& u = st.pair.u;
  const Vector& s = st.pair.s;
  const Vector& uu = st.pair.u_up;
  const Vector& su = st.pair.s_up;
  rep.record("A1", dot(a.F, uu));
  rep.record("A2", dot(a.E, uu) + dot(st.P, su));
  rep.record("B1", dot(a.F, su));
  rep.record("B2", dot(a.E, su) + dot(st.P, uu));
  for (int p = 0; p < kDim; ++p)
    for (int q = 0; q < kDim; ++q) {
      double A3 = F_up(p) * uu(q) - F_up(q) * uu(p);
      double B3 = F_up(p) * su(q) - F_up(q) * su(p);
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
          const double e = st.geo.eps_up(p, q, i, j);
          if (e == 0.0) continue;
          A3 += e * (a.E(i) * u(j) + st.P(i) * s(j));
          B3 += e * (a.E(i) * s(j) + st.P(i) * u(j));
        }
      rep.record(idx("A3", p, q), A3);
      rep.record(idx("B3", p, q), B3);
    }
  return rep;
}

ResidualReport residual_projected(const PolarState& st, const KinematicData& kin, double tolerance) {
  ResidualReport rep("projected", tolerance);
  rep.set_point(st.geo.point);
  const auto lnp = directional_split(st.grad_ln_phi2, st.pair, st.proj);
  const auto bet = directional_split(st.grad_beta, st.pair, st.proj);
  const Vector PV = st.P - st.conn.V;
  const Vector alpha_up = raise_vector(kin.alpha_v, st.geo);
  const double m = st.mass;

  rep.record("expansion", kin.theta_exp + lnp.dot);
  rep.record("sheet", kin.phi_sheet - kin.Acc + lnp.hat - 2.0 * m * std::sin(st.beta));
  for (int a = 0; a < kDim; ++a) {
    double ae = 0.0;
    for (int k = 0; k < kDim; ++k) ae += alpha_up(k) * st.proj.eps2(k, a);
    rep.record(idx("transverse", a), ae - 2.0 * kin.Omega_v(a) + bet.delta(a));
  }
  rep.record("u-projection",
             m * std::cos(st.beta) - kin.Omega - 0.5 * bet.hat - dot(PV, st.pair.u_up));
  rep.record("s-projection", dot(PV, st.pair.s_up) + kin.xi + 0.5 * bet.dot);
  for (int k = 0; k < kDim; ++k) {
    double lhs = 0.0, rhs = 0.0;
    for (int i = 0; i < kDim; ++i) {
      lhs += PV(i) * st.proj.N_up(i, k);
      rhs += (kin.a_v(i) - kin.Acc_v(i) + lnp.delta(i)) * st.proj.eps2_up(i, k);
    }
    rep.record(idx("sheet-projection", k), lhs - 0.5 * rhs);
  }
  return rep;
}

BilinearBridge bilinear_bridge(const PolarState& st) {
  BilinearBridge b;
  const double w = 2.0 * st.phi2;
  const double cb = std::cos(st.beta), sb = std::sin(st.beta);
  const Vector& u = st.pair.u;
  const Vector& s = st.pair.s;
  const Rank2& gi = st.geo.g_inv;
  b.Theta = w * sb;
  b.Phi = w * cb;
  b.U = u * w;
  b.S = s * w;
  b.grad_Theta = st.grad_ln_phi2 * b.Theta + st.grad_beta * b.Phi;
  b.grad_Phi = st.grad_ln_phi2 * b.Phi - st.grad_beta * b.Theta;
  for (int c = 0; c < kDim; ++c)
    for (int a = 0; a < kDim; ++a) {
      b.grad_U(c, a) = w * (st.grad_ln_phi2(c) * u(a) + st.grad_u(c, a));
      b.grad_S(c, a) = w * (st.grad_ln_phi2(c) * s(a) + st.grad_s(c, a));
    }

  // nabla_c u^i and nabla_c s^i
  Rank2 du_up({Variance::Lower, Variance::Upper});
  Rank2 ds_up({Variance::Lower, Variance::Upper});
  for (int c = 0; c < kDim; ++c)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        du_up(c, i) += gi(i, j) * st.grad_u(c, j);
        ds_up(c, i) += gi(i, j) * st.grad_s(c, j);
      }

  const Rank2& eps2 = st.proj.eps2;
  for (int a = 0; a < kDim; ++a)
    for (int bb = 0; bb < kDim; ++bb) b.M(a, bb) = b.Phi * eps2(a, bb) + b.Theta * (u(a) * s(bb) - u(bb) * s(a));

  for (int c = 0; c < kDim; ++c)
    for (int a = 0; a < kDim; ++a)
      for (int bb = 0; bb < kDim; ++bb) {
        double de = 0.0;
        for (int i = 0; i < kDim; ++i)
          for (int j = 0; j < kDim; ++j) {
            const double e = st.geo.eps(a, bb, i, j);
            if (e == 0.0) continue;
            de += e * (du_up(c, i) * st.pair.s_up(j) + st.pair.u_up(i) * ds_up(c, j));
          }
        const double dus = st.grad_u(c, a) * s(bb) + u(a) * st.grad_s(c, bb) - st.grad_u(c, bb) * s(a) -
                           u(bb) * st.grad_s(c, a);
        b.grad_M(c, a, bb) = b.grad_Phi(c) * eps2(a, bb) + b.Phi * de +
                             b.grad_Theta(c) * (u(a) * s(bb) - u(bb) * s(a)) + b.Theta * dus;
      }

  // K_ab = -1/2 eps_abij M^ij
  const Rank2 M_up = raise2(b.M, gi);
  Rank3 dM_up({Variance::Lower, Variance::Upper, Variance::Upper});
  {
    Rank3 t = raise(b.grad_M, 1, gi);
    dM_up = raise(t, 2, gi);
  }
  for (int a = 0; a < kDim; ++a)
    for (int bb = 0; bb < kDim; ++bb)
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
          const double e = st.geo.eps(a, bb, i, j);
          if (e == 0.0) continue;
          b.K(a, bb) -= 0.5 * e * M_up(i, j);
          for (int c = 0; c < kDim; ++c) b.grad_K(c, a, bb) -= 0.5 * e * dM_up(c, i, j);
        }
  return b;
}

ResidualReport residual_bilinear_group(const PolarState& st, double tolerance) {
  ResidualReport rep("bilinear_group", tolerance);
  rep.set_point(st.geo.point);
  const BilinearBridge b = bilinear_bridge(st);
  const Rank2& gi = st.geo.g_inv;
  const Rank4& eu = st.geo.eps_up;
  const Rank4& el = st.geo.eps;
  const Vector& B = st.conn.B;
  const Vector& Rt = st.conn.R_trace;
  const Rank3& R = st.conn.R;
  const double m = st.mass;
  const Vector P_up = raise_vector(st.P, st.geo);
  const Vector U_up = raise_vector(b.U, st.geo);
  const Vector S_up = raise_vector(b.S, st.geo);
  const Rank2 M_up = raise2(b.M, gi);
  const Rank2 K_up = raise2(b.K, gi);
  const Rank3 R_up = raise_all(R, gi);
  // R^{ij}_p
  Rank3 R_uul = raise(raise(R, 0, gi), 1, gi);

  for (int a = 0; a < kDim; ++a) {
    double PM = 0.0, PK = 0.0;
    for (int i = 0; i < kDim; ++i) {
      PM += P_up(i) * b.M(i, a);
      PK += P_up(i) * b.K(i, a);
    }
    rep.record(idx("polvi", a), b.grad_Phi(a) - B(a) * b.Theta + Rt(a) * b.Phi + 2.0 * PM);
    rep.record(idx("polar", a), b.grad_Theta(a) + B(a) * b.Phi + Rt(a) * b.Theta - 2.0 * PK + 2.0 * m * b.S(a));
  }

  for (int a = 0; a < kDim; ++a) {
    double divM = 0.0, RM = 0.0, divK = 0.0, RK = 0.0;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        RM += R_up(i, j, a) * b.M(i, j);
        RK += R(i, j, a) * K_up(i, j);
        divK += gi(i, j) * b.grad_K(j, i, a);
        for (int d = 0; d < kDim; ++d) divM += gi(i, j) * gi(a, d) * b.grad_M(i, j, d);
      }
    rep.record(idx("polvr", a), divM + 0.5 * RM - 2.0 * P_up(a) * b.Phi + 2.0 * m * U_up(a));
    rep.record(idx("polai", a), divK + 0.5 * RK + 2.0 * st.P(a) * b.Theta);
  }

  double divU = 0.0, divS = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      divU += gi(i, j) * b.grad_U(i, j);
      divS += gi(i, j) * b.grad_S(i, j);
    }
  const Vector bB = st.grad_beta + B;
  rep.record("poldivU", divU);
  rep.record("polLodd", dot(bB, U_up) + 2.0 * dot(st.P, S_up));
  rep.record("poldivS", divS - 2.0 * m * b.Theta);
  rep.record("polLeven", dot(bB, S_up) + 2.0 * dot(st.P, U_up) - 2.0 * m * b.Phi);

  // Y_pq = d_p beta X_q - 1/2 R^{ij}_p eps_ijqk X^k + 2 P_p W_q
  auto curl_source = [&](const Vector& X, const Vector& X_up, const Vector& W) {
    Rank2 Y;
    for (int p = 0; p < kDim; ++p)
      for (int q = 0; q < kDim; ++q) {
        double rr = 0.0;
        for (int i = 0; i < kDim; ++i)
          for (int j = 0; j < kDim; ++j) {
            if (R_uul(i, j, p) == 0.0) continue;
            for (int k = 0; k < kDim; ++k) rr += R_uul(i, j, p) * el(i, j, q, k) * X_up(k);
          }
        Y(p, q) = st.grad_beta(p) * X(q) - 0.5 * rr + 2.0 * st.P(p) * W(q);
      }
    return Y;
  };
  const Rank2 YU = curl_source(b.U, U_up, b.S);
  const Rank2 YS = curl_source(b.S, S_up, b.U);
  const Rank2 dU_up = raise2(b.grad_U, gi);
  const Rank2 dS_up = raise2(b.grad_S, gi);
  for (int a = 0; a < kDim; ++a)
    for (int c = a + 1; c < kDim; ++c) {
      double eU = 0.0, eS = 0.0;
      for (int p = 0; p < kDim; ++p)
        for (int q = 0; q < kDim; ++q) {
          eU += eu(a, c, p, q) * YU(p, q);
          eS += eu(a, c, p, q) * YS(p, q);
        }
      rep.record(idx("polcurlU", a, c), dU_up(a, c) - dU_up(c, a) + eU - 2.0 * m * M_up(a, c));
      rep.record(idx("polcurlS", a, c), dS_up(a, c) - dS_up(c, a) + eS);
    }
  return rep;
}

ResidualReport integrability(const PolarFields& f, const Point& p, FdScheme sch, double tolerance) {
  ResidualReport rep("integrability", tolerance);
  rep.set_point(p);
  const PolarState st = f.at(p);

  // Row 0 holds H, row 1 holds Xi.
  auto potentials = [&f](const Point& q) {
    const AuxFields a = aux_fields(f.at(q));
    Rank2 out;
    for (int i = 0; i < kDim; ++i) {
      out(0, i) = a.H(i);
      out(1, i) = a.Xi(i);
    }
    return out;
  };
  const auto fd = detail::extrapolated_partials<2>(potentials, p, sch, f.metric.domain());
  std::array<Vector, kDim> dH, dX;
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i) {
      dH[k](i) = fd.d[k](0, i);
      dX[k](i) = fd.d[k](1, i);
    }
  // A residual combines up to four derivative terms.
  const double floor = 4.0 * fd.noise_floor;

  const AuxFields a = aux_fields(st);
  const Rank2 DH = covariant_from_partials(a.H, dH, st.geo.gamma);
  const Rank2 DX = covariant_from_partials(a.Xi, dX, st.geo.gamma);
  const double m = st.mass;
  const double cb = std::cos(st.beta), sb = std::sin(st.beta);
  const Vector& s = st.pair.s;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j) {
      const double cs = st.grad_s(i, j) - st.grad_s(j, i);
      const double hs = a.H(i) * s(j) - a.H(j) * s(i);
      rep.record(idx("curlH", i, j), DH(i, j) - DH(j, i) + 2.0 * m * cs * cb + 2.0 * m * hs * sb);
      rep.record(idx("curlXi", i, j), DX(i, j) - DX(j, i) + 2.0 * m * cs * sb - 2.0 * m * hs * cb);
    }
  const double xi = st.kinematics().xi;
  double eH = 0.0, eX = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      eH += DH(i, j) * st.proj.eps2_up(i, j);
      eX += DX(i, j) * st.proj.eps2_up(i, j);
    }
  rep.record("epsH", eH + 4.0 * m * xi * cb);
  rep.record("epsXi", eX + 4.0 * m * xi * sb);
  // only a residual above the configured tolerance is attributed to round-off
  if (rep.max_abs() > tolerance && 10.0 * floor > tolerance)
    rep.widen_tolerance(10.0 * floor, "integrability: finite-difference noise floor " + std::to_string(floor) +
                                          " at " + p.str() + ", tolerance widened");
  return rep;
}

}  // namespace polar::dynamics
