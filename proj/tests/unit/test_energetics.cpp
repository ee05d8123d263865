#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polar/dynamics/dynamics.hpp"
#include "polar/energetics/energetics.hpp"
#include "polar/errors.hpp"
#include "polar/hydrogen/hydrogen.hpp"
#include "random_states.hpp"

namespace {

using namespace polar;
using namespace polar::energetics;

double scale_of(const PolarState& st) {
  return st.phi2 * std::max({1.0, st.grad_u.max_abs(), st.grad_s.max_abs(), st.grad_beta.max_abs(),
                             st.grad_ln_phi2.max_abs()});
}

TEST(ThermodynamicIdentities, RandomStates) {
  fixtures::Sampler rng(31);
  for (const Metric& m : {Metric::minkowski(), Metric::flat_spherical()})
    for (int n = 0; n < 1000; ++n) {
      const PolarState st = rng.state(m, m.domain().kind == ChartKind::Cartesian ? Point() : rng.spherical_point());
      const KinematicData kin = st.kinematics();
      const FluidProjection fp = closed_form_projection(st, kin);
      const double bhat = kinematics::directional_split(st.grad_beta, st.pair, st.proj).hat;
      const double tol = 1e-10 * scale_of(st);
      const double mcb = st.mass * std::cos(st.beta);
      ASSERT_NEAR(fp.mu - 3.0 * fp.p, 2.0 * st.phi2 * mcb, tol);
      ASSERT_NEAR(fp.p_s, -st.phi2 * bhat, tol);
      ASSERT_NEAR(fp.p_perp, st.phi2 * kin.Omega, tol);
      ASSERT_NEAR(fp.mu, fp.m_frak + fp.p_s - 2.0 * fp.p_perp, tol);
      ASSERT_NEAR(fp.mu, 2.0 * st.phi2 * (mcb + temperature_covariant(st)), tol);
    }
}

TEST(ClosedForm, VectorsAndTensorLiveOnTheSheet) {
  fixtures::Sampler rng(32);
  for (int n = 0; n < 300; ++n) {
    const PolarState st = rng.state(Metric::flat_spherical(), rng.spherical_point());
    const FluidProjection fp = closed_form_projection(st, st.kinematics());
    const double tol = 1e-10 * scale_of(st);
    EXPECT_NEAR(dot(fp.Qv, st.pair.u), 0.0, tol);
    EXPECT_NEAR(dot(fp.Qv, st.pair.s), 0.0, tol);
    EXPECT_NEAR(dot(fp.Piv, st.pair.u), 0.0, tol);
    EXPECT_NEAR(dot(fp.Piv, st.pair.s), 0.0, tol);
    double trace = 0.0;
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b) {
        EXPECT_NEAR(fp.Pit(a, b), fp.Pit(b, a), tol);
        trace += st.proj.N(a, b) * fp.Pit(a, b);
      }
    EXPECT_NEAR(trace, 0.0, tol);
  }
}

TEST(ClosedForm, NoGeometricCorrections) {
  const LocalGeometry geo = local_geometry(Metric::minkowski(), Point());
  PolarState st;
  st.geo = geo;
  st.phi2 = 1.5;
  st.beta = 0.4;
  st.mass = 1.2;
  st.pair = kinematics::CongruencePair::from_lower(Vector::lower({1, 0, 0, 0}), Vector::lower({0, 0, 0, -1}), geo);
  st.proj = kinematics::projectors(st.pair, geo);
  const FluidProjection fp = closed_form_projection(st, st.kinematics());
  EXPECT_EQ(fp.p, 0.0);
  EXPECT_EQ(fp.Q, 0.0);
  EXPECT_EQ(fp.Pi, 0.0);
  EXPECT_DOUBLE_EQ(fp.mu, 2.0 * 1.5 * 1.2 * std::cos(0.4));
}

TEST(Projection, ReassembleRoundTrip) {
  fixtures::Sampler rng(33);
  for (int n = 0; n < 1000; ++n) {
    const LocalGeometry geo = local_geometry(Metric::flat_spherical(), rng.spherical_point());
    const auto pair = rng.congruence(geo);
    const auto proj = kinematics::projectors(pair, geo);
    Rank2 T = Rank2::upper();
    for (int a = 0; a < kDim; ++a)
      for (int b = a; b < kDim; ++b) T(a, b) = T(b, a) = rng.normal();
    const Rank2 back = reassemble(project_fluid(T, pair, proj), pair, proj);
    ASSERT_LT(max_abs_difference(back, T), 1e-10 * std::max(1.0, T.max_abs()));
  }
}

TEST(Belinfante, Symmetrization) {
  fixtures::Sampler rng(34);
  Rank2 S = Rank2::upper(), A = Rank2::upper();
  for (int a = 0; a < kDim; ++a)
    for (int b = a; b < kDim; ++b) {
      S(a, b) = S(b, a) = rng.normal();
      A(a, b) = rng.normal();
      A(b, a) = -A(a, b);
      if (a == b) A(a, a) = 0.0;
    }
  EXPECT_EQ(max_abs_difference(symmetrize_belinfante(S), S), 0.0);
  EXPECT_EQ(symmetrize_belinfante(A).max_abs(), 0.0);
}

TEST(EnergyTensor, SpinFreeStateIsDust) {
  const LocalGeometry geo = local_geometry(Metric::minkowski(), Point());
  const double phi2 = 0.7, m = 1.3;
  const Vector u_up = Vector::upper({1.25, 0.75, 0, 0});
  const Vector P = Vector::lower({m * 1.25, -m * 0.75, 0, 0});
  const Rank2 T = hydrodynamic_tensor(P, u_up * (2.0 * phi2), Vector(), Vector(), Rank3(), geo);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) EXPECT_NEAR(T(a, b), 2.0 * phi2 * m * u_up(a) * u_up(b), 1e-15);
}

TEST(EnergyTensor, HydrogenValues) {
  const hydrogen::HydrogenParams hp;
  const auto hf = hydrogen::fields(hp);
  const Point p(0, 1, std::numbers::pi / 2, 0);
  const PolarState st = hf.polar.at(p);
  const EnergyTensors et = energy_tensor(st);
  const FluidProjection fp = project_fluid(et.T_sym, st, st.kinematics());
  EXPECT_NEAR(fp.mu / (2.0 * st.phi2), 1.00729764, 1e-8);
  const double G = hp.Gamma();
  EXPECT_NEAR(2.0 * fp.T3R, hp.alpha * (G + G * G) / (G * G * G), 1e-12);
  EXPECT_NEAR(2.0 * fp.T3R, 1.45953e-2, 1e-6);
  EXPECT_NEAR(et.F(0, 1), -hp.alpha / (st.charge * p.r() * p.r()), 1e-12);
  EXPECT_EQ(max_abs_difference(et.T_sym, transpose(et.T_sym)), 0.0);
  const Vector U_up = kinematics::raise_vector(dynamics::bilinear_bridge(st).U, st.geo);
  for (int a = 0; a < kDim; ++a) EXPECT_NEAR(et.J(a), st.charge * U_up(a), 1e-14);
}

TEST(EnergyTensor, NeutralStateHasNoFieldStrength) {
  const auto hf = hydrogen::fields({});
  PolarState st = hf.polar.at(Point(0, 1, 1, 0));
  st.charge = 0.0;
  EXPECT_THROW(energy_tensor(st, true), GaugeDegenerateError);
  EXPECT_NO_THROW(energy_tensor(st, false));
}

TEST(EnergyConditions, TwoFormsAgreeOnRandomStates) {
  fixtures::Sampler rng(35);
  for (int n = 0; n < 1000; ++n) {
    const PolarState st = rng.state(Metric::minkowski(), Point());
    const KinematicData kin = st.kinematics();
    const FluidProjection fp = closed_form_projection(st, kin);
    const EnergyConditions a = energy_conditions(fp, st.phi2);
    const EnergyConditions b = energy_conditions_from_temperature(st.mass * std::cos(st.beta), fp.T3R);
    const double tol = 1e-10 * scale_of(st) / st.phi2;
    ASSERT_NEAR(a.strong, b.strong, tol);
    ASSERT_NEAR(a.weak, b.weak, tol);
  }
  EXPECT_THROW(energy_conditions(FluidProjection{}, 0.0), ContractViolation);
}

TEST(Mpd, HydrogenConservation) {
  const auto hf = hydrogen::fields({});
  for (const Point& p : {Point(0, 0.4, 0.8, 0), Point(0, 2.0, 1.5, 0), Point(0, 9.0, 2.4, 0)}) {
    const ResidualReport rep = mpd_residuals(hf.polar, p);
    EXPECT_LT(rep.max_abs(), 1e-7) << p.str();
    EXPECT_LT(rep.component("SR"), 1e-10) << p.str();
    EXPECT_LT(rep.component("divU"), 1e-9) << p.str();
  }
}

}  // namespace
