#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polar/clifford/clifford.hpp"
#include "polar/errors.hpp"
#include "polar/hydrogen/hydrogen.hpp"
#include "random_states.hpp"

namespace {

using namespace polar;
using namespace polar::clifford;

const Representation kReps[] = {Representation::Chiral, Representation::Standard};

TEST(Gammas, Anticommutation) {
  for (Representation rep : kReps) {
    const GammaSet g = build_gammas(rep);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const SpinMatrix ac = g.gamma[a] * g.gamma[b] + g.gamma[b] * g.gamma[a];
        const SpinMatrix expect = 2.0 * eta_up()(a, b) * SpinMatrix::Identity();
        EXPECT_EQ((ac - expect).norm(), 0.0);
      }
    EXPECT_LT((g.pi * g.pi - SpinMatrix::Identity()).norm(), 1e-15);
  }
}

TEST(Gammas, SigmaIsCommutator) {
  const GammaSet g = build_gammas(Representation::Standard);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const SpinMatrix c = 0.25 * (g.gamma_lower(a) * g.gamma_lower(b) - g.gamma_lower(b) * g.gamma_lower(a));
      EXPECT_LT((g.sigma_lower(a, b) - c).norm(), 1e-15);
    }
}

// 2i sigma_{mu nu} = eps_{mu nu rho sigma} pi sigma^{rho sigma}
TEST(Gammas, PiDefinition) {
  for (Representation rep : kReps) {
    const GammaSet g = build_gammas(rep);
    const Rank4& e = flat_epsilon();
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        SpinMatrix rhs = SpinMatrix::Zero();
        for (int r = 0; r < 4; ++r)
          for (int s = 0; s < 4; ++s) rhs += e(m, n, r, s) * g.pi * g.sigma[r][s];
        EXPECT_LT((Complex(0, 2) * g.sigma_lower(m, n) - rhs).norm(), 1e-14);
      }
  }
}

TEST(Gammas, RepresentationShapes) {
  const GammaSet ch = build_gammas(Representation::Chiral);
  const GammaSet st = build_gammas(Representation::Standard);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(std::abs(ch.pi(i, i)), 1.0);
    EXPECT_EQ(st.gamma[0](i, i).real(), i < 2 ? 1.0 : -1.0);
  }
  const SpinMatrix S = chiral_to_standard();
  for (int a = 0; a < 4; ++a) EXPECT_LT((st.gamma[a] - S * ch.gamma[a] * S.inverse()).norm(), 1e-15);
}

TEST(Bilinears, ReferenceSpinor) {
  const GammaSet g = build_gammas(Representation::Chiral);
  Spinor psi;
  psi << 1, 0, 1, 0;
  const Bilinears b = bilinears(psi, g);
  EXPECT_NEAR(b.Phi, 2.0, 1e-15);
  EXPECT_NEAR(b.Theta, 0.0, 1e-15);
}

TEST(Bilinears, PhaseInvariant) {
  fixtures::Sampler rng(11);
  const GammaSet g = build_gammas(Representation::Standard);
  const Spinor psi = rng.spinor();
  const Bilinears a = bilinears(psi, g);
  const Bilinears b = bilinears(std::polar(1.0, 0.83) * psi, g);
  EXPECT_NEAR(a.Theta, b.Theta, 1e-15);
  EXPECT_NEAR(a.Phi, b.Phi, 1e-15);
  EXPECT_LT(max_abs_difference(a.U, b.U), 1e-15);
  EXPECT_LT(max_abs_difference(a.M, b.M), 1e-15);
}

TEST(Bilinears, FierzOnRandomSpinors) {
  fixtures::Sampler rng(12);
  for (Representation rep : kReps) {
    const GammaSet g = build_gammas(rep);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) worst = std::max(worst, fierz_residuals(bilinears(rng.spinor(), g)).max());
    EXPECT_LT(worst, 1e-10);
  }
}

TEST(Bilinears, RepresentationIndependence) {
  fixtures::Sampler rng(13);
  const GammaSet ch = build_gammas(Representation::Chiral);
  const GammaSet st = build_gammas(Representation::Standard);
  const SpinMatrix S = chiral_to_standard();
  for (int n = 0; n < 200; ++n) {
    const Spinor psi = rng.spinor();
    const Bilinears a = bilinears(psi, ch);
    const Bilinears b = bilinears(S * psi, st);
    EXPECT_NEAR(a.Theta, b.Theta, 1e-12);
    EXPECT_NEAR(a.Phi, b.Phi, 1e-12);
    EXPECT_LT(max_abs_difference(a.U, b.U), 1e-12);
    EXPECT_LT(max_abs_difference(a.S, b.S), 1e-12);
  }
}

TEST(Bilinears, HydrogenSpinorNorms) {
  const auto ts = hydrogen::textbook_spinor({}, Point(0, 1, std::numbers::pi / 3, 0));
  const Bilinears b = bilinears(ts.psi, build_gammas(Representation::Standard));
  const double n = b.Theta * b.Theta + b.Phi * b.Phi;
  double uu = 0.0, ss = 0.0;
  for (int a = 0; a < 4; ++a) {
    uu += eta()(a, a) * b.U(a) * b.U(a);
    ss += eta()(a, a) * b.S(a) * b.S(a);
  }
  EXPECT_NEAR(uu, n, 1e-12 * n);
  EXPECT_NEAR(ss, -n, 1e-12 * n);
}

TEST(Polar, AnsatzRoundTrip) {
  for (Representation rep : kReps) {
    const GammaSet g = build_gammas(rep);
    const PolarDecomposition d = polar_decompose(polar_spinor(2.0, 0.3, g), g);
    EXPECT_NEAR(d.phi2, 4.0, 1e-14);
    EXPECT_NEAR(d.beta, 0.3, 1e-15);
    EXPECT_NEAR(d.u(0), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(d.s(3)), 1.0, 1e-15);
    const Bilinears b = bilinears(polar_spinor(2.0, 0.3, g), g);
    EXPECT_NEAR(b.Theta, 2.0 * 4.0 * std::sin(0.3), 1e-14);
  }
}

TEST(Polar, RandomSpinorsAreUnitPair) {
  fixtures::Sampler rng(14);
  const GammaSet g = build_gammas(Representation::Standard);
  for (int n = 0; n < 200; ++n) {
    const PolarDecomposition d = polar_decompose(rng.spinor(), g);
    double uu = 0.0, ss = 0.0, us = 0.0;
    for (int a = 0; a < 4; ++a) {
      uu += eta()(a, a) * d.u(a) * d.u(a);
      ss += eta()(a, a) * d.s(a) * d.s(a);
      us += eta()(a, a) * d.u(a) * d.s(a);
    }
    EXPECT_NEAR(uu, 1.0, 1e-12);
    EXPECT_NEAR(ss, -1.0, 1e-12);
    EXPECT_NEAR(us, 0.0, 1e-12);
  }
}

TEST(Polar, BetaZeroForPositivePhi) {
  const GammaSet g = build_gammas(Representation::Chiral);
  EXPECT_EQ(polar_decompose(polar_spinor(1.0, 0.0, g), g).beta, 0.0);
}

TEST(Polar, SingularSpinorThrows) {
  const GammaSet g = build_gammas(Representation::Chiral);
  Spinor psi;
  psi << 1, 0, 0, 0;  // purely left-handed
  EXPECT_THROW(polar_decompose(psi, g), SingularSpinorError);
}

TEST(Polar, HydrogenChiralAngle) {
  const hydrogen::HydrogenParams hp;
  const GammaSet g = build_gammas(Representation::Standard);
  for (double th : {0.3, 1.0, 2.2}) {
    const auto ts = hydrogen::textbook_spinor(hp, Point(0, 0.8, th, 0.4));
    const double expect = -std::atan(hp.alpha / hp.Gamma() * std::cos(th));
    EXPECT_NEAR(polar_decompose(ts.psi, g).beta, expect, 1e-14);
  }
}

TEST(SpinConnection, ConstantSpinorIsParallel) {
  const GammaSet g = build_gammas(Representation::Chiral);
  const Metric m = Metric::minkowski();
  Rank2 e({Variance::Lower, Variance::Upper});
  for (int a = 0; a < 4; ++a) e(a, a) = 1.0;
  const Tetrad tet = Tetrad::constant(e);
  const Point p(0.1, 0.2, 0.3, 0.4);
  const Rank3 C = spin_connection(tet, m, p);
  EXPECT_EQ(C.max_abs(), 0.0);
  Spinor psi;
  psi << 1.0, Complex(0, 2), -0.5, 3.0;
  SpinorField f{[psi](const Point&) { return psi; },
                [](const Point&) {
                  SpinorPartials d;
                  for (auto& x : d) x = Spinor::Zero();
                  return d;
                }};
  const auto nab = spinor_covariant_derivative(f, g, C, Vector(), p);
  for (const auto& x : nab) EXPECT_EQ(x.norm(), 0.0);
}

TEST(SpinConnection, RejectsNonOrthonormalTetrad) {
  Rank2 e({Variance::Lower, Variance::Upper});
  for (int a = 0; a < 4; ++a) e(a, a) = 1.0;
  e(1, 2) = 0.3;
  EXPECT_THROW(spin_connection(Tetrad::constant(e), Metric::minkowski(), Point()), CalibrationError);
}

TEST(FrameMaps, RoundTrip) {
  const auto ts = hydrogen::textbook_spinor({}, Point(0, 1.3, 0.7, 0));
  fixtures::Sampler rng(15);
  const Vector x = rng.vector();
  const Vector xf = coordinate_to_frame(x, ts.tetrad_textbook);
  // X_mu X^mu is frame independent.
  const auto hf = hydrogen::fields({});
  const Rank2 gi = hf.polar.metric.g_inv()(Point(0, 1.3, 0.7, 0));
  double coord = 0.0, frame = 0.0;
  for (int a = 0; a < 4; ++a) {
    coord += gi(a, a) * x(a) * x(a);
    frame += eta_up()(a, a) * xf(a) * xf(a);
  }
  EXPECT_NEAR(coord, frame, 1e-12 * std::abs(coord));
}

}  // namespace
