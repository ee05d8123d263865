#include "polar/clifford/clifford.hpp"

#include <algorithm>
#include <cmath>

#include "polar/errors.hpp"

namespace polar::clifford {

namespace {

constexpr Complex I1{0.0, 1.0};

std::array<Eigen::Matrix2cd, 4> pauli() {
  std::array<Eigen::Matrix2cd, 4> s;
  s[0] = Eigen::Matrix2cd::Identity();
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -I1, I1, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

SpinMatrix blocks(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b, const Eigen::Matrix2cd& c,
                  const Eigen::Matrix2cd& d) {
  SpinMatrix m;
  m.block<2, 2>(0, 0) = a;
  m.block<2, 2>(0, 2) = b;
  m.block<2, 2>(2, 0) = c;
  m.block<2, 2>(2, 2) = d;
  return m;
}

double eta_diag(int mu) { return mu == 0 ? 1.0 : -1.0; }

Rank4 make_flat_epsilon(bool upper) {
  Rank4 e = upper ? Rank4::upper() : Rank4::lower();
  // Raising all four indices with eta flips the sign once.
  const double s = upper ? -kFlatEpsilon0123 : kFlatEpsilon0123;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) e(a, b, c, d) = s * permutation_sign(a, b, c, d);
  return e;
}

}  // namespace

const Rank2& eta() {
  static const Rank2 e = [] {
    Rank2 m;
    for (int a = 0; a < 4; ++a) m(a, a) = eta_diag(a);
    return m;
  }();
  return e;
}

const Rank2& eta_up() {
  static const Rank2 e = [] {
    Rank2 m = Rank2::upper();
    for (int a = 0; a < 4; ++a) m(a, a) = eta_diag(a);
    return m;
  }();
  return e;
}

const Rank4& flat_epsilon() {
  static const Rank4 e = make_flat_epsilon(false);
  return e;
}

const Rank4& flat_epsilon_up() {
  static const Rank4 e = make_flat_epsilon(true);
  return e;
}

SpinMatrix GammaSet::gamma_lower(int mu) const { return eta_diag(mu) * gamma[mu]; }

SpinMatrix GammaSet::sigma_lower(int mu, int nu) const {
  return eta_diag(mu) * eta_diag(nu) * sigma[mu][nu];
}

GammaSet build_gammas(Representation rep) {
  const auto s = pauli();
  const Eigen::Matrix2cd Z = Eigen::Matrix2cd::Zero();
  const Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
  GammaSet g;
  g.representation = rep;
  g.gamma[0] = rep == Representation::Chiral ? blocks(Z, I, I, Z) : blocks(I, Z, Z, -I);
  for (int i = 1; i < 4; ++i) g.gamma[i] = blocks(Z, s[i], -s[i], Z);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto& ga = g.gamma[a];
      const auto& gb = g.gamma[b];
      g.sigma[a][b] = 0.25 * (ga * gb - gb * ga);
    }
  // 2i sigma_{01} = eps_{01 rho sigma} pi sigma^{rho sigma} = 2 eps_{0123} pi sigma^{23}
  g.pi = (I1 * g.sigma_lower(0, 1) * g.sigma[2][3].inverse()) / kFlatEpsilon0123;
  return g;
}

SpinMatrix chiral_to_standard() {
  const Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
  return blocks(I, I, -I, I) / std::sqrt(2.0);
}

Bilinears bilinears(const Spinor& psi, const GammaSet& g) {
  Bilinears b;
  const Eigen::RowVector4cd bar = g.bar(psi);
  const Spinor pipsi = g.pi * psi;
  b.Phi = (bar * psi)(0).real();
  b.Theta = (I1 * (bar * pipsi)(0)).real();
  for (int a = 0; a < 4; ++a) {
    const auto& ga = g.gamma[a];
    b.U(a) = (bar * ga * psi)(0).real();
    b.S(a) = (bar * ga * pipsi)(0).real();
    for (int c = 0; c < 4; ++c) {
      const auto& sac = g.sigma[a][c];
      b.M(a, c) = (2.0 * I1 * (bar * sac * psi)(0)).real();
      b.K(a, c) = (2.0 * (bar * sac * pipsi)(0)).real();
    }
  }
  return b;
}

PolarDecomposition polar_decompose(const Spinor& psi, const GammaSet& gammas, double threshold) {
  const Bilinears b = bilinears(psi, gammas);
  const double n2 = b.Theta * b.Theta + b.Phi * b.Phi;
  if (!(n2 > threshold)) throw SingularSpinorError("Theta^2 + Phi^2 vanishes, spinor is singular");
  PolarDecomposition d;
  d.phi2 = 0.5 * std::sqrt(n2);
  d.beta = std::atan2(b.Theta, b.Phi);
  d.u = b.U * (1.0 / (2.0 * d.phi2));
  d.s = b.S * (1.0 / (2.0 * d.phi2));
  return d;
}

Spinor polar_spinor(double phi, double beta, const GammaSet& gammas) {
  const GammaSet chiral = build_gammas(Representation::Chiral);
  Spinor base;
  base << 1, 0, 1, 0;
  const SpinMatrix rot =
      std::cos(0.5 * beta) * SpinMatrix::Identity() - I1 * std::sin(0.5 * beta) * chiral.pi;
  Spinor psi = phi * rot * base;
  if (gammas.representation == Representation::Standard) psi = chiral_to_standard() * psi;
  return psi;
}

double FierzResiduals::max() const {
  return std::max({norm_u, norm_s, orthogonal, duality, reconstruction});
}

FierzResiduals fierz_residuals(const Bilinears& b) {
  // U^0 = psi^dagger psi sets the scale; bilinears are quadratic in psi.
  const double n2 = b.Theta * b.Theta + b.Phi * b.Phi;
  const double w = b.U(0) > 0.0 ? b.U(0) : 1.0;
  const Vector Ul = lower_all(b.U, eta());
  const Vector Sl = lower_all(b.S, eta());
  const Rank2 Ml = lower_all(b.M, eta());
  const Rank4& e = flat_epsilon();
  const Rank4& eu = flat_epsilon_up();
  FierzResiduals r;
  r.norm_u = std::abs(dot(b.U, Ul) - n2) / (w * w);
  r.norm_s = std::abs(dot(b.S, Sl) + n2) / (w * w);
  r.orthogonal = std::abs(dot(b.U, Sl)) / (w * w);
  double dual = 0.0;
  double rec = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      double k = b.K(a, c);
      const double lhs = Ml(a, c) * n2;
      double rhs = b.Theta * (Ul(a) * Sl(c) - Ul(c) * Sl(a));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          k += 0.5 * eu(a, c, i, j) * Ml(i, j);
          rhs += b.Phi * b.U(i) * b.S(j) * e(i, j, a, c);
        }
      dual = std::max(dual, std::abs(k));
      rec = std::max(rec, std::abs(lhs - rhs));
    }
  r.duality = dual / w;
  r.reconstruction = rec / (w * w * w);
  return r;
}

double tetrad_orthonormality_defect(const Rank2& e, const Rank2& g) {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) s += e(a, mu) * e(b, nu) * g(mu, nu);
      worst = std::max(worst, std::abs(s - eta()(a, b)));
    }
  return worst;
}

Rank3 spin_connection(const Tetrad& tetrad, const Metric& metric, const Point& p, double tolerance) {
  const Rank2 e = tetrad(p);
  const Rank2 g = metric.g()(p);
  if (tetrad_orthonormality_defect(e, g) > tolerance)
    throw CalibrationError("tetrad is not orthonormal at " + p.str());
  const auto de = tetrad.partials(p, &metric.domain());
  const Rank3 gam = christoffel(metric, p);
  Rank3 c;
  for (int nu = 0; nu < 4; ++nu)
    for (int k = 0; k < 4; ++k) {
      // D_k e_nu^mu
      double d[4];
      for (int mu = 0; mu < 4; ++mu) {
        double v = de[k](nu, mu);
        for (int l = 0; l < 4; ++l) v += gam(mu, l, k) * e(nu, l);
        d[mu] = v;
      }
      for (int a = 0; a < 4; ++a) {
        double v = 0.0;
        for (int rho = 0; rho < 4; ++rho)
          for (int mu = 0; mu < 4; ++mu) v += g(rho, mu) * e(a, rho) * d[mu];
        c(a, nu, k) = v;
      }
    }
  return c;
}

SpinorPartials spinor_covariant_derivative(const SpinorField& psi, const GammaSet& gammas,
                                           const Rank3& spin_conn, const Vector& qA, const Point& p) {
  const Spinor v = psi.value(p);
  SpinorPartials d = psi.partials(p);
  for (int k = 0; k < 4; ++k) {
    SpinMatrix conn = SpinMatrix::Zero();
    for (int a = 0; a < 4; ++a)
      for (int n = 0; n < 4; ++n) {
        const double c = spin_conn(a, n, k);
        if (c != 0.0) conn += (0.5 * c) * gammas.sigma[a][n];
      }
    d[k] += conn * v + I1 * qA(k) * v;
  }
  return d;
}

Spinor dirac_residual(const Spinor& psi, const SpinorPartials& nabla_psi, const GammaSet& gammas,
                      const Rank2& tetrad, double mass) {
  Spinor out = -mass * psi;
  for (int a = 0; a < 4; ++a) {
    Spinor dir = Spinor::Zero();
    for (int k = 0; k < 4; ++k) dir += tetrad(a, k) * nabla_psi[k];
    out += I1 * (gammas.gamma[a] * dir);
  }
  return out;
}

SpinorPartials polar_spinor_derivative(const Spinor& psi, const Vector& grad_ln_phi2,
                                       const Vector& grad_beta, const Rank3& R_frame,
                                       const Vector& P, const GammaSet& gammas) {
  SpinorPartials out;
  for (int k = 0; k < 4; ++k) {
    SpinMatrix op = (0.5 * grad_ln_phi2(k) - I1 * P(k)) * SpinMatrix::Identity() -
                    (0.5 * I1 * grad_beta(k)) * gammas.pi;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const double r = R_frame(a, b, k);
        if (r != 0.0) op -= (0.5 * r) * gammas.sigma[a][b];
      }
    out[k] = op * psi;
  }
  return out;
}

Rank2 spinor_energy_tensor(const Spinor& psi, const SpinorPartials& nabla_psi, const GammaSet& gammas,
                           const Rank2& tetrad, const Rank2& g_inv) {
  const Eigen::RowVector4cd bar = gammas.bar(psi);
  Rank2 t = Rank2::upper();
  for (int nu = 0; nu < 4; ++nu) {
    Spinor up = Spinor::Zero();
    for (int k = 0; k < 4; ++k) up += g_inv(nu, k) * nabla_psi[k];
    for (int a = 0; a < 4; ++a) {
      const double frame = -(bar * gammas.gamma[a] * up)(0).imag();
      for (int mu = 0; mu < 4; ++mu) t(mu, nu) += tetrad(a, mu) * frame;
    }
  }
  return t;
}

Vector frame_to_coordinate(const Vector& v_frame, const Rank2& tetrad) {
  Vector out = Vector::upper();
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a) out(mu) += v_frame(a) * tetrad(a, mu);
  return out;
}

Vector coordinate_to_frame(const Vector& x_lower, const Rank2& tetrad) {
  Vector out;
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) out(a) += tetrad(a, mu) * x_lower(mu);
  return out;
}

}  // namespace polar::clifford
