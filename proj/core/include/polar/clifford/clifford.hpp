#pragma once

#include <array>
#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "polar/geometry/field.hpp"
#include "polar/geometry/geometry.hpp"
#include "polar/geometry/tensor.hpp"

namespace polar::clifford {

using Complex = std::complex<double>;
using SpinMatrix = Eigen::Matrix4cd;
using Spinor = Eigen::Vector4cd;
using SpinorPartials = std::array<Spinor, kDim>;

enum class Representation { Chiral, Standard };

// Flat eps_{0123}. Checked against Theta = 2 phi^2 sin(beta) for the
// polar ansatz with L = identity.
inline constexpr double kFlatEpsilon0123 = +1.0;

const Rank2& eta();     // diag(1,-1,-1,-1), lower
const Rank2& eta_up();  // same numbers, upper
const Rank4& flat_epsilon();     // lower, eps_{0123} = kFlatEpsilon0123
const Rank4& flat_epsilon_up();  // upper, eps^{0123} = -kFlatEpsilon0123

struct GammaSet {
  Representation representation = Representation::Chiral;
  std::array<SpinMatrix, 4> gamma;                 // gamma^mu
  std::array<std::array<SpinMatrix, 4>, 4> sigma;  // sigma^{mu nu} = 1/4 [gamma^mu, gamma^nu]
  SpinMatrix pi;

  // gamma_mu = eta_{mu nu} gamma^nu
  SpinMatrix gamma_lower(int mu) const;
  SpinMatrix sigma_lower(int mu, int nu) const;
  Eigen::RowVector4cd bar(const Spinor& psi) const { return psi.adjoint() * gamma[0]; }
};

GammaSet build_gammas(Representation rep);

// S with gamma_standard = S gamma_chiral S^{-1}; spinors map as psi_std = S psi_chiral.
SpinMatrix chiral_to_standard();

// Flat-frame bilinears, all indices upper.
struct Bilinears {
  double Theta = 0.0;
  double Phi = 0.0;
  Vector U = Vector::upper();
  Vector S = Vector::upper();
  Rank2 M = Rank2::upper();
  Rank2 K = Rank2::upper();
};

Bilinears bilinears(const Spinor& psi, const GammaSet& gammas);

struct PolarDecomposition {
  double phi2 = 0.0;
  double beta = 0.0;
  Vector u = Vector::upper();  // flat frame, upper
  Vector s = Vector::upper();
};

// Throws SingularSpinorError when Theta^2 + Phi^2 <= threshold.
PolarDecomposition polar_decompose(const Spinor& psi, const GammaSet& gammas,
                                   double threshold = 1e-300);

// phi exp(-i beta pi / 2) (1,0,1,0)^T in the chiral frame, mapped to the
// requested representation.
Spinor polar_spinor(double phi, double beta, const GammaSet& gammas);

// Residuals of the Fierz identities, relative to powers of psi^dagger psi.
struct FierzResiduals {
  double norm_u = 0.0;        // U.U - (Theta^2 + Phi^2)
  double norm_s = 0.0;        // S.S + (Theta^2 + Phi^2)
  double orthogonal = 0.0;    // U.S
  double duality = 0.0;       // K + 1/2 eps M
  double reconstruction = 0.0;
  double max() const;
};
FierzResiduals fierz_residuals(const Bilinears& b);

// Spinor field with analytic partials d_k psi.
struct SpinorField {
  std::function<Spinor(const Point&)> value;
  std::function<SpinorPartials(const Point&)> partials;
};

// Rows are frame vectors: tetrad(a, mu) = e_a^mu.
using Tetrad = Field<2>;

// Max |e_a^mu e_b^nu g_{mu nu} - eta_ab|.
double tetrad_orthonormality_defect(const Rank2& e, const Rank2& g);

// C_{alpha nu k} with frame indices lowered by eta; slots (frame, frame, coordinate).
// Throws CalibrationError if the tetrad is not orthonormal.
Rank3 spin_connection(const Tetrad& tetrad, const Metric& metric, const Point& p,
                      double tolerance = 1e-10);

// q A_k, already multiplied by the charge.
struct GaugePotential {
  double charge = 0.0;
  Field<1> A;  // lower
  Vector qA(const Point& p) const { return A(p) * charge; }
};

// nabla_k psi = d_k psi + 1/2 C_{alpha nu k} sigma^{alpha nu} psi + i q A_k psi
SpinorPartials spinor_covariant_derivative(const SpinorField& psi, const GammaSet& gammas,
                                           const Rank3& spin_conn, const Vector& qA,
                                           const Point& p);

// i gamma^a e_a^k nabla_k psi - m psi
Spinor dirac_residual(const Spinor& psi, const SpinorPartials& nabla_psi, const GammaSet& gammas,
                      const Rank2& tetrad, double mass);

// Right side of the polar decomposition of the derivative,
// (d ln phi - i/2 d beta pi - 1/2 R_{abk} sigma^{ab} - i P_k) psi,
// with R given in frame indices (a, b) and coordinate k.
SpinorPartials polar_spinor_derivative(const Spinor& psi, const Vector& grad_ln_phi2,
                                       const Vector& grad_beta, const Rank3& R_frame,
                                       const Vector& P, const GammaSet& gammas);

// T^{mu nu} = i/2 (psibar gamma^mu nabla^nu psi - nabla^nu psibar gamma^mu psi)
// in coordinate components, both upper.
Rank2 spinor_energy_tensor(const Spinor& psi, const SpinorPartials& nabla_psi,
                           const GammaSet& gammas, const Rank2& tetrad, const Rank2& g_inv);

// Frame vector (upper) to coordinate vector (upper).
Vector frame_to_coordinate(const Vector& v_frame, const Rank2& tetrad);
// Coordinate covector to frame covector: X_a = e_a^mu X_mu.
Vector coordinate_to_frame(const Vector& x_lower, const Rank2& tetrad);

}  // namespace polar::clifford
