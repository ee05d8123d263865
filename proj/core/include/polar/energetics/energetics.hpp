#pragma once

#include "polar/dynamics/dynamics.hpp"
#include "polar/dynamics/residual.hpp"

namespace polar::energetics {

using dynamics::PolarFields;
using dynamics::PolarState;
using kinematics::CongruencePair;
using kinematics::KinematicData;
using kinematics::ProjectorPair;

struct EnergyTensors {
  Rank2 T = Rank2::upper();      // T^ab, not symmetric
  Rank2 T_sym = Rank2::upper();
  Rank3 S3;                      // S_abc = 1/4 eps_abck S^k
  Rank2 F;                       // F_ab, zero when not requested
  Vector J = Vector::upper();    // J^a = q U^a
  bool has_F = false;
};

// T^ab = P^b U^a + 1/2 D^b beta S^a - 1/4 R_ij^b eps^aijk S_k, with U^a
// upper and S_k, P_b, D_b beta lower.
Rank2 hydrodynamic_tensor(const Vector& P, const Vector& U_up, const Vector& S, const Vector& grad_beta,
                          const Rank3& R, const LocalGeometry& geo);

// Throws GaugeDegenerateError when with_F is set and the charge is zero.
EnergyTensors energy_tensor(const PolarState& state, bool with_F = true);

Rank2 symmetrize_belinfante(const Rank2& T);

// Projections of a symmetric T^ab, vectors and tensors upper.
struct FluidProjection {
  double mu = 0.0;
  double p = 0.0;
  double Q = 0.0;
  double Pi = 0.0;
  Vector Qv = Vector::upper();
  Vector Piv = Vector::upper();
  Rank2 Pit = Rank2::upper();
  double m_frak = 0.0;  // mu - 3p
  double p_s = 0.0;     // p + Pi
  double p_perp = 0.0;  // Pi/2 - p
  double T3R = 0.0;     // -beta^/2 - Omega, filled when kinematics are supplied
};

FluidProjection project_fluid(const Rank2& T_sym, const CongruencePair& pair, const ProjectorPair& proj);
FluidProjection project_fluid(const Rank2& T_sym, const PolarState& state, const KinematicData& kin);

// Projection written through phi2, beta and the kinematic quantities.
FluidProjection closed_form_projection(const PolarState& state, const KinematicData& kin);

// T^ab = mu uu + Q(us + su) + p_s ss + p_perp N + (uQ + Qu) + (s Pi + Pi s) + Pi^ab
Rank2 reassemble(const FluidProjection& fp, const CongruencePair& pair, const ProjectorPair& proj);

// 3RT = -beta^/2 - Omega
double temperature(const KinematicData& kin, double beta_hat);
// 3RT = -s^a D_a beta / 2 + 1/2 eps^kiab s_k u_i D_a u_b, no splitting needed.
double temperature_covariant(const PolarState& state);

struct EnergyConditions {
  double strong = 0.0;  // m cos(beta) - 2 Omega - beta^  = (mu + 3p) / (2 phi2)
  double weak = 0.0;    // 2m cos(beta) - 2 Omega - beta^ = mu / phi2
  bool strong_ok = false;
  bool weak_ok = false;
};

EnergyConditions energy_conditions(const FluidProjection& fp, double phi2);
// strong = m cos(beta) + 6RT, weak = 2(m cos(beta) + 3RT)
EnergyConditions energy_conditions_from_temperature(double m_cos_beta, double T3R);

struct MpdOptions {
  FdScheme scheme{4, 1e-4};
  double tolerance = 1e-7;
  double curvature_tolerance = 1e-10;
  // Adds the Maxwell stress 1/4 F^2 g - F F to T when set.
  bool include_field_stress = false;
};

// Energy-momentum and spin conservation, the S.R term and div U. The
// divergences use extrapolated finite differences of fields.at().
ResidualReport mpd_residuals(const PolarFields& fields, const Point& p, const MpdOptions& opts = {});

}  // namespace polar::energetics
