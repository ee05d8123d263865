#pragma once

#include "polar/dynamics/residual.hpp"
#include "polar/geometry/field.hpp"
#include "polar/geometry/geometry.hpp"
#include "polar/geometry/metric.hpp"
#include "polar/kinematics/kinematics.hpp"

namespace polar::dynamics {

using kinematics::CongruencePair;
using kinematics::KinematicData;
using kinematics::ProjectorPair;
using kinematics::TensorialConnection;

// Polar degrees of freedom sampled at one point. Covectors are lower;
// gradients follow grad(i, j) = nabla_i X_j.
struct PolarState {
  LocalGeometry geo;
  double phi2 = 1.0;
  double beta = 0.0;
  Vector grad_beta;
  Vector grad_ln_phi2;
  CongruencePair pair;
  ProjectorPair proj;
  Rank2 grad_u;
  Rank2 grad_s;
  Vector P;  // q(d tau - A), gauge covariant
  Rank2 grad_P;
  TensorialConnection conn;
  double mass = 1.0;
  double charge = -1.0;

  // Throws ContractViolation for phi2 <= 0, NormalizationError for a bad pair.
  void validate(double tolerance = kinematics::kNormalizationTolerance) const;
  KinematicData kinematics() const;
};

// The same data as fields on a chart. When R is not set it is assembled
// from the gradients of u, s and the field V.
struct PolarFields {
  Metric metric;
  Field<0> phi2;
  Field<0> beta;
  Field<1> u;
  Field<1> s;
  Field<1> P;
  Field<3> R;
  Field<1> V;
  double mass = 1.0;
  double charge = -1.0;

  PolarState at(const Point& p) const;
};

struct AuxFields {
  Vector E;
  Vector F;
  Vector H;
  Vector Xi;
  Vector Bvec;
  Vector Rvec;
};

AuxFields aux_fields(const PolarState& state);

// F_i - P^j eps_ij and E_i - P^j u_[j s_i].
ResidualReport residual_normal_form(const PolarState& state, double tolerance = 1e-9);
// F_i eps^ia + E_i u^[i s^a] - P^a and F_i u^[i s^a] - E_i eps^ia.
ResidualReport residual_momentum_group(const PolarState& state, double tolerance = 1e-9);
ResidualReport residual_AB_groups(const PolarState& state, double tolerance = 1e-9);
// The six projected relations, each written as (left - right) with the
// scalar relations halved: r4 = m cos(beta) - Omega - beta^/2 - (P-V).u.
ResidualReport residual_projected(const PolarState& state, const KinematicData& kin,
                                  double tolerance = 1e-9);

// Bilinear fields rebuilt from the polar state, lower indices.
struct BilinearBridge {
  double Theta = 0.0;
  double Phi = 0.0;
  Vector U;
  Vector S;
  Rank2 M;
  Rank2 K;
  Vector grad_Theta;
  Vector grad_Phi;
  Rank2 grad_U;  // nabla_c U_a
  Rank2 grad_S;
  Rank3 grad_M;  // nabla_c M_ab
  Rank3 grad_K;
};

BilinearBridge bilinear_bridge(const PolarState& state);
// The ten real equations obtained by multiplying the Dirac equation by
// each bilinear structure.
ResidualReport residual_bilinear_group(const PolarState& state, double tolerance = 1e-9);

// Curls of the normal-form potentials H and Xi, with their eps-projected
// scalars. Derivatives of H and Xi come from finite differences of
// fields.at(); the tolerance is widened when the estimated noise floor
// exceeds a tenth of it.
ResidualReport integrability(const PolarFields& fields, const Point& p,
                             FdScheme scheme = {4, 1e-4}, double tolerance = 1e-7);

}  // namespace polar::dynamics
