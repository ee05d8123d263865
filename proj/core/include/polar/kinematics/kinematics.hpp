#pragma once

#include "polar/geometry/field.hpp"
#include "polar/geometry/geometry.hpp"

namespace polar::kinematics {

inline constexpr double kNormalizationTolerance = 1e-10;

// Velocity and spin, lower components plus their raised copies.
struct CongruencePair {
  Vector u;
  Vector s;
  Vector u_up = Vector::upper();
  Vector s_up = Vector::upper();

  // Throws NormalizationError unless u.u = 1, s.s = -1, u.s = 0.
  static CongruencePair from_lower(const Vector& u, const Vector& s, const LocalGeometry& geo,
                                   double tolerance = kNormalizationTolerance);
};

struct ProjectorPair {
  Rank2 N;                          // N_ab
  Rank2 N_up = Rank2::upper();      // N^ab
  Rank2 N_mixed{{Variance::Upper, Variance::Lower}};  // N^a_b
  Rank2 eps2;                       // eps_ab = eps_abij u^i s^j
  Rank2 eps2_up = Rank2::upper();   // eps^ab
};

ProjectorPair projectors(const CongruencePair& pair, const LocalGeometry& geo);
ProjectorPair projectors(const Field<1>& u, const Field<1>& s, const Metric& metric, const Point& p);

// Largest violation of the six projector identities.
double projector_identity_defect(const CongruencePair& pair, const ProjectorPair& proj,
                                 const LocalGeometry& geo);

// Irreducible pieces of grad u and grad s. Vectors and tensors are lower.
struct KinematicData {
  double theta_exp = 0.0;
  double Sigma = 0.0;
  double Omega = 0.0;
  double Acc = 0.0;
  double phi_sheet = 0.0;
  double xi = 0.0;
  Vector Sigma_v;
  Vector Omega_v;
  Vector Acc_v;
  Vector a_v;
  Vector alpha_v;
  Rank2 Sigma_t;
  Rank2 zeta_t;
};

// grad_u(i, j) = nabla_i u_j, grad_s likewise.
KinematicData decompose(const Rank2& grad_u, const Rank2& grad_s, const CongruencePair& pair,
                        const ProjectorPair& proj, const LocalGeometry& geo);

struct Gradients {
  Rank2 grad_u;
  Rank2 grad_s;
};

Gradients reconstruct_gradients(const KinematicData& kin, const CongruencePair& pair,
                                const ProjectorPair& proj, const LocalGeometry& geo);

// R_abk with its traces R_k = R_{ka}^a, B_k = 1/2 eps_{kabc} R^{abc}, and V_k.
struct TensorialConnection {
  Rank3 R;
  Vector R_trace;
  Vector B;
  Vector V;
};

TensorialConnection make_connection(const Rank3& R, const Vector& V, const LocalGeometry& geo);

// R from the kinematic split and V.
TensorialConnection assemble_R(const KinematicData& kin, const CongruencePair& pair,
                               const Vector& V, const ProjectorPair& proj, const LocalGeometry& geo);

// R directly from the gradients: u_a D_k u_b - u_b D_k u_a + s_b D_k s_a - s_a D_k s_b
// + (u_a s_b - u_b s_a) s^c D_k u_c + 2 eps_ab V_k.
TensorialConnection connection_from_gradients(const Rank2& grad_u, const Rank2& grad_s,
                                              const CongruencePair& pair, const Vector& V,
                                              const ProjectorPair& proj, const LocalGeometry& geo);

// V_k = 1/4 eps^ab R_abk. Throws ContractViolation if R is not antisymmetric
// in its first pair.
Vector extract_V(const Rank3& R, const ProjectorPair& proj, double tolerance = 1e-12);

// Max |u^i R_ijk - D_k u_j| and |s^i R_ijk - D_k s_j|.
double gradient_identity_defect(const Rank3& R, const Rank2& grad_u, const Rank2& grad_s,
                                const CongruencePair& pair);

struct DirectionalSplit {
  double dot = 0.0;   // u^i D_i f
  double hat = 0.0;   // s^i D_i f
  Vector delta;       // N^i_a D_i f
};

DirectionalSplit directional_split(const Vector& grad_f, const CongruencePair& pair,
                                   const ProjectorPair& proj);
DirectionalSplit directional_split(const Field<0>& f, const CongruencePair& pair,
                                   const ProjectorPair& proj, const Metric& metric, const Point& p);

// Contraction helpers shared across modules.
inline double contract(const Vector& up, const Vector& low) { return dot(up, low); }
Vector raise_vector(const Vector& v, const LocalGeometry& geo);
// M^i_j v^j style: out_a = m(a, b) v(b)
Vector apply(const Rank2& m, const Vector& v);

}  // namespace polar::kinematics
