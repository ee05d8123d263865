#pragma once

#include <array>
#include <string>
#include <vector>

#include "polar/dynamics/residual.hpp"
#include "polar/energetics/energetics.hpp"
#include "polar/geometry/metric.hpp"

namespace polar::superconduct {

// Spin-summed condensate. Vector fields are lower.
struct CondensateState {
  double n = 1.0;  // number density, 2 phi^2
  double q = -1.0;
  double m = 1.0;
  double beta = 0.0;
  Metric metric = Metric::minkowski();
  Field<1> u;
  Field<1> s;  // spatial reference direction for the projections
  Field<1> A;
  Field<1> tau_gradient;
  // Points with x^2 + y^2 < core_radius^2 are excluded (vortex lines on the z axis).
  double core_radius = 0.0;

  // Velocity u = P/m, the constitutive relation.
  static CondensateState from_constitutive(double n, double q, double m, Field<1> A, Field<1> tau_gradient,
                                           Field<1> s = {}, Metric metric = Metric::minkowski());

  // Throws ContractViolation unless n > 0, m > 0, q != 0 and u, A, tau_gradient are set.
  void validate() const;
  // Throws DomainError outside the chart or inside an excluded core.
  void require(const Point& p) const;
  // P = q(D tau - A)
  Vector P(const Point& p) const;
};

// Fluid projections of the condensate, through the general hydrodynamic
// tensor with S = 0 and beta = 0, summed over the two spin states.
// Throws ContractViolation when beta != 0.
energetics::FluidProjection condensate_projection(const CondensateState& state, const Point& p);

// mu = 4 phi^2 P.u, Q = -2 phi^2 P.s, Q^a = 2 phi^2 P_c N^ca, all pressures zero.
energetics::FluidProjection condensate_closed_form(const CondensateState& state, const Point& p);

// m D_[a J_b] + n q^2 F_ab with J = q n u and F = -curl(P)/q. A state that
// violates the relation gets a nonzero report, not an exception.
ResidualReport london_residual(const CondensateState& state, const Point& p, double tolerance = 1e-10);

// Closed polyline; the last vertex joins the first.
struct Loop {
  std::vector<Point> vertices;
};

struct Surface {
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> triangles;  // counter-clockwise seen from +z
};

// Circle in the z = const plane through center, traversed `turns` times.
Loop circle_loop(const Point& center, double radius, int segments, int turns = 1);
// Fan-triangulated disk in the z = const plane.
Surface disk_surface(const Point& center, double radius, int rings, int segments);

struct QuantizationResult {
  double circulation = 0.0;  // (m/(q^2 n)) closed integral of J.dl
  double flux = 0.0;         // integral of F over the surface (or A.dl around the loop)
  double delta_tau = 0.0;    // circulation + flux
  long winding = 0;          // nearest integer to delta_tau / 2 pi
  double deviation = 0.0;    // |delta_tau / 2 pi - winding|
};

// Three-point Gauss-Legendre on every chord. Throws DomainError when a
// quadrature node leaves the domain.
QuantizationResult quantization_check(const CondensateState& state, const Loop& loop);
// Flux by a three-point rule on each triangle, F = curl A; the circulation
// runs along the boundary edges.
QuantizationResult quantization_check(const CondensateState& state, const Surface& surface);

struct MeissnerOptions {
  double F0 = 1.0;
  // Curvature terms of the wave equation, zero in flat space:
  // F'' = (q^2 n/m + R/3 - c) F with C^aibk F_bk = c F^ai.
  double scalar_curvature = 0.0;
  double conformal_shift = 0.0;
};

struct MeissnerResult {
  std::vector<double> x;
  std::vector<double> F;
  double lambda_fit = 0.0;
  double lambda_theory = 0.0;  // sqrt(m/(q^2 n))
  double rel_err = 0.0;
  std::vector<std::string> warnings;
};

// Slab 0 <= x <= L with F(0) = F0 and F(L) = 0, second-order differences,
// exponential fit of |F| on x <= L/2. Throws ContractViolation for
// samples < 3 or non-positive n, m, L, or q = 0.
MeissnerResult meissner_profile(double n, double q, double m, double L, int samples,
                                const MeissnerOptions& opts = {});

}  // namespace polar::superconduct
