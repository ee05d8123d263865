#pragma once

#include <optional>
#include <string>

#include "polar/geometry/field.hpp"

namespace polar {

// Lorentzian metric on a chart, signature (+,-,-,-).
class Metric {
 public:
  Metric(std::string name, Field<2> g, Field<2> g_inv, Field<0> sqrt_det, ChartDomain domain);

  // g = diag(1, -1, -r^2, -r^2 sin^2 theta)
  static Metric flat_spherical(ChartDomain domain = ChartDomain::spherical());
  // g = diag(1, -1, -1, -1) on (t, x, y, z)
  static Metric minkowski();

  const std::string& name() const { return name_; }
  const Field<2>& g() const { return g_; }
  const Field<2>& g_inv() const { return g_inv_; }
  const Field<0>& sqrt_det() const { return sqrt_det_; }
  const ChartDomain& domain() const { return domain_; }

  // Closed-form Gamma^a_bc, when known. riemann() then differentiates it
  // exactly instead of by finite differences.
  const std::optional<Field<3>>& christoffel_field() const { return christoffel_; }
  Metric& set_christoffel_field(Field<3> gamma);

 private:
  std::string name_;
  Field<2> g_;
  Field<2> g_inv_;
  Field<0> sqrt_det_;
  ChartDomain domain_;
  std::optional<Field<3>> christoffel_;
};

}  // namespace polar
