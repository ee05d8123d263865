#include "polar/geometry/point.hpp"

#include <cmath>
#include <cstdio>

#include "polar/errors.hpp"
#include "polar/geometry/field.hpp"

namespace polar {

std::string Point::str() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(t=%.6g, r=%.6g, theta=%.6g, phi=%.6g)", x[0], x[1], x[2], x[3]);
  return buf;
}

void ChartDomain::require(const Point& p) const {
  if (!contains(p)) throw DomainError("point outside chart domain: " + p.str());
}

double FdScheme::step_at(const Point& p, int k) const {
  const double a = std::abs(p[k]);
  return step * (a > 1.0 ? a : 1.0);
}

}  // namespace polar
