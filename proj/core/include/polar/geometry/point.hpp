#pragma once

#include <array>
#include <numbers>
#include <string>

namespace polar {

// Chart coordinates (t, r, theta, phi). Cartesian charts reuse the same
// storage as (t, x, y, z).
struct Point {
  std::array<double, 4> x{};

  Point() = default;
  Point(double t, double r, double theta, double phi) : x{t, r, theta, phi} {}
  explicit Point(const std::array<double, 4>& c) : x(c) {}

  double t() const { return x[0]; }
  double r() const { return x[1]; }
  double theta() const { return x[2]; }
  double phi() const { return x[3]; }
  double operator[](int k) const { return x[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return x[static_cast<std::size_t>(k)]; }

  Point shifted(int k, double h) const {
    Point p = *this;
    p.x[static_cast<std::size_t>(k)] += h;
    return p;
  }

  std::string str() const;
};

enum class ChartKind { Spherical, Cartesian };

struct ChartDomain {
  ChartKind kind = ChartKind::Spherical;
  double r_min = 1e-3;
  double theta_margin = 0.01;

  static ChartDomain spherical(double r_min = 1e-3, double theta_margin = 0.01) {
    return {ChartKind::Spherical, r_min, theta_margin};
  }
  static ChartDomain cartesian() { return {ChartKind::Cartesian, 0.0, 0.0}; }

  bool contains(const Point& p) const {
    if (kind == ChartKind::Cartesian) return true;
    return p.r() >= r_min && p.theta() >= theta_margin &&
           p.theta() <= std::numbers::pi - theta_margin;
  }
  // Throws DomainError.
  void require(const Point& p) const;
};

}  // namespace polar
