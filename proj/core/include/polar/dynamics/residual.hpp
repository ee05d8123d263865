#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polar/geometry/point.hpp"

namespace polar {

// Standard tolerance ladder.
struct Tolerances {
  double analytic = 1e-9;          // first derivatives from closed forms
  double finite_difference = 1e-6;
  double second_derivative = 1e-7;
  double identity = 1e-10;         // purely algebraic identities
};

// Worst absolute residual of one equation group, over one or many points.
class ResidualReport {
 public:
  struct Component {
    std::string label;
    double max_abs = 0.0;
  };

  ResidualReport() = default;
  ResidualReport(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  void record(std::string_view label, double value);
  // Folds a point-level report into a grid-level one.
  void merge(const ResidualReport& other, const std::optional<Point>& at = std::nullopt);
  void set_point(const Point& p) { worst_point_ = p; }
  // Keep one (point, max_abs) row per merged report.
  void keep_per_point(bool on = true) { keep_rows_ = on; }
  void warn(std::string message);
  // Raises the tolerance, keeping the configured value for the record.
  void widen_tolerance(double tol, std::string reason);

  const std::string& name() const { return name_; }
  double max_abs() const { return max_abs_; }
  double tolerance() const { return tolerance_; }
  double configured_tolerance() const { return configured_ > 0.0 ? configured_ : tolerance_; }
  bool passed() const { return max_abs_ < tolerance_; }
  const std::optional<Point>& worst_point() const { return worst_point_; }
  const std::vector<Component>& components() const { return components_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  double component(std::string_view label) const;
  struct Row {
    Point point;
    double max_abs;
  };
  const std::vector<Row>& per_point() const { return rows_; }

 private:
  std::string name_;
  double tolerance_ = 0.0;
  double configured_ = 0.0;
  double max_abs_ = 0.0;
  std::optional<Point> worst_point_;
  std::vector<Component> components_;
  std::vector<std::string> warnings_;
  bool keep_rows_ = false;
  std::vector<Row> rows_;
};

}  // namespace polar
