#pragma once

#include <string>
#include <vector>

#include "polar/clifford/clifford.hpp"
#include "polar/dynamics/dynamics.hpp"
#include "polar/dynamics/residual.hpp"
#include "polar/energetics/energetics.hpp"

namespace polar::hydrogen {

inline constexpr double kFineStructure = 7.2973525693e-3;  // CODATA 2018

struct HydrogenParams {
  double alpha = kFineStructure;
  double mass = 1.0;
  double K = 1.0;
  // P_t = m Gamma + alpha/r when set, the bare m Gamma otherwise.
  bool use_corrected_P = true;

  double Gamma() const;
  // Throws ContractViolation unless 0 < alpha < 1, mass > 0, K > 0.
  void validate() const;
};

// 1/sqrt(1 - alpha^2 sin^2 theta)
double Delta(double alpha, double theta);

struct HydrogenFields {
  HydrogenParams params;
  dynamics::PolarFields polar;  // metric, phi2, beta, u, s, P, R
  Field<1> V;                   // closed form, only V_phi nonzero
  clifford::Tetrad tetrad_textbook;
  clifford::Tetrad tetrad_boosted;
  clifford::SpinorField psi;    // standard representation
  clifford::GaugePotential coulomb;  // q = -1, A_t = alpha/r
};

HydrogenFields fields(const HydrogenParams& params, ChartDomain domain = ChartDomain::spherical());

// Spinor with both tetrads sampled at a point.
struct TextbookSpinor {
  clifford::Spinor psi;
  clifford::SpinorPartials dpsi;
  Rank2 tetrad_textbook{{Variance::Lower, Variance::Upper}};
  Rank2 tetrad_boosted{{Variance::Lower, Variance::Upper}};
};

TextbookSpinor textbook_spinor(const HydrogenParams& params, const Point& p);

// Closed-form fluid quantities of the ground state. Coordinate components
// are upper; the boosted ones are frame components.
struct StressClosedForms {
  double mu = 0.0, p = 0.0, Pi = 0.0, Q = 0.0;
  double Pi_r = 0.0, Pi_theta = 0.0;
  double Q_t = 0.0, Q_phi = 0.0;
  double Pi_rr = 0.0, Pi_rtheta = 0.0, Pi_thetatheta = 0.0;
  double Pi_tt = 0.0, Pi_tphi = 0.0, Pi_phiphi = 0.0;
  double Pi_1 = 0.0, Q_2 = 0.0, Pi_11 = 0.0;
  double six_RT = 0.0;
  double Omega = 0.0;
};

StressClosedForms stress_closed_forms(const HydrogenParams& params, const Point& p);

struct GridSpec {
  double r_min = 0.1;
  double r_max = 20.0;
  int n_r = 64;
  double theta_margin = 0.02;
  int n_theta = 64;

  // Throws ContractViolation for counts < 2 or an empty range.
  void validate() const;
  // r log-spaced, theta uniform, t = phi = 0; r varies slowest.
  std::vector<Point> points() const;
  std::string str() const;
};

struct VerifyOptions {
  Tolerances tol;
  // For quantities that vanish identically (xi, Q).
  double exact = 1e-12;
  // Second-derivative checks run on every k-th grid point along each axis.
  int second_derivative_stride = 1;
  bool keep_per_point = false;
};

struct Check {
  std::string family;
  ResidualReport report;
};

struct Suite {
  std::vector<Check> checks;
  std::string grid;

  bool passed() const;
  // Families with at least one failing check, in first-seen order.
  std::vector<std::string> failing_families() const;
  const Check* find(const std::string& name) const;
};

// Runs every check family over the grid. Exceptions inside a check are
// recorded as an infinite residual with a warning.
Suite verify(const HydrogenParams& params, const GridSpec& grid = {}, const VerifyOptions& opts = {});

struct StressRow {
  Point point;
  std::string quantity;
  double computed = 0.0;
  double closed_form = 0.0;
  double rel_error = 0.0;
};

// Every listed stress component from project_fluid against its closed form.
std::vector<StressRow> stress_table(const HydrogenParams& params, const GridSpec& grid = {});

}  // namespace polar::hydrogen
