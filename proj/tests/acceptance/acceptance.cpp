// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "polar/clifford/clifford.hpp"
#include "polar/energetics/energetics.hpp"
#include "polar/hydrogen/hydrogen.hpp"
#include "polar/kinematics/kinematics.hpp"
#include "polar/superconduct/superconduct.hpp"
#include "polarspinor/cli.hpp"
#include "random_states.hpp"

namespace {

using namespace polar;
namespace hy = polar::hydrogen;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double check_max(const hy::Suite& s, const char* name) {
  const hy::Check* c = s.find(name);
  return c ? c->report.max_abs() : INFINITY;
}

// Worst value and whether every listed check is below its limit.
struct Gate {
  bool ok = true;
  std::ostringstream detail;
  void add(const char* name, double value, double limit) {
    ok = ok && value < limit;
    detail << (detail.tellp() > 0 ? ", " : "") << name << " " << fmt("%.2e", value);
  }
};

void criterion1(const hy::Suite& s, double secs) {
  Gate g;
  for (const char* n : {"normal_form", "momentum_group", "AB_groups", "projected"}) g.add(n, check_max(s, n), 1e-9);
  g.detail << ", " << fmt("%.2f s", secs);
  report(1, "hydrogen residual groups", g.ok && secs < 10.0, g.detail.str());
}

void criterion2(const hy::Suite& s) {
  Gate g;
  g.add("dirac_residual", check_max(s, "dirac_residual"), 1e-9);
  g.add("polar_from_spinor", check_max(s, "polar_from_spinor"), 1e-10);
  report(2, "spinor oracle equivalence", g.ok, g.detail.str());
}

void criterion3(const hy::Suite& s) {
  double worst = 0.0, Q = 0.0;
  for (const hy::StressRow& row : hy::stress_table({}, {})) {
    if (row.quantity == "Q")
      Q = std::max(Q, std::abs(row.computed));
    else
      worst = std::max(worst, row.rel_error);
  }
  Gate g;
  g.add("worst relative error", worst, 1e-9);
  g.add("|Q|", Q, 1e-12);
  g.add("|xi|", check_max(s, "twist"), 1e-12);
  report(3, "stress-energy reproduction", g.ok, g.detail.str());
}

void criterion4(const hy::Suite& s) {
  fixtures::Sampler rng(4);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const dynamics::PolarState st = rng.state(Metric::minkowski(), Point());
    const auto kin = st.kinematics();
    const auto fp = energetics::closed_form_projection(st, kin);
    const double bhat = kinematics::directional_split(st.grad_beta, st.pair, st.proj).hat;
    const double mcb = st.mass * std::cos(st.beta);
    const double scale = st.phi2 * std::max({1.0, st.grad_u.max_abs(), st.grad_s.max_abs(), st.grad_beta.max_abs(),
                                             st.grad_ln_phi2.max_abs()});
    for (double d : {fp.mu - 3.0 * fp.p - 2.0 * st.phi2 * mcb, fp.p_s + st.phi2 * bhat,
                     fp.p_perp - st.phi2 * kin.Omega, fp.mu - (fp.m_frak + fp.p_s - 2.0 * fp.p_perp),
                     fp.mu - 2.0 * st.phi2 * (mcb + energetics::temperature_covariant(st))})
      worst = std::max(worst, std::abs(d) / scale);
  }
  Gate g;
  g.add("hydrogen", check_max(s, "thermodynamic_identities"), 1e-10);
  g.add("1000 random states", worst, 1e-10);
  report(4, "thermodynamic identities", g.ok, g.detail.str());
}

void criterion5() {
  const auto hf = hy::fields({});
  double lowest_strong = INFINITY, lowest_weak = INFINITY;
  for (const Point& p : hy::GridSpec{}.points()) {
    const auto st = hf.polar.at(p);
    const auto fp = energetics::project_fluid(energetics::energy_tensor(st).T_sym, st, st.kinematics());
    const auto ec = energetics::energy_conditions(fp, st.phi2);
    lowest_strong = std::min(lowest_strong, ec.strong);
    lowest_weak = std::min(lowest_weak, ec.weak);
  }
  std::ostringstream out, err;
  const char* argv[] = {"polarspinor", "scan"};
  const int code = polarspinor::run(2, argv, out, err);
  report(5, "energy conditions", lowest_strong > 0.0 && lowest_weak > 0.0 && code == 0,
         "min strong " + fmt("%.6g", lowest_strong) + ", min weak " + fmt("%.6g", lowest_weak) +
             ", scan exit " + std::to_string(code));
}

void criterion6(const hy::Suite& s) {
  Gate g;
  g.add("conservation", check_max(s, "conservation"), 1e-7);
  g.add("div U", check_max(s, "current_divergence"), 1e-7);
  g.add("S.R", check_max(s, "spin_curvature"), 1e-10);
  report(6, "conservation laws", g.ok, g.detail.str());
}

void criterion7() {
  fixtures::Sampler rng(7);
  double rt = 0.0, asm_ = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const LocalGeometry geo = local_geometry(Metric::flat_spherical(), rng.spherical_point());
    const auto pair = rng.congruence(geo);
    const auto proj = kinematics::projectors(pair, geo);
    const auto gr = rng.gradients(pair);
    const Vector V = rng.vector();
    const auto kin = kinematics::decompose(gr.grad_u, gr.grad_s, pair, proj, geo);
    const auto back = kinematics::reconstruct_gradients(kin, pair, proj, geo);
    const double gs = std::max({1.0, gr.grad_u.max_abs(), gr.grad_s.max_abs()});
    rt = std::max({rt, max_abs_difference(back.grad_u, gr.grad_u) / gs, max_abs_difference(back.grad_s, gr.grad_s) / gs});
    const auto a = kinematics::assemble_R(kin, pair, V, proj, geo);
    const auto b = kinematics::connection_from_gradients(gr.grad_u, gr.grad_s, pair, V, proj, geo);
    const double rs = std::max({1.0, a.R.max_abs(), V.max_abs()});
    asm_ = std::max({asm_, max_abs_difference(a.R, b.R) / rs,
                     max_abs_difference(kinematics::extract_V(a.R, proj, 1e-9 * rs), V) / rs,
                     kinematics::gradient_identity_defect(a.R, gr.grad_u, gr.grad_s, pair) / rs});
  }
  Gate g;
  g.add("decompose/reconstruct", rt, 1e-10);
  g.add("assembly/extraction", asm_, 1e-10);
  report(7, "kinematic round-trips", g.ok, g.detail.str());
}

void criterion8() {
  hy::HydrogenParams hp;
  hp.use_corrected_P = false;
  const auto hf = hy::fields(hp);
  double worst = 0.0;
  for (const Point& p : hy::GridSpec{}.points()) {
    const auto st = hf.polar.at(p);
    const double u = dynamics::residual_projected(st, st.kinematics()).component("u-projection");
    worst = std::max(worst, std::abs(u - hp.alpha * hy::Delta(hp.alpha, p.theta()) / p.r()));
  }
  const auto fam = hy::verify(hp).failing_families();
  std::string flagged;
  for (const auto& f : fam) flagged += (flagged.empty() ? "" : ",") + f;
  report(8, "bare-P discrepancy", worst < 1e-10 && fam == std::vector<std::string>{"momentum"},
         "|u-projection - alpha Delta/r| " + fmt("%.2e", worst) + ", flagged {" + flagged + "}");
}

void criterion9() {
  fixtures::Sampler rng(9);
  Gate g;
  for (auto rep : {clifford::Representation::Chiral, clifford::Representation::Standard}) {
    const auto gammas = clifford::build_gammas(rep);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n)
      worst = std::max(worst, clifford::fierz_residuals(clifford::bilinears(rng.spinor(), gammas)).max());
    g.add(rep == clifford::Representation::Chiral ? "chiral" : "standard", worst, 1e-10);
  }
  report(9, "Fierz identities", g.ok, g.detail.str());
}

void criterion10() {
  namespace sc = polar::superconduct;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double n : {1.0, 1e2, 1e4}) {
    const auto r = sc::meissner_profile(n, 1.0, 1.0, 20.0 / std::sqrt(n), 1000);
    worst = std::isnan(r.rel_err) ? INFINITY : std::max(worst, r.rel_err);
  }
  bool windings = true;
  for (int w : {0, 1, 2}) {
    const Field<1> tau = Field<1>::analytic(
        [w](const Point& p) {
          const double x = p[1], y = p[2], r2 = x * x + y * y;
          return Vector::lower({0, -w * y / r2, w * x / r2, 0});
        },
        [w](const Point& p) {
          const double x = p[1], y = p[2], r4 = (x * x + y * y) * (x * x + y * y);
          std::array<Vector, kDim> d;
          d[1] = Vector::lower({0, 2 * w * x * y / r4, w * (y * y - x * x) / r4, 0});
          d[2] = Vector::lower({0, w * (y * y - x * x) / r4, -2 * w * x * y / r4, 0});
          return d;
        });
    auto st = sc::CondensateState::from_constitutive(1.0, -1.0, 1.0, Field<1>::constant(Vector()), tau);
    st.core_radius = 0.05;
    const auto q = sc::quantization_check(st, sc::circle_loop(Point(), 1.0, 1024));
    windings = windings && q.winding == w && q.deviation < 1e-6;
  }
  const double secs = seconds_since(t0);
  report(10, "Meissner and vortex winding", worst < 0.01 && windings && secs < 1.0,
         "worst lambda error " + fmt("%.3g", worst) + ", windings " + (windings ? "0,1,2 exact" : "wrong") + ", " +
             fmt("%.3f s", secs));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const hy::Suite suite = hy::verify({});
  const double secs = seconds_since(t0);
  criterion1(suite, secs);
  criterion2(suite);
  criterion3(suite);
  criterion4(suite);
  criterion5();
  criterion6(suite);
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  return failures;
}
