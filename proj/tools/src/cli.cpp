#include "polarspinor/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polar/superconduct/superconduct.hpp"

namespace polarspinor {

using nlohmann::ordered_json;
namespace hy = polar::hydrogen;

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Writes to cfg.out, or to the given stream for "-".
int with_output(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
  if (cfg.out == "-") return body(out);
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot open " << cfg.out << " for writing\n";
    return kExitUsage;
  }
  const int rc = body(f);
  f.close();
  if (!f) {
    err << "error: failed writing " << cfg.out << "\n";
    return kExitUsage;
  }
  return rc;
}

std::string metadata(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# polarspinor " << cfg.command;
  if (cfg.command == "meissner") {
    os << " n=" << g17(cfg.density) << " q=" << g17(cfg.charge) << " m=" << g17(cfg.params.mass)
       << " L=" << g17(cfg.length) << " samples=" << cfg.samples << " F0=" << g17(cfg.F0);
  } else {
    os << " grid=" << cfg.grid.n_r << "x" << cfg.grid.n_theta << " rmin=" << g17(cfg.grid.r_min)
       << " rmax=" << g17(cfg.grid.r_max) << " theta_margin=" << g17(cfg.grid.theta_margin)
       << " alpha=" << g17(cfg.params.alpha) << " mass=" << g17(cfg.params.mass) << " K=" << g17(cfg.params.K)
       << " P=" << (cfg.params.use_corrected_P ? "corrected" : "bare");
  }
  return os.str();
}

bool parse_grid(const std::string& s, int& nr, int& nt) {
  const auto x = s.find('x');
  if (x == std::string::npos) return false;
  try {
    std::size_t a = 0, b = 0;
    const std::string l = s.substr(0, x), r = s.substr(x + 1);
    nr = std::stoi(l, &a);
    nt = std::stoi(r, &b);
    return a == l.size() && b == r.size() && !l.empty() && !r.empty();
  } catch (const std::exception&) {
    return false;
  }
}

bool is_energy_condition(const std::string& q) { return q == "strong_ec" || q == "weak_ec"; }

}  // namespace

const std::vector<std::string>& scan_quantities() {
  static const std::vector<std::string> names{"mu",  "p",         "Q",       "Pi",    "ps",   "pperp", "mfrak",
                                              "T3R", "strong_ec", "weak_ec", "omega", "beta", "phi2"};
  return names;
}

void RunConfig::validate() const {
  grid.validate();
  params.validate();
  for (double t : {tol.analytic, tol.finite_difference, tol.second_derivative, tol.identity, exact_tol})
    if (!(t > 0.0)) throw polar::ContractViolation("tolerances must be positive");
  if (threads < 0) throw polar::ContractViolation("threads must be >= 0");
  if (command == "meissner") {
    if (samples < 3) throw polar::ContractViolation("samples must be at least 3 (insufficient resolution)");
    if (!(density > 0.0) || !(length > 0.0)) throw polar::ContractViolation("density and length must be positive");
    if (charge == 0.0) throw polar::ContractViolation("charge must be nonzero");
  }
  for (const auto& q : quantities)
    if (std::find(scan_quantities().begin(), scan_quantities().end(), q) == scan_quantities().end()) {
      std::string valid;
      for (const auto& n : scan_quantities()) valid += (valid.empty() ? "" : ", ") + n;
      throw polar::ContractViolation("unknown quantity '" + q + "'; valid names: " + valid);
    }
}

int cmd_verify_hydrogen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  hy::VerifyOptions opts;
  opts.tol = cfg.tol;
  opts.exact = cfg.exact_tol;
  const hy::Suite suite = hy::verify(cfg.params, cfg.grid, opts);
  const bool pass = suite.passed();

  const int rc = with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.format == Format::Json) {
      ordered_json j;
      j["command"] = cfg.command;
      j["grid"] = suite.grid;
      j["alpha"] = cfg.params.alpha;
      j["mass"] = cfg.params.mass;
      j["K"] = cfg.params.K;
      j["corrected_P"] = cfg.params.use_corrected_P;
      j["pass"] = pass;
      j["failing_families"] = suite.failing_families();
      j["checks"] = ordered_json::array();
      for (const auto& c : suite.checks) {
        ordered_json r;
        r["check"] = c.report.name();
        r["family"] = c.family;
        r["max_abs_residual"] = c.report.max_abs();
        r["tolerance"] = c.report.tolerance();
        r["pass"] = c.report.passed();
        r["grid"] = suite.grid;
        if (const auto& w = c.report.worst_point()) {
          r["worst_r"] = w->r();
          r["worst_theta"] = w->theta();
        }
        r["warnings"] = c.report.warnings();
        j["checks"].push_back(std::move(r));
      }
      os << j.dump(2) << "\n";
    } else {
      os << metadata(cfg) << "\n";
      os << "check,family,max_abs_residual,tolerance,pass\n";
      for (const auto& c : suite.checks)
        os << c.report.name() << "," << c.family << "," << g17(c.report.max_abs()) << ","
           << g17(c.report.tolerance()) << "," << (c.report.passed() ? "true" : "false") << "\n";
    }
    return kExitPass;
  });
  if (rc != kExitPass) return rc;

  for (const auto& c : suite.checks)
    if (!c.report.passed())
      err << "FAIL " << c.family << "/" << c.report.name() << " max " << g17(c.report.max_abs()) << " > "
          << g17(c.report.tolerance()) << "\n";
  err << "verify-hydrogen: " << suite.checks.size() << " checks on " << suite.grid << ", "
      << (pass ? "all pass" : "failures") << "\n";
  return pass ? kExitPass : kExitFail;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const hy::HydrogenFields hf = hy::fields(cfg.params);
  const auto pts = cfg.grid.points();
  const std::size_t nq = cfg.quantities.size();
  std::vector<double> values(pts.size() * nq, 0.0);
  std::vector<std::string> errors(pts.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        const auto st = hf.polar.at(pts[i]);
        const auto kin = st.kinematics();
        const auto et = polar::energetics::energy_tensor(st);
        const auto fp = polar::energetics::project_fluid(et.T_sym, st, kin);
        const auto ec = polar::energetics::energy_conditions(fp, st.phi2);
        const std::map<std::string, double> v{
            {"mu", fp.mu},          {"p", fp.p},         {"Q", fp.Q},           {"Pi", fp.Pi},
            {"ps", fp.p_s},         {"pperp", fp.p_perp}, {"mfrak", fp.m_frak}, {"T3R", fp.T3R},
            {"strong_ec", ec.strong}, {"weak_ec", ec.weak}, {"omega", kin.Omega}, {"beta", st.beta},
            {"phi2", st.phi2}};
        for (std::size_t k = 0; k < nq; ++k) values[i * nq + k] = v.at(cfg.quantities[k]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned nt = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
  nt = std::max(1u, std::min<unsigned>(nt, static_cast<unsigned>(pts.size())));
  std::vector<std::thread> pool;
  const std::size_t chunk = (pts.size() + nt - 1) / nt;
  for (unsigned t = 0; t < nt; ++t) {
    const std::size_t b = t * chunk, e = std::min(pts.size(), b + chunk);
    if (b < e) pool.emplace_back(work, b, e);
  }
  for (auto& th : pool) th.join();

  bool failed = false;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!errors[i].empty()) {
      err << "error at " << pts[i].str() << ": " << errors[i] << "\n";
      failed = true;
    }
  if (failed) return kExitFail;

  bool ec_ok = true;
  for (std::size_t k = 0; k < nq; ++k)
    if (is_energy_condition(cfg.quantities[k]))
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (!(values[i * nq + k] > 0.0)) ec_ok = false;

  const int rc = with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.format == Format::Json) {
      ordered_json j;
      j["command"] = cfg.command;
      j["grid"] = cfg.grid.str();
      j["rows"] = ordered_json::array();
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t k = 0; k < nq; ++k)
          j["rows"].push_back(ordered_json{{"r", pts[i].r()},
                                           {"theta", pts[i].theta()},
                                           {"quantity", cfg.quantities[k]},
                                           {"value", values[i * nq + k]}});
      os << j.dump(2) << "\n";
    } else {
      os << metadata(cfg) << "\n" << "r,theta,quantity,value\n";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string prefix = g17(pts[i].r()) + "," + g17(pts[i].theta()) + ",";
        for (std::size_t k = 0; k < nq; ++k)
          os << prefix << cfg.quantities[k] << "," << g17(values[i * nq + k]) << "\n";
      }
    }
    return kExitPass;
  });
  if (rc != kExitPass) return rc;
  if (!ec_ok) err << "scan: an energy condition is not strictly positive\n";
  return ec_ok ? kExitPass : kExitFail;
}

int cmd_meissner(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  polar::superconduct::MeissnerOptions mo;
  mo.F0 = cfg.F0;
  const auto res =
      polar::superconduct::meissner_profile(cfg.density, cfg.charge, cfg.params.mass, cfg.length, cfg.samples, mo);
  ordered_json summary;
  summary["lambda_fit"] = res.lambda_fit;
  summary["lambda_theory"] = res.lambda_theory;
  summary["rel_err"] = res.rel_err;
  summary["warnings"] = res.warnings;

  const int rc = with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.format == Format::Json) {
      ordered_json j;
      j["command"] = cfg.command;
      j["x"] = res.x;
      j["F"] = res.F;
      j["summary"] = summary;
      os << j.dump(2) << "\n";
    } else {
      os << metadata(cfg) << "\n" << "x,F\n";
      for (std::size_t i = 0; i < res.x.size(); ++i) os << g17(res.x[i]) << "," << g17(res.F[i]) << "\n";
    }
    return kExitPass;
  });
  if (rc != kExitPass) return rc;
  // The summary follows the data on stdout only when the data went to a file.
  (cfg.out == "-" ? err : out) << summary.dump() << "\n";
  return res.rel_err <= 0.01 ? kExitPass : kExitFail;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polar-form Dirac spinor verification, scans and condensate demos", "polarspinor"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string grid_spec = "64x64";
  double tol = 0.0;
  bool bare = false;

  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output path, '-' for stdout");
    sub->add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--mass", cfg.params.mass, "Particle mass");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", grid_spec, "Grid counts as NRxNT");
    sub->add_option("--rmin", cfg.grid.r_min, "Smallest radius");
    sub->add_option("--rmax", cfg.grid.r_max, "Largest radius");
    sub->add_option("--theta-margin", cfg.grid.theta_margin, "Distance kept from the polar axis");
    sub->add_option("--alpha", cfg.params.alpha, "Fine-structure constant");
    sub->add_option("--K", cfg.params.K, "Normalization constant");
    sub->add_flag("--bare-P", bare, "Use P_t = m Gamma without the Coulomb term");
    sub->add_option("--tol", tol, "Override every residual tolerance");
  };

  auto* verify = app.add_subcommand("verify-hydrogen", "Run every check family on the hydrogen ground state");
  add_common(verify);
  add_grid(verify);
  auto* scan = app.add_subcommand("scan", "Tabulate fluid quantities over the grid");
  add_common(scan);
  add_grid(scan);
  scan->add_option("--quantities", cfg.quantities, "Comma-separated quantity names")->delimiter(',');
  scan->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores");
  auto* meissner = app.add_subcommand("meissner", "Penetration profile of a one-dimensional slab");
  add_common(meissner);
  meissner->add_option("--density", cfg.density, "Condensate density n");
  meissner->add_option("--charge", cfg.charge, "Charge q");
  meissner->add_option("--length", cfg.length, "Slab length L");
  meissner->add_option("--samples", cfg.samples, "Grid samples including both ends");
  meissner->add_option("--F0", cfg.F0, "Field at the surface");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    // The verification report is JSON unless asked otherwise.
    if (cfg.command == "verify-hydrogen" && sub->count("--format") == 0) cfg.format = Format::Json;
    if (cfg.command != "meissner") {
      if (!parse_grid(grid_spec, cfg.grid.n_r, cfg.grid.n_theta))
        throw polar::ContractViolation("--grid expects NRxNT, got '" + grid_spec + "'");
      cfg.params.use_corrected_P = !bare;
      if (tol != 0.0) {
        cfg.tol = polar::Tolerances{tol, tol, tol, tol};
        cfg.exact_tol = tol;
        if (!(tol > 0.0)) throw polar::ContractViolation("--tol must be positive");
      }
    }
    if (cfg.command != "scan") cfg.quantities.clear();
    cfg.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cfg.command == "verify-hydrogen") return cmd_verify_hydrogen(cfg, out, err);
    if (cfg.command == "scan") return cmd_scan(cfg, out, err);
    return cmd_meissner(cfg, out, err);
  } catch (const polar::ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace polarspinor
