#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polar/hydrogen/hydrogen.hpp"

namespace polarspinor {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Csv, Json };

// Every default in one place: alpha is the CODATA 2018 value, m = K = 1.
struct RunConfig {
  std::string command;
  polar::hydrogen::GridSpec grid;
  polar::hydrogen::HydrogenParams params;
  polar::Tolerances tol;
  double exact_tol = 1e-12;
  std::string out = "-";  // "-" is stdout
  Format format = Format::Csv;  // verify-hydrogen switches to JSON unless --format is given
  std::vector<std::string> quantities{"strong_ec", "weak_ec"};
  int threads = 0;  // 0 picks the hardware concurrency

  // meissner
  double density = 100.0;
  double charge = 1.0;
  double length = 2.0;
  int samples = 1000;
  double F0 = 1.0;

  // Throws polar::ContractViolation with a readable message.
  void validate() const;
};

const std::vector<std::string>& scan_quantities();

// Entry point shared by the executable and the tests. Diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_verify_hydrogen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_meissner(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace polarspinor
