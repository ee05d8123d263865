#pragma once

#include <stdexcept>
#include <string>

namespace polar {

// Point outside the chart, or a stencil that leaves it.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// |det g| too small to invert.
class SingularChartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Theta^2 + Phi^2 vanishes, no polar form exists.
class SingularSpinorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// u or s not unit, or not orthogonal.
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tetrad that is not orthonormal with respect to the metric.
class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Field strength requested for a neutral state.
class GaugeDegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace polar
