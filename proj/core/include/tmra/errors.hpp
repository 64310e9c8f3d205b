#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmra {

enum class ErrorCode {
  EmptySequence,
  PoleNotInUpperHalfPlane,
  NonPositiveLambda,
  InvalidParameter,
  PoleHit,
  DegreeZeroInput,
  RealArgumentW,
  CoincidentArguments,
  ComplexCoefficients,
  DegreeTooHigh,
  SingularSystem,
  InsufficientDecay,
  NoConvergence,
  ArgumentNotInUpperHalfPlane,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base class for every failure raised by the library. Carries a
/// machine-readable code and, where meaningful, the offending index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

/// Raised when node doubling is exhausted before successive quadrature
/// estimates agree. `gaps` holds |I_k - I_{k-1}| for every doubling.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(double last, double previous, std::vector<double> gaps);

  double last() const noexcept { return last_; }
  double previous() const noexcept { return previous_; }
  double gap() const noexcept { return gaps_.empty() ? 0.0 : gaps_.back(); }
  const std::vector<double>& gaps() const noexcept { return gaps_; }

 private:
  double last_;
  double previous_;
  std::vector<double> gaps_;
};

}  // namespace tmra
