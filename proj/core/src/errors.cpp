#include "tmra/errors.hpp"

#include <sstream>

namespace tmra {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::PoleNotInUpperHalfPlane: return "PoleNotInUpperHalfPlane";
    case ErrorCode::NonPositiveLambda: return "NonPositiveLambda";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::DegreeZeroInput: return "DegreeZeroInput";
    case ErrorCode::RealArgumentW: return "RealArgumentW";
    case ErrorCode::CoincidentArguments: return "CoincidentArguments";
    case ErrorCode::ComplexCoefficients: return "ComplexCoefficients";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::InsufficientDecay: return "InsufficientDecay";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ArgumentNotInUpperHalfPlane: return "ArgumentNotInUpperHalfPlane";
  }
  return "Unknown";
}

namespace {

std::string describe(double last, double previous,
                     const std::vector<double>& gaps) {
  std::ostringstream os;
  os.precision(17);
  os << "quadrature did not converge: last=" << last
     << " previous=" << previous << " gaps=[";
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    os << (i ? ", " : "") << gaps[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

NoConvergenceError::NoConvergenceError(double last, double previous,
                                       std::vector<double> gaps)
    : Error(ErrorCode::NoConvergence, describe(last, previous, gaps)),
      last_(last),
      previous_(previous),
      gaps_(std::move(gaps)) {}

}  // namespace tmra
