#include "tmra/poles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tmra/errors.hpp"

namespace tmra {

void validate_poles(std::span<const Pole> poles) {
  if (poles.empty()) {
    throw Error(ErrorCode::EmptySequence, "pole sequence is empty");
  }
  for (std::size_t k = 0; k < poles.size(); ++k) {
    const Pole& p = poles[k];
    if (!(p.beta > 0.0) || !std::isfinite(p.beta) || !std::isfinite(p.alpha)) {
      throw Error(ErrorCode::PoleNotInUpperHalfPlane,
                  "pole " + std::to_string(k) +
                      " is not in the open upper half-plane",
                  k);
    }
  }
}

PoleSequence::PoleSequence(std::vector<Pole> poles) : poles_(std::move(poles)) {
  validate_poles(poles_);
}

PoleSequence PoleSequence::prefix(std::size_t m) const {
  if (m == 0 || m > poles_.size()) {
    throw Error(ErrorCode::InvalidParameter,
                "prefix length " + std::to_string(m) + " out of range");
  }
  return PoleSequence(std::vector<Pole>(poles_.begin(), poles_.begin() + m));
}

double PoleSequence::max_modulus() const noexcept {
  double m = 0.0;
  for (const Pole& p : poles_) m = std::max(m, std::abs(p.value()));
  return m;
}

void validate_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::NonPositiveLambda, "lambda must be positive");
  }
}

namespace {

double shifted_norm2(const Pole& p, double lambda) {
  const double b = p.beta + lambda;
  return p.alpha * p.alpha + b * b;
}

}  // namespace

cplx sigma_sum(const PoleSequence& seq, double lambda) {
  validate_lambda(lambda);
  cplx s = 0.0;
  for (const Pole& p : seq) {
    s += cplx(p.alpha, p.beta + lambda) / shifted_norm2(p, lambda);
  }
  return s;
}

CartesianSums cartesian_sums(const PoleSequence& seq, double lambda) {
  validate_lambda(lambda);
  CartesianSums out;
  for (const Pole& p : seq) {
    const double d = shifted_norm2(p, lambda);
    out.a_sum += p.alpha / d;
    out.b_sum += (p.beta + lambda) / d;
  }
  return out;
}

double mu_product(const PoleSequence& seq, double lambda) {
  validate_lambda(lambda);
  double mu = 1.0;
  for (const Pole& p : seq) mu *= shifted_norm2(p, lambda);
  return mu;
}

}  // namespace tmra
