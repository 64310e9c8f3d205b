#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tmra {

using cplx = std::complex<double>;

/// A point a = alpha + i*beta of the open upper half-plane.
struct Pole {
  double alpha = 0.0;
  double beta = 1.0;

  cplx value() const noexcept { return {alpha, beta}; }
  cplx conj() const noexcept { return {alpha, -beta}; }

  friend bool operator==(const Pole&, const Pole&) = default;
};

/// Throws EmptySequence or PoleNotInUpperHalfPlane(index).
void validate_poles(std::span<const Pole> poles);

/// Ordered, validated, finite list of poles. Duplicates are kept; order is
/// the user's order.
class PoleSequence {
 public:
  explicit PoleSequence(std::vector<Pole> poles);
  PoleSequence(std::initializer_list<Pole> poles)
      : PoleSequence(std::vector<Pole>(poles)) {}

  std::size_t size() const noexcept { return poles_.size(); }
  const Pole& operator[](std::size_t i) const { return poles_[i]; }
  std::span<const Pole> poles() const noexcept { return poles_; }
  auto begin() const noexcept { return poles_.begin(); }
  auto end() const noexcept { return poles_.end(); }

  /// First m poles; 1 <= m <= size().
  PoleSequence prefix(std::size_t m) const;

  double max_modulus() const noexcept;

 private:
  std::vector<Pole> poles_;
};

void validate_lambda(double lambda);

/// Sum over k of (a_k + i lambda) / (alpha_k^2 + (beta_k + lambda)^2).
cplx sigma_sum(const PoleSequence& seq, double lambda);

struct CartesianSums {
  double a_sum = 0.0;  ///< sum alpha_k / d_k
  double b_sum = 0.0;  ///< sum (beta_k + lambda) / d_k
};

/// Real and imaginary parts of sigma_sum, summed separately.
CartesianSums cartesian_sums(const PoleSequence& seq, double lambda);

/// Product of alpha_k^2 + (beta_k + lambda)^2, i.e. |tau_n(i lambda)|^2.
double mu_product(const PoleSequence& seq, double lambda);

}  // namespace tmra
