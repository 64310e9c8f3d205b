#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tmra/cpoly.hpp"
#include "tmra/kernel.hpp"
#include "tmra/poles.hpp"
#include "tmra/tm_basis.hpp"

namespace tmra {

// Real-line quadrature used as the verification oracle. Nothing here reuses
// the closed forms of best_approx; integrands are built from definitions.

struct QuadratureSpec {
  int initial_nodes = 256;
  int max_doublings = 6;
  double rel_tol = 1e-10;
  /// Substitution scale c in t = c tan(theta). When unset, integrate_line
  /// uses 1 and the pole-aware entry points use max(lambda, max |a_k|).
  std::optional<double> scale;
  /// Successive estimates closer than this are accepted regardless of size.
  double abs_floor = 1e-14;
};

/// Throws InvalidParameter on a malformed spec.
void validate_quadrature_spec(const QuadratureSpec& spec);

/// A complex-valued function on R with |f(t)| = O(|t|^-decay).
struct LineFunction {
  std::function<cplx(double)> eval;
  double decay = 2.0;
};

struct QuadratureResult {
  cplx value;
  int nodes = 0;             ///< node count of the accepted estimate
  std::vector<double> gaps;  ///< |I_k - I_{k-1}| per doubling
};

/// Integral over R via t = c tan(theta) and Gauss-Legendre on the open
/// theta interval, doubling the node count until successive estimates agree
/// to rel_tol (or abs_floor). Throws InsufficientDecay if decay < 2 and
/// NoConvergenceError when doublings run out.
QuadratureResult integrate_line_detailed(const LineFunction& f, const QuadratureSpec& spec);
cplx integrate_line(const LineFunction& f, const QuadratureSpec& spec);

/// (1/pi) * integral of f conj(g).
cplx tm_inner_product(const LineFunction& f, const LineFunction& g,
                      const QuadratureSpec& spec);

/// Phi_k as a LineFunction (decay 1).
LineFunction basis_function(const BasisContext& ctx, std::size_t k);

/// G[j][k] = (1/pi) integral Phi_{j+1} conj(Phi_{k+1}).
std::vector<std::vector<cplx>> gram_matrix(const BasisContext& ctx, std::size_t m,
                                           const QuadratureSpec& spec);

/// c_k(f) = (1/pi) integral f conj(Phi_k). f needs decay >= 1.
cplx fourier_coeff(const LineFunction& f, const BasisContext& ctx, std::size_t k,
                   const QuadratureSpec& spec);

/// F_n(p) = integral |K(t) - p(t)|^2 / |rho0 nu_n(t)|^2 dt for deg p <= n-1.
double weighted_error_functional(const ComplexPolynomial& p, const KernelParams& params,
                                 const PoleSequence& seq, const QuadratureSpec& spec);

/// Whitelisted H2 test functions f(z) = 1 / (z - conj(w))^power with
/// Im w > 0 and power in {1, 2}.
class CauchyPowerFunction {
 public:
  CauchyPowerFunction(cplx w, int power);
  cplx operator()(cplx z) const;
  cplx w() const noexcept { return w_; }
  int power() const noexcept { return power_; }

 private:
  cplx w_;
  int power_;
};

struct HardyCheck {
  cplx lhs;  ///< f(z)
  cplx rhs;  ///< sum c_k Phi_k(z) + b_m(z)/(2 pi i) integral f conj(b_m)/(t - z)
};

/// Both sides of the Hardy-space partial-sum representation at z (Im z > 0).
HardyCheck hardy_remainder_check(const CauchyPowerFunction& f, const BasisContext& ctx,
                                 std::size_t m, cplx z, const QuadratureSpec& spec);

}  // namespace tmra
