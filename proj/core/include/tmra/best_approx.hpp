#pragma once

#include <array>
#include <complex>
#include <vector>

#include "tmra/cpoly.hpp"
#include "tmra/kernel.hpp"
#include "tmra/poles.hpp"

namespace tmra {

/// The polynomial T_{n-1} of degree <= n-1 that minimizes
///
///   F_n(p) = integral over R of |K(t) - p(t)|^2 / |rho0 nu_n(t)|^2 dt.
///
/// Built as tau_n times the n-th Fourier partial sum of R_n, written through
/// first and second divided differences of tau_n (at +i lambda) and nu_n
/// (at -i lambda). Complex A, B are accepted.
ComplexPolynomial best_polynomial(const KernelParams& p, const PoleSequence& seq);

/// Value at z of the same combination with the second divided difference
/// taken in its uncorrected (non-polynomial) form. Negative control only.
cplx best_polynomial_value_as_printed(const KernelParams& p, const PoleSequence& seq,
                                      cplx z);

/// The bracketed quantity
///   (A/l + l B As)^2 + (3A^2 + l^2 B^2)/(2 l^2) + (3A^2 + l^2 B^2)/l Bs
///   + A^2 As^2 + (A^2 + l^2 B^2) Bs^2
/// with As, Bs the Cartesian sums. Requires real A, B.
double error_bracket(const KernelParams& p, const PoleSequence& seq);

/// min F_n = |rho0|^-2 * 2 pi / (16 lambda^5 mu_n) * bracket.
double min_error_closed_form(const KernelParams& p, const PoleSequence& seq);

/// The same expression without the 1/(16 lambda^4) factor, i.e.
/// min_error_closed_form * 16 lambda^4. Negative control only.
double min_error_as_printed(const KernelParams& p, const PoleSequence& seq);

using WGram = std::array<std::array<cplx, 3>, 3>;

/// X[j][k] = integral of W_j conj(W_k) over R (0-based j, k), where
///   W_1 = A i / (l tau(il)) / (il - t)
///   W_2 = -(A + i l B) / tau(il) / (il - t)^2
///   W_3 = (A + i l B) Sigma / tau(il) / (il - t)
/// Closed forms via residues; requires real A, B.
WGram w_gram_closed_form(const KernelParams& p, const PoleSequence& seq);

/// (1/(16 l^4)) * 2 Re(sum of X) / |rho0|^2; equals min_error_closed_form.
double w_gram_assembled_error(const KernelParams& p, const PoleSequence& seq);

/// Polynomial basis e_k = tau_n * Phi_k, each of degree exactly n-1.
std::vector<ComplexPolynomial> tm_polynomial_basis(const PoleSequence& seq);

/// Coefficients b_1..b_n with q = tau_n * sum b_k Phi_k. Throws
/// DegreeTooHigh if deg q > n-1.
std::vector<cplx> expand_in_tm_basis(const ComplexPolynomial& q, const PoleSequence& seq);

struct ApproxReport {
  ComplexPolynomial T;
  double min_error = 0.0;
  double mu = 0.0;
  cplx sigma;
  double a_sum = 0.0;
  double b_sum = 0.0;
  double bracket = 0.0;
  std::vector<cplx> coeffs;
};

ApproxReport approximate(const KernelParams& p, const PoleSequence& seq);

}  // namespace tmra
