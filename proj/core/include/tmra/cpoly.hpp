#pragma once

#include <complex>
#include <span>
#include <vector>

#include "tmra/poles.hpp"

namespace tmra {

/// Dense polynomial with complex coefficients in ascending degree order.
/// The zero polynomial is stored as the single coefficient 0; exact trailing
/// zeros above degree 0 are always trimmed.
class ComplexPolynomial {
 public:
  ComplexPolynomial() : coeffs_{cplx(0.0)} {}
  explicit ComplexPolynomial(std::vector<cplx> coeffs);
  ComplexPolynomial(std::initializer_list<cplx> coeffs)
      : ComplexPolynomial(std::vector<cplx>(coeffs)) {}

  static ComplexPolynomial constant(cplx c) { return ComplexPolynomial({c}); }
  /// Monic polynomial prod (z - r) over the given roots.
  static ComplexPolynomial from_roots(std::span<const cplx> roots);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept {
    return coeffs_.size() == 1 && coeffs_[0] == cplx(0.0);
  }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  cplx operator[](int k) const {
    return k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : cplx(0.0);
  }

  /// Horner evaluation.
  cplx operator()(cplx z) const noexcept;
  ComplexPolynomial derivative() const;

  ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
  ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
  ComplexPolynomial& operator*=(cplx s);

  friend ComplexPolynomial operator+(ComplexPolynomial a, const ComplexPolynomial& b) {
    return a += b;
  }
  friend ComplexPolynomial operator-(ComplexPolynomial a, const ComplexPolynomial& b) {
    return a -= b;
  }
  friend ComplexPolynomial operator*(ComplexPolynomial a, cplx s) { return a *= s; }
  friend ComplexPolynomial operator*(cplx s, ComplexPolynomial a) { return a *= s; }
  friend ComplexPolynomial operator*(const ComplexPolynomial& a,
                                     const ComplexPolynomial& b);

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

inline cplx eval_poly(const ComplexPolynomial& p, cplx z) { return p(z); }

/// ||p - q||_2 / max(||p||_2, ||q||_2) over coefficients; 0 when both vanish.
double relative_distance(const ComplexPolynomial& p, const ComplexPolynomial& q);
bool approx_equal(const ComplexPolynomial& p, const ComplexPolynomial& q,
                  double rel_tol);

/// nu_n(z) = prod (z - a_k).
ComplexPolynomial nu_poly(const PoleSequence& seq);
/// tau_n(z) = prod (z - conj(a_k)).
ComplexPolynomial tau_poly(const PoleSequence& seq);

struct Deflation {
  ComplexPolynomial quotient;
  cplx remainder;  ///< equals p(w)
};

/// Synthetic division: p(z) = (z - w) q(z) + p(w).
Deflation deflate_once(const ComplexPolynomial& p, cplx w);

/// L_{n-1}(z; w). For Im w > 0 this is (tau(w) - tau(z)) / ((w - z) tau(w));
/// for Im w < 0 it is (nu(w) - nu(z)) / ((z - w) nu(w)). Degree n-1.
ComplexPolynomial first_divided_difference(const PoleSequence& seq, cplx w);

/// M_{n-2}(z; w) = (P(w) - P(z) - (w - z) P'(w)) / ((w - z)^2 P(w)) with
/// P = tau for Im w > 0 and P = nu for Im w < 0. Degree n-2; zero for n = 1.
/// Built from two deflations so nothing is evaluated near z = w.
ComplexPolynomial second_divided_difference(const PoleSequence& seq, cplx w);

/// Pointwise value of the uncorrected quotient (P(w) - P(z)) / ((w - z)^2 P(w)),
/// which has a simple pole at z = w. Only used as a negative control.
cplx second_divided_difference_as_printed(const PoleSequence& seq, cplx w, cplx z);

}  // namespace tmra
