#include "tmra/cpoly.hpp"

#include <algorithm>
#include <cmath>

#include "tmra/errors.hpp"

namespace tmra {

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  trim();
}

void ComplexPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const cplx> roots) {
  std::vector<cplx> c{cplx(1.0)};
  c.reserve(roots.size() + 1);
  for (const cplx& r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return ComplexPolynomial(std::move(c));
}

cplx ComplexPolynomial::operator()(cplx z) const noexcept {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (coeffs_.size() == 1) return {};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return ComplexPolynomial(std::move(d));
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(cplx s) {
  for (cplx& c : coeffs_) c *= s;
  trim();
  return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ComplexPolynomial(std::move(c));
}

double relative_distance(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  const int deg = std::max(p.degree(), q.degree());
  double diff = 0.0, np = 0.0, nq = 0.0;
  for (int k = 0; k <= deg; ++k) {
    diff += std::norm(p[k] - q[k]);
    np += std::norm(p[k]);
    nq += std::norm(q[k]);
  }
  const double scale = std::sqrt(std::max(np, nq));
  if (scale == 0.0) return 0.0;
  return std::sqrt(diff) / scale;
}

bool approx_equal(const ComplexPolynomial& p, const ComplexPolynomial& q,
                  double rel_tol) {
  return relative_distance(p, q) <= rel_tol;
}

ComplexPolynomial nu_poly(const PoleSequence& seq) {
  std::vector<cplx> roots;
  roots.reserve(seq.size());
  for (const Pole& p : seq) roots.push_back(p.value());
  return ComplexPolynomial::from_roots(roots);
}

ComplexPolynomial tau_poly(const PoleSequence& seq) {
  std::vector<cplx> roots;
  roots.reserve(seq.size());
  for (const Pole& p : seq) roots.push_back(p.conj());
  return ComplexPolynomial::from_roots(roots);
}

Deflation deflate_once(const ComplexPolynomial& p, cplx w) {
  const auto& c = p.coeffs();
  const std::size_t n = c.size() - 1;
  if (n == 0) {
    throw Error(ErrorCode::DegreeZeroInput, "cannot deflate a constant polynomial");
  }
  std::vector<cplx> q(n);
  cplx acc = c[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = acc;
    acc = acc * w + c[k];
  }
  return {ComplexPolynomial(std::move(q)), acc};
}

namespace {

void require_nonreal(cplx w) {
  if (w.imag() == 0.0) {
    throw Error(ErrorCode::RealArgumentW, "divided difference argument w is real");
  }
}

/// tau for Im w > 0, nu for Im w < 0.
ComplexPolynomial structural_poly(const PoleSequence& seq, cplx w) {
  return w.imag() > 0.0 ? tau_poly(seq) : nu_poly(seq);
}

}  // namespace

ComplexPolynomial first_divided_difference(const PoleSequence& seq, cplx w) {
  require_nonreal(w);
  const ComplexPolynomial p = structural_poly(seq, w);
  // p(z) - p(w) = (z - w) q(z)
  const Deflation d = deflate_once(p, w);
  const cplx pw = d.remainder;
  // (p(w) - p(z)) / (w - z) = q(z); the lower-half-plane branch flips sign.
  const cplx scale = w.imag() > 0.0 ? 1.0 / pw : -1.0 / pw;
  return d.quotient * scale;
}

ComplexPolynomial second_divided_difference(const PoleSequence& seq, cplx w) {
  require_nonreal(w);
  const ComplexPolynomial p = structural_poly(seq, w);
  if (p.degree() < 2) return {};
  // p(z) = p(w) + (z - w) q(z),  q(z) = p'(w) + (z - w) r(z), so the
  // numerator p(w) - p(z) - (w - z) p'(w) equals -(z - w)^2 r(z).
  const Deflation first = deflate_once(p, w);
  const Deflation second = deflate_once(first.quotient, w);
  return second.quotient * (-1.0 / first.remainder);
}

cplx second_divided_difference_as_printed(const PoleSequence& seq, cplx w, cplx z) {
  require_nonreal(w);
  const ComplexPolynomial p = structural_poly(seq, w);
  const cplx pw = p(w);
  const cplx dz = w - z;
  return (pw - p(z)) / (dz * dz * pw);
}

}  // namespace tmra
