#include "tmra/best_approx.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>

#include "tmra/errors.hpp"
#include "tmra/tm_basis.hpp"

namespace tmra {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

struct Weights {
  cplx l_upper;  // multiplies L(z; i l)
  cplx l_lower;  // multiplies L(z; -i l)
  cplx m_upper;  // multiplies M(z; i l)
  cplx m_lower;  // multiplies M(z; -i l)
};

Weights combination_weights(const KernelParams& p, const PoleSequence& seq) {
  const double l = p.lambda;
  const cplx sigma = sigma_sum(seq, l);
  const cplx ap = p.A + I * l * p.B;
  const cplx am = p.A - I * l * p.B;
  const double pre = 1.0 / (4.0 * l * l);
  return {pre * (p.A * I / l + ap * sigma), pre * (p.A * I / l - am * std::conj(sigma)),
          -pre * ap, -pre * am};
}

}  // namespace

ComplexPolynomial best_polynomial(const KernelParams& p, const PoleSequence& seq) {
  validate_kernel_params(p);
  const cplx up{0.0, p.lambda};
  const cplx dn{0.0, -p.lambda};
  const Weights w = combination_weights(p, seq);
  return w.l_upper * first_divided_difference(seq, up) +
         w.l_lower * first_divided_difference(seq, dn) +
         w.m_upper * second_divided_difference(seq, up) +
         w.m_lower * second_divided_difference(seq, dn);
}

cplx best_polynomial_value_as_printed(const KernelParams& p, const PoleSequence& seq,
                                      cplx z) {
  validate_kernel_params(p);
  const cplx up{0.0, p.lambda};
  const cplx dn{0.0, -p.lambda};
  const Weights w = combination_weights(p, seq);
  return w.l_upper * first_divided_difference(seq, up)(z) +
         w.l_lower * first_divided_difference(seq, dn)(z) +
         w.m_upper * second_divided_difference_as_printed(seq, up, z) +
         w.m_lower * second_divided_difference_as_printed(seq, dn, z);
}

double error_bracket(const KernelParams& p, const PoleSequence& seq) {
  validate_real_kernel_params(p);
  const double A = p.A.real();
  const double B = p.B.real();
  const double l = p.lambda;
  const auto [as, bs] = cartesian_sums(seq, l);
  const double lead = A / l + l * B * as;
  const double c3 = 3.0 * A * A + l * l * B * B;
  const double c1 = A * A + l * l * B * B;
  return lead * lead + c3 / (2.0 * l * l) + c3 / l * bs + A * A * as * as + c1 * bs * bs;
}

double min_error_closed_form(const KernelParams& p, const PoleSequence& seq) {
  const double l = p.lambda;
  const double bracket = error_bracket(p, seq);
  const double mu = mu_product(seq, l);
  return 2.0 * kPi / (16.0 * std::pow(l, 5) * mu) * bracket / std::norm(p.rho0);
}

double min_error_as_printed(const KernelParams& p, const PoleSequence& seq) {
  const double l = p.lambda;
  const double bracket = error_bracket(p, seq);
  const double mu = mu_product(seq, l);
  return 2.0 * kPi / (l * mu) * bracket / std::norm(p.rho0);
}

WGram w_gram_closed_form(const KernelParams& p, const PoleSequence& seq) {
  validate_real_kernel_params(p);
  const double A = p.A.real();
  const double B = p.B.real();
  const double l = p.lambda;
  const double mu = mu_product(seq, l);
  const cplx s = sigma_sum(seq, l);
  const cplx ap{A, l * B};
  const cplx am{A, -l * B};
  const double c1 = A * A + l * l * B * B;
  const double l2 = l * l;
  const double l3 = l2 * l;

  WGram x{};
  x[0][0] = A * A * kPi / (l3 * mu);
  x[1][1] = kPi * c1 / (2.0 * l3 * mu);
  x[2][2] = kPi * c1 * std::norm(s) / (l * mu);
  x[1][0] = kPi * A * ap / (2.0 * l3 * mu);
  x[0][1] = kPi * A * am / (2.0 * l3 * mu);
  x[2][0] = -kPi * ap * A * I * s / (l2 * mu);
  x[0][2] = kPi * am * A * I * std::conj(s) / (l2 * mu);
  x[2][1] = -kPi * c1 * I * s / (2.0 * l2 * mu);
  x[1][2] = kPi * c1 * I * std::conj(s) / (2.0 * l2 * mu);
  return x;
}

double w_gram_assembled_error(const KernelParams& p, const PoleSequence& seq) {
  const WGram x = w_gram_closed_form(p, seq);
  cplx total = 0.0;
  for (const auto& row : x) {
    for (const cplx& v : row) total += v;
  }
  const double l = p.lambda;
  return 2.0 * total.real() / (16.0 * std::pow(l, 4)) / std::norm(p.rho0);
}

std::vector<ComplexPolynomial> tm_polynomial_basis(const PoleSequence& seq) {
  const std::size_t n = seq.size();
  std::vector<ComplexPolynomial> basis;
  basis.reserve(n);
  cplx chi_prod = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<cplx> roots;
    roots.reserve(n - 1);
    for (std::size_t j = 0; j < k; ++j) roots.push_back(seq[j].value());
    for (std::size_t j = k + 1; j < n; ++j) roots.push_back(seq[j].conj());
    basis.push_back(ComplexPolynomial::from_roots(roots) *
                    (std::sqrt(seq[k].beta) * chi_prod));
    chi_prod *= chi_factor(seq[k]);
  }
  return basis;
}

std::vector<cplx> expand_in_tm_basis(const ComplexPolynomial& q, const PoleSequence& seq) {
  const std::size_t n = seq.size();
  if (q.degree() > static_cast<int>(n) - 1) {
    throw Error(ErrorCode::DegreeTooHigh, "polynomial degree exceeds n-1");
  }
  if (q.is_zero()) return std::vector<cplx>(n, 0.0);

  const auto basis = tm_polynomial_basis(seq);
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd e(dim, dim);
  Eigen::VectorXcd rhs(dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    rhs(r) = q[static_cast<int>(r)];
    for (Eigen::Index c = 0; c < dim; ++c) {
      e(r, c) = basis[static_cast<std::size_t>(c)][static_cast<int>(r)];
    }
  }
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(e);
  if (!(lu.rcond() > static_cast<double>(n) * std::numeric_limits<double>::epsilon())) {
    throw Error(ErrorCode::SingularSystem, "basis coefficient matrix is singular");
  }
  const Eigen::VectorXcd b = lu.solve(rhs);
  return {b.data(), b.data() + b.size()};
}

ApproxReport approximate(const KernelParams& p, const PoleSequence& seq) {
  validate_real_kernel_params(p);
  ApproxReport r;
  r.T = best_polynomial(p, seq);
  r.min_error = min_error_closed_form(p, seq);
  r.mu = mu_product(seq, p.lambda);
  r.sigma = sigma_sum(seq, p.lambda);
  const CartesianSums cs = cartesian_sums(seq, p.lambda);
  r.a_sum = cs.a_sum;
  r.b_sum = cs.b_sum;
  r.bracket = error_bracket(p, seq);
  r.coeffs = expand_in_tm_basis(r.T, seq);
  return r;
}

}  // namespace tmra
