#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tmra/cpoly.hpp"
#include "tmra/errors.hpp"

namespace tmra {
namespace {

using testing::I;
using testing::rel_err;

void expect_coeffs(const ComplexPolynomial& p, std::vector<cplx> expected, double tol) {
  ASSERT_EQ(p.degree(), static_cast<int>(expected.size()) - 1);
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_LE(std::abs(p[static_cast<int>(k)] - expected[k]), tol) << "coefficient " << k;
  }
}

TEST(ComplexPolynomial, CanonicalZero) {
  EXPECT_TRUE(ComplexPolynomial().is_zero());
  EXPECT_TRUE(ComplexPolynomial({0.0, 0.0, 0.0}).is_zero());
  EXPECT_EQ(ComplexPolynomial({1.0, 2.0, 0.0}).degree(), 1);
  EXPECT_TRUE((ComplexPolynomial({1.0, I}) - ComplexPolynomial({1.0, I})).is_zero());
}

TEST(ComplexPolynomial, EvalExamples) {
  EXPECT_EQ(eval_poly(ComplexPolynomial({0.0, 0.0, 1.0}), I), cplx(-1.0));
  EXPECT_EQ(eval_poly(ComplexPolynomial({1.0}), cplx(3.0, -7.0)), cplx(1.0));
  EXPECT_EQ(eval_poly(ComplexPolynomial({-I, 1.0}), I), cplx(0.0));
}

TEST(ComplexPolynomial, NuExamples) {
  expect_coeffs(nu_poly({{0, 1}}), {-I, 1.0}, 0.0);
  // (z - i)^2 = z^2 - 2iz - 1
  expect_coeffs(nu_poly({{0, 1}, {0, 1}}), {-1.0, -2.0 * I, 1.0}, 1e-15);
  // (z - 1 - i)(z + 1 - i) = z^2 - 2iz - 2
  expect_coeffs(nu_poly({{1, 1}, {-1, 1}}), {-2.0, -2.0 * I, 1.0}, 1e-15);
}

TEST(ComplexPolynomial, TauExamples) {
  expect_coeffs(tau_poly({{0, 1}}), {I, 1.0}, 0.0);
  expect_coeffs(tau_poly({{0, 2}}), {2.0 * I, 1.0}, 0.0);
  expect_coeffs(tau_poly({{1, 1}}), {cplx(-1.0, 1.0), 1.0}, 0.0);
}

TEST(ComplexPolynomial, TauIsMonicWithConjugateRoots) {
  const PoleSequence seq{{0.3, 1.2}, {-1.0, 0.5}, {2.0, 2.0}};
  const ComplexPolynomial tau = tau_poly(seq);
  for (const Pole& p : seq) EXPECT_LT(std::abs(tau(p.conj())), 1e-12);
  EXPECT_EQ(tau.degree(), 3);
  EXPECT_EQ(tau[3], cplx(1.0));
}

TEST(ComplexPolynomial, DeflateExamples) {
  {
    const auto d = deflate_once(ComplexPolynomial({1.0, 0.0, 1.0}), I);
    expect_coeffs(d.quotient, {I, 1.0}, 0.0);
    EXPECT_EQ(d.remainder, cplx(0.0));
  }
  {
    const auto d = deflate_once(ComplexPolynomial({I, 1.0}), I);
    expect_coeffs(d.quotient, {1.0}, 0.0);
    EXPECT_EQ(d.remainder, 2.0 * I);
  }
  {
    const auto d = deflate_once(ComplexPolynomial({-1.0, -2.0 * I, 1.0}), I);
    expect_coeffs(d.quotient, {-I, 1.0}, 0.0);
    EXPECT_EQ(d.remainder, cplx(0.0));
  }
}

TEST(ComplexPolynomial, DeflateRejectsConstant) {
  try {
    deflate_once(ComplexPolynomial({3.0}), I);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeZeroInput);
  }
}

TEST(ComplexPolynomial, DeflateRoundTrip) {
  testing::Sampler rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<cplx> c(2 + trial % 9);
    for (cplx& v : c) v = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const ComplexPolynomial p(c);
    const cplx w{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const auto d = deflate_once(p, w);
    EXPECT_EQ(d.quotient.degree(), p.degree() - 1);
    const ComplexPolynomial back =
        ComplexPolynomial({-w, 1.0}) * d.quotient + ComplexPolynomial::constant(d.remainder);
    EXPECT_LE(relative_distance(back, p), 1e-13);
  }
}

TEST(DividedDifference, FirstExamples) {
  expect_coeffs(first_divided_difference({{0, 1}}, I), {-0.5 * I}, 1e-16);
  expect_coeffs(first_divided_difference({{0, 1}}, -I), {-0.5 * I}, 1e-16);
  // (tau(2i) - tau(0)) / ((2i - 0) tau(2i)) with tau = (z + i)^2 gives -4i/9.
  const auto l = first_divided_difference({{0, 1}, {0, 1}}, 2.0 * I);
  EXPECT_EQ(l.degree(), 1);
  EXPECT_LT(rel_err(l(0.0), -4.0 * I / 9.0), 1e-15);
}

TEST(DividedDifference, SecondExamples) {
  EXPECT_TRUE(second_divided_difference({{0, 1}}, I).is_zero());
  EXPECT_TRUE(second_divided_difference({{0, 1}}, cplx(0.3, -2.0)).is_zero());
  expect_coeffs(second_divided_difference({{0, 1}, {0, 1}}, I), {0.25}, 1e-16);
  expect_coeffs(second_divided_difference({{0, 1}, {0, 1}}, -I), {0.25}, 1e-16);
}

TEST(DividedDifference, RealArgumentRejected) {
  for (auto fn : {&first_divided_difference, &second_divided_difference}) {
    try {
      fn({{0, 1}}, cplx(0.5, 0.0));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::RealArgumentW);
    }
  }
}

// Both divided differences agree with their defining rational expressions
// away from z = w, and the second one has the right diagonal value.
TEST(DividedDifference, MatchesRationalDefinition) {
  testing::Sampler rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 8;
    std::vector<Pole> v;
    for (int k = 0; k < n; ++k) v.push_back({rng.uniform(-1.5, 1.5), rng.uniform(0.3, 2.5)});
    if (n > 2) v[1] = v[0];
    const PoleSequence seq(v);
    const double l = rng.uniform(0.3, 2.5);
    for (const cplx w : {cplx(0.0, l), cplx(0.0, -l), cplx(rng.uniform(-1, 1), rng.uniform(0.2, 2))}) {
      const bool upper = w.imag() > 0.0;
      const ComplexPolynomial P = upper ? tau_poly(seq) : nu_poly(seq);
      const ComplexPolynomial dP = P.derivative();
      const ComplexPolynomial L = first_divided_difference(seq, w);
      const ComplexPolynomial M = second_divided_difference(seq, w);
      EXPECT_EQ(L.degree(), n - 1);
      if (n == 1) {
        EXPECT_TRUE(M.is_zero());
      } else {
        EXPECT_EQ(M.degree(), n - 2);
      }
      for (int i = 0; i < 200; ++i) {
        const cplx z{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const cplx l_def = upper ? (P(w) - P(z)) / ((w - z) * P(w))
                                 : (P(w) - P(z)) / ((z - w) * P(w));
        const cplx m_def = (P(w) - P(z) - (w - z) * dP(w)) / ((w - z) * (w - z) * P(w));
        EXPECT_LE(rel_err(L(z), l_def), 1e-11);
        if (n > 1) EXPECT_LE(rel_err(M(z), m_def), 1e-11);
      }
      // M(w; w) = -P''(w) / (2 P(w)).
      if (n > 1) {
        const cplx diag = -P.derivative().derivative()(w) / (2.0 * P(w));
        EXPECT_LE(rel_err(M(w), diag), 1e-10);
      }
    }
  }
}

TEST(ComplexPolynomial, NuVanishesAtPoles) {
  testing::Sampler rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 10;
    std::vector<Pole> v;
    for (int k = 0; k < n; ++k) v.push_back({rng.uniform(-2, 2), rng.uniform(0.1, 2)});
    const PoleSequence seq(v);
    const ComplexPolynomial nu = nu_poly(seq);
    for (const Pole& p : seq) {
      EXPECT_LE(std::abs(nu(p.value())), 1e-12 * std::pow(1.0 + std::abs(p.value()), n));
    }
  }
}

TEST(DividedDifference, PrintedFormIsNotPolynomial) {
  // The uncorrected quotient blows up as z -> w while the corrected one stays finite.
  const PoleSequence seq{{0, 1}, {0.5, 2.0}};
  const cplx w = I;
  const cplx near = w + 1e-6;
  EXPECT_GT(std::abs(second_divided_difference_as_printed(seq, w, near)), 1e4);
  EXPECT_LT(std::abs(second_divided_difference(seq, w)(near)), 10.0);
}

}  // namespace
}  // namespace tmra
