#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tmra/best_approx.hpp"
#include "tmra/cpoly.hpp"
#include "tmra/errors.hpp"
#include "tmra/kernel.hpp"

namespace tmra {
namespace {

using testing::I;
using testing::rel_err;

TEST(Kernel, EvalExamples) {
  EXPECT_EQ(kernel_eval({1.0, 0.0, 1.0}, 0.0), cplx(1.0));
  EXPECT_EQ(kernel_eval({0.0, 1.0, 1.0}, 1.0), cplx(0.25));
  EXPECT_LT(rel_err(kernel_eval({1.0, 2.0, 2.0}, I), cplx(1.0, 2.0) / 9.0), 1e-15);
}

TEST(Kernel, PoleHitAndParameterChecks) {
  EXPECT_THROW(kernel_eval({1.0, 0.0, 2.0}, 2.0 * I), Error);
  EXPECT_THROW(kernel_eval({1.0, 0.0, 2.0}, -2.0 * I), Error);
  try {
    kernel_eval({1.0, 0.0, 0.0}, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveLambda);
  }
  EXPECT_THROW(kernel_eval({1.0, 0.0, 1.0, 0.0}, 0.5), Error);
  try {
    validate_real_kernel_params({cplx(1.0, 0.1), 0.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ComplexCoefficients);
  }
}

TEST(PartialFractions, Examples) {
  const auto c = partial_fraction_coeffs({1.0, 0.0, 1.0});
  EXPECT_LT(std::abs(c.c1p - 0.25 * I), 1e-16);
  EXPECT_LT(std::abs(c.c1m - 0.25 * I), 1e-16);
  EXPECT_LT(std::abs(c.c2p + 0.25), 1e-16);
  EXPECT_LT(std::abs(c.c2m + 0.25), 1e-16);

  const auto d = partial_fraction_coeffs({0.0, 1.0, 1.0});
  EXPECT_EQ(d.c1p, cplx(0.0));
  EXPECT_EQ(d.c1m, cplx(0.0));
  EXPECT_LT(std::abs(d.c2p + 0.25 * I), 1e-16);
  EXPECT_LT(std::abs(d.c2m - 0.25 * I), 1e-16);

  EXPECT_LT(rel_err(reassemble(c, 1.0, 0.0), 1.0), 1e-15);
}

TEST(PartialFractions, ReassemblyMatchesKernel) {
  testing::Sampler rng(31);
  for (int i = 0; i < 100; ++i) {
    const KernelParams p{cplx(rng.uniform(-3, 3), rng.uniform(-1, 1)),
                         cplx(rng.uniform(-3, 3), rng.uniform(-1, 1)), rng.uniform(0.2, 3)};
    const cplx z{rng.uniform(-4, 4), rng.uniform(-4, 4)};
    EXPECT_LE(rel_err(reassemble(partial_fraction_coeffs(p), p.lambda, z), kernel_eval(p, z)),
              1e-12);
  }
}

TEST(WeightedKernel, Examples) {
  EXPECT_LT(rel_err(weighted_kernel_eval({1.0, 0.0, 1.0}, {{0, 1}}, 0.0), -I), 1e-15);
  EXPECT_LT(rel_err(weighted_kernel_eval({1.0, 0.0, 1.0}, {{0, 1}}, 1.0), cplx(1, -1) / 8.0),
            1e-15);
  EXPECT_EQ(weighted_kernel_eval({0.0, 1.0, 1.0}, {{0, 2}}, 0.0), cplx(0.0));
  EXPECT_THROW(weighted_kernel_eval({1.0, 0.0, 1.0}, {{0.5, 2}}, cplx(0.5, -2.0)), Error);
}

TEST(Residual, HandValues) {
  EXPECT_LT(rel_err(residual_eval({1.0, 0.0, 1.0}, {{0, 1}}, 0.0), 5.0 / 8.0), 1e-15);
  EXPECT_LT(std::abs(residual_eval({0.0, 1.0, 1.0}, {{0, 1}}, 0.0)), 1e-16);
  EXPECT_THROW(residual_eval({1.0, 0.0, 1.0}, {{0, 1}}, I), Error);
}

// Complex A, B are admissible for the residual identity.
TEST(Residual, IdentityWithComplexCoefficients) {
  testing::Sampler rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 7;
    std::vector<Pole> v;
    for (int k = 0; k < n; ++k) v.push_back({rng.uniform(-1, 1), rng.uniform(0.3, 2)});
    const PoleSequence seq(v);
    const KernelParams p{cplx(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                         cplx(rng.uniform(-2, 2), rng.uniform(-2, 2)), rng.uniform(0.5, 2)};
    const ComplexPolynomial T = best_polynomial(p, seq);
    for (int i = 0; i < 50; ++i) {
      const cplx z = i % 2 ? rng.upper() : cplx(rng.real());
      EXPECT_LE(rel_err(kernel_eval(p, z) - T(z), residual_eval(p, seq, z)), 1e-9);
    }
  }
}

// K - T grows like T itself; the quotient (K - T) / tau_n = R_n - S_n is
// O(1/t) on the real line.
TEST(Residual, QuotientByTauDecaysLikeInverse) {
  const KernelParams p{2.0, -3.0, 1.0};
  const PoleSequence seq = testing::make_family(testing::PoleFamily::Tilted, 4);
  const ComplexPolynomial tau = tau_poly(seq);
  double lo = 1e300, hi = 0.0;
  for (double t = 1e3; t <= 1e6; t *= 1.7) {
    const double v = std::abs(residual_eval(p, seq, t) / tau(t)) * t;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  EXPECT_TRUE(std::isfinite(hi));
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(hi, 10.0 * lo);
}

}  // namespace
}  // namespace tmra
