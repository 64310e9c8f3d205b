#include <gtest/gtest.h>

#include <numbers>

#include "test_support.hpp"
#include "tmra/errors.hpp"
#include "tmra/quad_oracle.hpp"
#include "tmra/tm_basis.hpp"

namespace tmra {
namespace {

using testing::I;
using testing::rel_err;

TEST(Chi, Examples) {
  EXPECT_LT(std::abs(chi_factor({0, 2}) - cplx(-1.0)), 1e-16);
  EXPECT_EQ(chi_factor({0, 1}), cplx(1.0));
  EXPECT_LT(std::abs(chi_factor({1, 1}) - cplx(1.0, -2.0) / std::sqrt(5.0)), 1e-15);
}

TEST(Chi, AlwaysUnimodular) {
  testing::Sampler rng(3);
  for (int i = 0; i < 500; ++i) {
    const Pole p{rng.uniform(-5, 5), rng.uniform(1e-3, 5)};
    EXPECT_LT(std::abs(std::abs(chi_factor(p)) - 1.0), 1e-14);
  }
}

TEST(Blaschke, Examples) {
  const BasisContext ctx(PoleSequence{{0, 2}});
  EXPECT_EQ(blaschke_eval(ctx, 0, cplx(0.3, 0.9)), cplx(1.0));
  EXPECT_LT(rel_err(blaschke_eval(ctx, 1, I), 1.0 / 3.0), 1e-15);
  EXPECT_LT(std::abs(std::abs(blaschke_eval(ctx, 1, 0.7)) - 1.0), 1e-15);
}

TEST(Blaschke, PoleHit) {
  const BasisContext ctx(PoleSequence{{0.5, 2}});
  try {
    ctx.blaschke(1, cplx(0.5, -2.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PoleHit);
  }
  EXPECT_THROW(ctx.phi(1, cplx(0.5, -2.0)), Error);
}

TEST(Blaschke, UnimodularOnRealLine) {
  const BasisContext ctx(testing::make_family(testing::PoleFamily::Tilted, 10));
  testing::Sampler rng(9);
  for (int i = 0; i < 500; ++i) {
    const double t = rng.uniform(-50, 50);
    for (std::size_t m = 0; m <= ctx.size(); ++m) {
      EXPECT_LT(std::abs(std::abs(ctx.blaschke(m, t)) - 1.0), 1e-13);
    }
  }
}

TEST(Phi, Examples) {
  EXPECT_LT(rel_err(phi_eval(BasisContext(PoleSequence{{0, 1}}), 1, I), -0.5 * I), 1e-15);
  EXPECT_LT(rel_err(phi_eval(BasisContext(PoleSequence{{0, 2}}), 1, I),
                    -I * std::sqrt(2.0) / 3.0),
            1e-15);
  EXPECT_LT(rel_err(phi_eval(BasisContext(PoleSequence{{0, 2}, {0, 1}}), 2, I), -I / 6.0),
            1e-15);
}

TEST(Phi, AllMatchesSingle) {
  const BasisContext ctx(testing::make_family(testing::PoleFamily::Repeated, 7));
  const cplx z{0.4, 0.8};
  const auto all = ctx.phi_all(7, z);
  for (std::size_t k = 1; k <= 7; ++k) EXPECT_LT(rel_err(all[k - 1], ctx.phi(k, z)), 1e-15);
}

TEST(KernelSum, HandValue) {
  const BasisContext ctx(PoleSequence{{0, 2}});
  const KernelSum s = cd_kernel_sum(ctx, 1, I, 3.0 * I);
  EXPECT_LT(rel_err(s.direct, 2.0 / 15.0), 1e-15);
  EXPECT_LT(rel_err(s.closed_form, 2.0 / 15.0), 1e-15);
}

TEST(KernelSum, DiagonalIsPositive) {
  const BasisContext one(PoleSequence{{0, 1}});
  const KernelSum s = cd_kernel_sum(one, 1, 2.0 * I, 2.0 * I);
  EXPECT_LT(rel_err(s.direct, 1.0 / 9.0), 1e-15);

  const BasisContext ctx(testing::make_family(testing::PoleFamily::Tilted, 6));
  testing::Sampler rng(1);
  for (int i = 0; i < 50; ++i) {
    const cplx z = rng.upper();
    const KernelSum d = cd_kernel_sum(ctx, 6, z, z);
    EXPECT_GT(d.direct.real(), 0.0);
    EXPECT_LT(std::abs(d.direct.imag()), 1e-15 * d.direct.real());
  }
}

TEST(KernelSum, CoincidentArguments) {
  const BasisContext ctx(PoleSequence{{0, 1}});
  try {
    cd_kernel_sum(ctx, 1, cplx(0.5, -1.5), cplx(0.5, 1.5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoincidentArguments);
  }
}

TEST(KernelSum, ClosedFormMatchesDirectSum) {
  testing::Sampler rng(17);
  for (auto fam : testing::kFamilies) {
    for (int n = 1; n <= 8; ++n) {
      const BasisContext ctx(testing::make_family(fam, n));
      for (int i = 0; i < 100; ++i) {
        const KernelSum s = cd_kernel_sum(ctx, ctx.size(), rng.upper(), rng.upper());
        EXPECT_LE(rel_err(s.direct, s.closed_form), 1e-11) << testing::family_name(fam) << n;
      }
    }
  }
}

TEST(BasisContext, RejectsNonUnimodularFactor) {
  EXPECT_THROW(BasisContext(PoleSequence{{0, 1}}, {cplx(1.1)}), Error);
  EXPECT_THROW(BasisContext(PoleSequence{{0, 1}}, {}), Error);
}

// Replacing the normalizers by arbitrary unimodular constants changes the
// phases of Phi_k but not the Gram matrix.
TEST(BasisContext, GramIsPhaseInsensitive) {
  const PoleSequence seq = testing::make_family(testing::PoleFamily::Tilted, 4);
  std::vector<cplx> phases;
  for (int k = 0; k < 4; ++k) phases.push_back(std::polar(1.0, 0.7 * k + 0.3));
  const BasisContext standard(seq);
  const BasisContext rotated(seq, phases);
  const auto g0 = gram_matrix(standard, 4, {});
  const auto g1 = gram_matrix(rotated, 4, {});
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::abs(g0[j][k] - g1[j][k]), 0.0, 1e-8);
    }
    EXPECT_LT(std::abs(std::abs(rotated.phi(j + 1, 0.37)) - std::abs(standard.phi(j + 1, 0.37))),
              1e-15);
  }
}

}  // namespace
}  // namespace tmra
