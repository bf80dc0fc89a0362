// Copyright 2026 The apnkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "apnkit/error.hpp"
#include "apnkit/gf2m.hpp"
#include "oracles.hpp"

namespace apnkit {
namespace {

TEST(FieldCtx, DegreeOneUsesXPlusOne) {
  const FieldCtx ctx = FieldCtx::create(1);
  EXPECT_EQ(ctx.modulus(), 0b11u);
  EXPECT_EQ(ctx.gamma(), FieldElement(1));
}

TEST(FieldCtx, RejectsDegreeOutOfRange) {
  EXPECT_THROW(FieldCtx::create(0), ParameterError);
  EXPECT_THROW(FieldCtx::create(33), ParameterError);
}

TEST(FieldCtx, ModulusIsSmallestIrreducibleByTrialDivision) {
  for (unsigned m = 1; m <= 20; ++m) {
    const std::uint64_t mod = FieldCtx::create(m).modulus();
    ASSERT_TRUE(oracle::irreducible_by_trial_division(mod)) << "m=" << m;
    // X is the only irreducible with zero constant term and is never used.
    for (std::uint64_t p = (std::uint64_t{1} << m) | 1; p < mod; p += 2) {
      EXPECT_FALSE(oracle::irreducible_by_trial_division(p)) << "m=" << m << " p=" << p;
    }
  }
}

TEST(FieldCtx, IrreducibilityTestAgreesWithTrialDivision) {
  for (std::uint64_t p = 2; p < (1u << 13); ++p) {
    EXPECT_EQ(is_irreducible_gf2(p), oracle::irreducible_by_trial_division(p)) << p;
  }
}

TEST(FieldCtx, GammaHasFullOrderAndIsSmallest) {
  for (unsigned m : {2u, 3u, 4u, 6u, 8u, 11u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    const std::uint64_t order = ctx.group_order();
    auto order_of = [&](FieldElement a) {
      std::uint64_t k = 1;
      for (FieldElement p = a; !(p == ctx.one()); p = ctx.mul(p, a)) ++k;
      return k;
    };
    EXPECT_EQ(order_of(ctx.gamma()), order) << m;
    for (std::uint32_t b = 2; b < ctx.gamma().bits; ++b) {
      EXPECT_LT(order_of(FieldElement(b)), order) << m;
    }
  }
  const FieldCtx c4 = FieldCtx::create(4);
  EXPECT_EQ(c4.pow(c4.gamma(), 15), c4.one());
  EXPECT_NE(c4.pow(c4.gamma(), 5), c4.one());
  EXPECT_NE(c4.pow(c4.gamma(), 3), c4.one());
}

TEST(FieldCtx, MultiplicationMatchesSchoolbook) {
  for (unsigned m : {1u, 2u, 4u, 5u, 8u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    for (std::uint32_t a = 0; a < ctx.size(); ++a) {
      for (std::uint32_t b = 0; b < ctx.size(); ++b) {
        ASSERT_EQ(ctx.mul(FieldElement(a), FieldElement(b)).bits,
                  oracle::poly_mulmod(a, b, ctx.modulus(), m));
      }
    }
  }
  std::mt19937_64 rng(7);
  for (unsigned m : {16u, 21u, 24u, 31u, 32u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    for (int i = 0; i < 2000; ++i) {
      const auto a = static_cast<std::uint32_t>(rng() & ctx.group_order());
      const auto b = static_cast<std::uint32_t>(rng() & ctx.group_order());
      ASSERT_EQ(ctx.mul(FieldElement(a), FieldElement(b)).bits,
                oracle::poly_mulmod(a, b, ctx.modulus(), m));
    }
  }
}

TEST(FieldCtx, InverseAndIdentity) {
  for (unsigned m : {3u, 8u, 13u, 22u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    std::mt19937_64 rng(m);
    for (int i = 0; i < 500; ++i) {
      const FieldElement a(static_cast<std::uint32_t>(rng() % ctx.group_order()) + 1);
      EXPECT_EQ(ctx.mul(a, ctx.one()), a);
      EXPECT_EQ(ctx.mul(a, ctx.inv(a)), ctx.one());
    }
    EXPECT_THROW(ctx.inv(ctx.zero()), ParameterError);
  }
}

TEST(FieldCtx, PowHandlesLargeExponents) {
  const FieldCtx ctx = FieldCtx::create(8);
  const FieldElement g = ctx.gamma();
  EXPECT_EQ(ctx.pow(g, ctx.group_order()), ctx.one());
  EXPECT_EQ(ctx.pow(g, std::uint64_t{1} << 16), ctx.pow(g, (std::uint64_t{1} << 16) % 255));
  EXPECT_EQ(ctx.pow(ctx.zero(), 0), ctx.one());
  EXPECT_EQ(ctx.pow(ctx.zero(), 5), ctx.zero());
}

TEST(FieldCtx, FrobeniusIsRepeatedSquaring) {
  const FieldCtx ctx = FieldCtx::create(6);
  for (std::uint32_t a = 0; a < ctx.size(); ++a) {
    FieldElement sq(a);
    for (int i = 0; i < 3; ++i) sq = ctx.square(sq);
    EXPECT_EQ(ctx.frobenius(FieldElement(a), 3), sq);
    EXPECT_EQ(ctx.frobenius(ctx.frobenius(FieldElement(a), -3), 3), FieldElement(a));
  }
}

TEST(FieldCtx, DlogInvertsPowerForTableAndBabyStepGiantStep) {
  for (unsigned m : {4u, 10u, 24u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    std::mt19937_64 rng(m);
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t e = rng() % ctx.group_order();
      EXPECT_EQ(ctx.dlog(ctx.pow(ctx.gamma(), e)), e) << m;
    }
    EXPECT_THROW(ctx.dlog(ctx.zero()), ParameterError);
  }
}

TEST(FieldCtx, CubesFormIndexThreeSubgroup) {
  const FieldCtx ctx = FieldCtx::create(4);
  int cubes = 0;
  for (std::uint32_t a = 1; a < 16; ++a) cubes += ctx.is_cube(FieldElement(a));
  EXPECT_EQ(cubes, 5);
  EXPECT_TRUE(ctx.is_cube(ctx.one()));
  EXPECT_FALSE(ctx.is_cube(ctx.gamma()));
  EXPECT_THROW(ctx.is_cube(ctx.zero()), ParameterError);
  EXPECT_THROW(FieldCtx::create(5).is_cube(FieldElement(1)), ParameterError);
}

TEST(FieldCtx, CubicClassIsDlogModThree) {
  for (unsigned m : {2u, 6u, 12u, 26u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    std::mt19937_64 rng(m);
    for (int i = 0; i < 300; ++i) {
      const std::uint64_t e = rng() % ctx.group_order();
      EXPECT_EQ(ctx.cubic_class(ctx.pow(ctx.gamma(), e)), e % 3);
    }
  }
}

TEST(FieldCtx, CustomModulusRejectsReducible) {
  EXPECT_NO_THROW(FieldCtx::with_modulus(4, 0b11001));
  EXPECT_THROW(FieldCtx::with_modulus(4, 0b10101), ParameterError);
  EXPECT_THROW(FieldCtx::with_modulus(4, 0b1011), ParameterError);
}

TEST(NumberTheory, GcdIdentitiesMatchIntegerGcd) {
  for (unsigned m = 1; m <= 40; ++m) {
    for (unsigned k = 1; k <= 40; ++k) {
      const std::uint64_t big = (std::uint64_t{1} << m) - 1;
      const GcdPow2 g = gcd_pow2_identities(k, m);
      EXPECT_EQ(g.minus_one, std::gcd((std::uint64_t{1} << k) - 1, big));
      EXPECT_EQ(g.plus_one, std::gcd((std::uint64_t{1} << k) + 1, big));
    }
  }
}

TEST(NumberTheory, CoprimeKWithEvenMGivesOneAndThree) {
  for (unsigned m = 2; m <= 16; m += 2) {
    for (unsigned k = 1; k < 4 * m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      const GcdPow2 g = gcd_pow2_identities(k, m);
      EXPECT_EQ(g.minus_one, 1u);
      EXPECT_EQ(g.plus_one, 3u);
    }
  }
}

TEST(NumberTheory, ScaledCongruenceMatchesEnumeration) {
  for (unsigned m : {2u, 4u, 6u, 8u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    const std::uint64_t order = ctx.group_order();
    for (unsigned k = 1; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      for (unsigned s = 0; s <= m; s += 2) {
        std::uint64_t coeff = ((std::uint64_t{1} << k) + 1) % order;
        for (unsigned i = 0; i < s; ++i) coeff = coeff * 2 % order;
        for (long long rhs = -30; rhs <= 30; rhs += 3) {
          const auto target = static_cast<std::uint64_t>(((rhs % static_cast<long long>(order)) +
                                                           static_cast<long long>(order)) %
                                                          static_cast<long long>(order));
          std::uint64_t expected = order;
          for (std::uint64_t c = 0; c < order; ++c) {
            if (coeff * c % order == target) {
              expected = c;
              break;
            }
          }
          ASSERT_NE(expected, order);
          EXPECT_EQ(solve_scaled_congruence(ctx, k, s, rhs), expected)
              << "m=" << m << " k=" << k << " s=" << s << " rhs=" << rhs;
        }
        EXPECT_THROW(solve_scaled_congruence(ctx, k, s, 1), ParameterError);
      }
    }
  }
}

TEST(NumberTheory, EulerPhiMatchesCount) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= n; ++i) count += std::gcd(i, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

}  // namespace
}  // namespace apnkit
