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

#include <cmath>
#include <numeric>

#include "apnkit/constructions.hpp"
#include "apnkit/error.hpp"
#include "apnkit/vbf.hpp"

namespace apnkit {
namespace {

// For quadratic f every derivative x -> f(x + a) + f(x) + f(a) + f(0) is
// F_2-linear, and f is APN iff each such map has kernel exactly {0, a}.
bool quadratic_apn_by_derivative_rank(const Vbf& f) {
  const unsigned n = f.n();
  for (std::uint32_t a = 1; a < f.size(); ++a) {
    const std::uint32_t c = f(a) ^ f(0);
    std::vector<std::uint32_t> basis;
    unsigned rank = 0;
    for (unsigned i = 0; i < n; ++i) {
      const std::uint32_t e = std::uint32_t{1} << i;
      std::uint32_t v = f(e ^ a) ^ f(e) ^ c;
      for (std::uint32_t b : basis) v = std::min(v, v ^ b);
      if (v != 0) {
        basis.push_back(v);
        std::sort(basis.rbegin(), basis.rend());
        ++rank;
      }
    }
    if (rank != n - 1) return false;
  }
  return true;
}

std::vector<FieldElement> non_cubes(const FieldCtx& ctx) {
  std::vector<FieldElement> out;
  for (std::uint32_t a = 1; a < ctx.size(); ++a) {
    if (!ctx.is_cube(FieldElement(a))) out.push_back(FieldElement(a));
  }
  return out;
}

TEST(PottZhou, DerivativeRankOracleAgreesWithIsApn) {
  for (unsigned m : {2u, 4u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    for (unsigned k = 0; k <= m; ++k) {
      for (unsigned s = 0; s <= m; ++s) {
        for (std::uint32_t a = 1; a < ctx.size(); ++a) {
          const Vbf f = pott_zhou(ctx, {m, k, s, FieldElement(a)}, Validation::kUnsafeSkip);
          ASSERT_EQ(quadratic_apn_by_derivative_rank(f), is_apn(f));
        }
      }
    }
  }
}

TEST(PottZhou, CanonicalInstancesAreApnForEveryNonCube) {
  for (unsigned m : {2u, 4u, 6u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    for (const KsPair& ks : enumerate_canonical(m)) {
      for (FieldElement alpha : non_cubes(ctx)) {
        const Vbf f = pott_zhou(ctx, {m, ks.k, ks.s, alpha});
        EXPECT_TRUE(is_apn(f)) << m << " " << ks.k << " " << ks.s << " " << alpha.bits;
        EXPECT_EQ(algebraic_degree(f), 2u);
      }
    }
  }
}

TEST(PottZhou, SampledNonCubesForLargerM) {
  for (unsigned m : {8u, 10u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    const FieldElement g = ctx.gamma();
    const FieldElement alphas[] = {g, ctx.pow(g, 2), ctx.pow(g, 3 * 7 + 1)};
    for (const KsPair& ks : enumerate_canonical(m)) {
      for (FieldElement alpha : alphas) {
        const Vbf f = pott_zhou(ctx, {m, ks.k, ks.s, alpha});
        EXPECT_TRUE(quadratic_apn_by_derivative_rank(f)) << m << " " << ks.k << " " << ks.s;
      }
    }
  }
}

TEST(PottZhou, SingleConditionViolationsFail) {
  for (unsigned m : {2u, 4u, 6u}) {
    const FieldCtx ctx = FieldCtx::create(m);
    for (unsigned k = 0; k <= m; ++k) {
      for (unsigned s = 0; s <= m; ++s) {
        for (std::uint32_t a = 1; a < ctx.size(); ++a) {
          const PottZhouParams p{m, k, s, FieldElement(a)};
          const bool k_ok = std::gcd(k, m) == 1, s_ok = s % 2 == 0;
          const bool alpha_ok = !ctx.is_cube(p.alpha);
          if (k_ok && s_ok && alpha_ok) continue;
          EXPECT_TRUE(validate(ctx, p).has_value());
          EXPECT_THROW(pott_zhou(ctx, p), ParameterError);
          // Exactly one violated condition must already break APN; for a
          // violated gcd the map may be rejected only by validation. At m = 2
          // the function does not depend on s (see below).
          if (k_ok + s_ok + alpha_ok == 2 && k_ok && !(m == 2 && !s_ok)) {
            EXPECT_FALSE(is_apn(pott_zhou(ctx, p, Validation::kUnsafeSkip)))
                << m << " " << k << " " << s << " " << a;
          }
        }
      }
    }
  }
}

// y^(3 * 2^s) = 1 for every nonzero y in GF(4), so at m = 2 an odd s gives the
// same APN function as s = 0 even though validation rejects it.
TEST(PottZhou, OddShiftIsHarmlessAtM2) {
  const FieldCtx ctx = FieldCtx::create(2);
  for (FieldElement alpha : non_cubes(ctx)) {
    const Vbf odd = pott_zhou(ctx, {2, 1, 1, alpha}, Validation::kUnsafeSkip);
    EXPECT_EQ(odd, pott_zhou(ctx, {2, 1, 0, alpha}));
    EXPECT_TRUE(is_apn(odd));
  }
  for (unsigned m : {4u, 6u}) {
    const FieldCtx c = FieldCtx::create(m);
    EXPECT_FALSE(is_apn(pott_zhou(c, {m, 1, 1, c.gamma()}, Validation::kUnsafeSkip))) << m;
  }
}

TEST(PottZhou, ValidationNamesTheInvariant) {
  const FieldCtx ctx = FieldCtx::create(4);
  EXPECT_EQ(*validate(ctx, {4, 1, 1, ctx.gamma()}), "s must be even");
  EXPECT_EQ(*validate(ctx, {4, 1, 0, ctx.pow(ctx.gamma(), 3)}), "alpha must be a non-cube");
  EXPECT_EQ(*validate(ctx, {4, 2, 0, ctx.gamma()}), "k must be coprime to m");
  EXPECT_EQ(*validate(ctx, {4, 1, 0, ctx.zero()}), "alpha must be a nonzero field element");
  EXPECT_EQ(*validate(ctx, {6, 1, 0, ctx.gamma()}), "m must equal the field degree");
  EXPECT_EQ(*validate(FieldCtx::create(5), {5, 1, 0, FieldElement(2)}), "m must be even");
  EXPECT_FALSE(validate(ctx, {4, 1, 0, ctx.gamma()}).has_value());
}

TEST(PottZhou, ExamplesFromTheConstructionRules) {
  const FieldCtx ctx = FieldCtx::create(4);
  EXPECT_TRUE(is_apn(pott_zhou(ctx, pott_zhou_params(ctx, 1, 0))));
  EXPECT_FALSE(is_apn(pott_zhou(ctx, {4, 1, 1, ctx.gamma()}, Validation::kUnsafeSkip)));
  EXPECT_FALSE(is_apn(pott_zhou(ctx, {4, 1, 0, ctx.pow(ctx.gamma(), 3)}, Validation::kUnsafeSkip)));
}

TEST(Gold, ApnAndGcdGuard) {
  EXPECT_TRUE(is_apn(gold(FieldCtx::create(5), 1)));
  EXPECT_TRUE(is_apn(gold(FieldCtx::create(4), 1)));
  EXPECT_THROW(gold(FieldCtx::create(6), 2), ParameterError);
  EXPECT_EQ(algebraic_degree(gold(FieldCtx::create(7), 3)), 2u);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(8, 5, 6), (KsPair{3, 2}));
  EXPECT_EQ(canonicalize(8, 3, 2), (KsPair{3, 2}));
  EXPECT_EQ(canonicalize(6, 5, 4), (KsPair{1, 2}));
  EXPECT_EQ(canonicalize(2, 1, 0), (KsPair{1, 0}));
  EXPECT_EQ(canonicalize(8, -3, -2), (KsPair{3, 2}));
  EXPECT_THROW(canonicalize(8, 2, 0), ParameterError);
  EXPECT_THROW(canonicalize(8, 1, 3), ParameterError);
}

TEST(Canonicalize, ImageIsTheEnumeratedSet) {
  for (unsigned m = 4; m <= 40; m += 2) {
    const auto canon = enumerate_canonical(m);
    for (long long k = -2 * static_cast<long long>(m); k <= 2 * static_cast<long long>(m); ++k) {
      if (std::gcd(static_cast<unsigned long long>(std::llabs(k)), m) != 1) continue;
      for (long long s = -static_cast<long long>(m); s <= static_cast<long long>(m); s += 2) {
        const KsPair c = canonicalize(m, k, s);
        EXPECT_TRUE(std::find(canon.begin(), canon.end(), c) != canon.end());
        EXPECT_EQ(canonicalize(m, c.k, c.s), c);
      }
    }
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_canonical(8),
            (std::vector<KsPair>{{1, 0}, {1, 2}, {1, 4}, {3, 0}, {3, 2}, {3, 4}}));
  EXPECT_EQ(enumerate_canonical(4), (std::vector<KsPair>{{1, 0}, {1, 2}}));
  EXPECT_EQ(enumerate_canonical(2), (std::vector<KsPair>{{1, 0}}));
  EXPECT_THROW(enumerate_canonical(5), ParameterError);
}

TEST(Counting, ReferenceTable) {
  const std::pair<unsigned, std::uint64_t> table[] = {
      {2, 1},   {4, 2},   {6, 2},   {8, 6},   {10, 6},  {12, 8},  {14, 12}, {16, 20}, {18, 15},
      {20, 24}, {22, 30}, {24, 28}, {26, 42}, {28, 48}, {30, 32}, {32, 72}, {34, 72}};
  for (auto [m, count] : table) {
    EXPECT_EQ(count_inequivalent(m), count) << m;
    if (m >= 4) {
      EXPECT_EQ(enumerate_canonical(m).size(), count) << m;
    }
  }
}

TEST(Counting, FormulaEqualsEnumerationUpTo200) {
  for (unsigned m = 4; m <= 200; m += 2) {
    EXPECT_EQ(count_inequivalent(m), enumerate_canonical(m).size()) << m;
  }
}

TEST(Counting, BoundsHold) {
  for (unsigned m = 4; m <= 1000; m += 2) {
    const CountBounds b = count_bounds(m);
    const auto count = static_cast<double>(count_inequivalent(m));
    EXPECT_LE(count, b.upper) << m;
    if (m >= 212) {
      EXPECT_GE(count, b.lower) << m;
    }
  }
  EXPECT_DOUBLE_EQ(count_bounds(16).upper, 20.0);
  EXPECT_DOUBLE_EQ(count_bounds(4).upper, 2.0);
  EXPECT_DOUBLE_EQ(count_bounds(16).lower, 32.0);
  EXPECT_THROW(count_bounds(2), ParameterError);
  EXPECT_THROW(count_bounds(7), ParameterError);
}

TEST(Counting, UpperBoundIsSharpAtPowersOfTwo) {
  for (unsigned m : {4u, 8u, 16u, 32u, 64u, 128u, 256u, 512u}) {
    EXPECT_DOUBLE_EQ(static_cast<double>(count_inequivalent(m)), count_bounds(m).upper) << m;
  }
}

}  // namespace
}  // namespace apnkit
