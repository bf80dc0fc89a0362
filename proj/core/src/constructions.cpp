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

#include "apnkit/constructions.hpp"

#include <cmath>

#include "apnkit/error.hpp"

namespace apnkit {
namespace {

void require_even_m(unsigned m) {
  if (m < 2 || m % 2 != 0) throw ParameterError("m must be even and at least 2");
}

}  // namespace

std::optional<std::string> validate(const FieldCtx& ctx, const PottZhouParams& p) {
  if (p.m != ctx.degree()) return "m must equal the field degree";
  if (p.m < 2 || p.m % 2 != 0) return "m must be even";
  if (p.k > p.m || p.s > p.m) return "k and s must lie in [0, m]";
  if (gcd_u64(p.k, p.m) != 1) return "k must be coprime to m";
  if (p.s % 2 != 0) return "s must be even";
  if (!ctx.contains(p.alpha) || p.alpha.is_zero()) return "alpha must be a nonzero field element";
  if (ctx.is_cube(p.alpha)) return "alpha must be a non-cube";
  return std::nullopt;
}

Vbf pott_zhou(const FieldCtx& ctx, const PottZhouParams& p, Validation validation) {
  if (validation == Validation::kStrict) {
    if (auto err = validate(ctx, p)) throw ParameterError(*err);
  } else if (p.m != ctx.degree() || !ctx.contains(p.alpha)) {
    throw ParameterError("m must equal the field degree and alpha must be a field element");
  }
  if (2 * p.m > Vbf::kMaxDimension) throw ParameterError("m too large for a truth table");
  // Exponents (2^k + 1) and (2^k + 1) 2^s reduced into [1, 2^m - 1], which
  // preserves x^e on the whole field including 0.
  const std::uint64_t order = ctx.group_order();
  std::uint64_t pow2k = 1 % order;
  for (unsigned i = 0; i < p.k; ++i) pow2k = (pow2k * 2) % order;
  std::uint64_t q = (pow2k + 1) % order;
  std::uint64_t ey = q;
  for (unsigned i = 0; i < p.s; ++i) ey = (ey * 2) % order;
  if (q == 0) q = order;
  if (ey == 0) ey = order;
  // Power maps are evaluated once per field element.
  std::vector<FieldElement> xpow(ctx.size()), ypow(ctx.size());
  for (std::uint32_t v = 0; v < ctx.size(); ++v) {
    xpow[v] = ctx.pow(FieldElement(v), q);
    ypow[v] = ctx.mul(p.alpha, ctx.pow(FieldElement(v), ey));
  }
  return from_bivariate(
      ctx, [&](FieldElement x, FieldElement y) { return xpow[x.bits] + ypow[y.bits]; },
      [&](FieldElement x, FieldElement y) { return ctx.mul(x, y); });
}

Vbf gold(const FieldCtx& ctx, unsigned k) {
  if (gcd_u64(k, ctx.degree()) != 1) throw ParameterError("Gold exponent requires gcd(k, m) = 1");
  return power_function(ctx, (std::uint64_t{1} << (k % ctx.degree())) + 1);
}

KsPair canonicalize(unsigned m, long long k, long long s) {
  require_even_m(m);
  const long long mm = m;
  long long kr = ((k % mm) + mm) % mm;
  long long sr = ((s % mm) + mm) % mm;
  if (gcd_u64(static_cast<std::uint64_t>(kr), m) != 1) {
    throw ParameterError("k must be coprime to m");
  }
  if (sr % 2 != 0) throw ParameterError("s must be even");
  if (m == 2) return KsPair{1, 0};
  if (2 * kr > mm) kr = mm - kr;
  if (2 * sr > mm) sr = mm - sr;
  return KsPair{static_cast<unsigned>(kr), static_cast<unsigned>(sr)};
}

std::vector<KsPair> enumerate_canonical(unsigned m) {
  require_even_m(m);
  if (m == 2) return {KsPair{1, 0}};
  std::vector<KsPair> out;
  for (unsigned k = 1; 2 * k < m; ++k) {
    if (gcd_u64(k, m) != 1) continue;
    for (unsigned s = 0; 2 * s <= m; s += 2) out.push_back(KsPair{k, s});
  }
  return out;
}

std::uint64_t count_inequivalent(unsigned m) {
  require_even_m(m);
  if (m == 2) return 1;
  return (m / 4 + 1) * euler_phi(m) / 2;
}

CountBounds count_bounds(unsigned m) {
  if (m < 4 || m % 2 != 0) throw ParameterError("count bounds require even m >= 4");
  const double mm = m;
  return CountBounds{mm * std::sqrt(mm) / 2.0, mm * (mm + 4.0) / 16.0};
}

}  // namespace apnkit
