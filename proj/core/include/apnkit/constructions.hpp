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

// Gold and Pott-Zhou constructors, parameter canonicalization and the
// inequivalence counts for the Pott-Zhou family.

#ifndef APNKIT_CONSTRUCTIONS_HPP_
#define APNKIT_CONSTRUCTIONS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apnkit/gf2m.hpp"
#include "apnkit/vbf.hpp"

namespace apnkit {

// f(x, y) = (x^(2^k+1) + alpha * y^((2^k+1) 2^s), x * y) on GF(2^m)^2.
struct PottZhouParams {
  unsigned m = 0;
  unsigned k = 0;
  unsigned s = 0;
  FieldElement alpha;
};

enum class Validation { kStrict, kUnsafeSkip };

// First violated APN condition, or nullopt. The message names the invariant.
std::optional<std::string> validate(const FieldCtx& ctx, const PottZhouParams& p);

// Throws ParameterError on invalid parameters unless validation is skipped;
// skipping still requires m to match the field and alpha to be a field element.
Vbf pott_zhou(const FieldCtx& ctx, const PottZhouParams& p,
              Validation validation = Validation::kStrict);

// Default alpha is the field's primitive element, a non-cube for even m.
inline PottZhouParams pott_zhou_params(const FieldCtx& ctx, unsigned k, unsigned s) {
  return PottZhouParams{ctx.degree(), k, s, ctx.gamma()};
}

// x -> x^(2^k+1) on n = m. Requires gcd(k, m) = 1.
Vbf gold(const FieldCtx& ctx, unsigned k);

struct KsPair {
  unsigned k = 0;
  unsigned s = 0;
  friend bool operator==(const KsPair&, const KsPair&) = default;
  friend auto operator<=>(const KsPair&, const KsPair&) = default;
};

// Representative of (+-k mod m, +-s mod m) with 0 < k < m/2 and 0 <= s <= m/2
// (m = 2 maps to (1, 0)). Requires even m, gcd(k, m) = 1, s even.
KsPair canonicalize(unsigned m, long long k, long long s);

// Canonical (k, s) pairs in lexicographic order; [(1, 0)] for m = 2.
std::vector<KsPair> enumerate_canonical(unsigned m);

// (floor(m/4) + 1) * phi(m) / 2, and 1 for m = 2.
std::uint64_t count_inequivalent(unsigned m);

struct CountBounds {
  double lower = 0;  // m sqrt(m) / 2
  double upper = 0;  // m (m + 4) / 16
};
CountBounds count_bounds(unsigned m);

}  // namespace apnkit

#endif  // APNKIT_CONSTRUCTIONS_HPP_
