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

// Arithmetic in GF(2^m), 1 <= m <= 32, plus the integer helpers used by the
// Pott-Zhou witnesses (gcd identities, scaled congruences).
//
// Elements are polynomials over F_2 reduced modulo a fixed irreducible
// polynomial, stored little-endian in a machine word: bit i is the
// coefficient of X^i.

#ifndef APNKIT_GF2M_HPP_
#define APNKIT_GF2M_HPP_

#include <cstdint>
#include <memory>
#include <vector>

namespace apnkit {

struct FieldElement {
  std::uint32_t bits = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    return FieldElement(a.bits ^ b.bits);
  }
  friend constexpr FieldElement& operator+=(FieldElement& a, FieldElement b) {
    a.bits ^= b.bits;
    return a;
  }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

class FieldCtx {
 public:
  static constexpr unsigned kMaxDegree = 32;
  static constexpr unsigned kMaxTableDegree = 20;

  // Field of degree m over the lexicographically smallest irreducible
  // polynomial (smallest bitmask), with gamma the smallest element of full
  // multiplicative order. Throws ParameterError unless 1 <= m <= 32.
  static FieldCtx create(unsigned m);

  // Same as create() but over a caller-chosen modulus. Throws ParameterError
  // if the modulus is not irreducible of exact degree m.
  static FieldCtx with_modulus(unsigned m, std::uint64_t modulus);

  unsigned degree() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }
  FieldElement gamma() const { return gamma_; }
  // 2^m - 1, the order of the multiplicative group.
  std::uint64_t group_order() const { return (std::uint64_t{1} << m_) - 1; }
  std::uint64_t size() const { return std::uint64_t{1} << m_; }
  bool contains(FieldElement a) const { return a.bits <= group_order(); }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  FieldElement element(std::uint64_t bits) const;  // throws if >= 2^m

  FieldElement add(FieldElement a, FieldElement b) const { return a + b; }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement square(FieldElement a) const { return mul(a, a); }
  // a^e; exponents of nonzero bases are reduced mod 2^m - 1. 0^0 = 1.
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // a^(2^i) for any integer i (negative i means the inverse automorphism).
  FieldElement frobenius(FieldElement a, long long i) const;
  // Throws ParameterError for a = 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  // Discrete logarithm to base gamma, in [0, 2^m - 1). Throws for a = 0.
  std::uint64_t dlog(FieldElement a) const;

  // Nonzero elements of F_{2^m}^* that are cubes. Requires m even (otherwise
  // every element is a cube) and a != 0; throws ParameterError otherwise.
  bool is_cube(FieldElement a) const;

  // Index of a in F^* / (F^*)^3, i.e. dlog(a) mod 3, computed through the
  // cubic character. Requires m even, a != 0.
  unsigned cubic_class(FieldElement a) const;

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // exp[i] = gamma^i, doubled length
    std::vector<std::uint32_t> log;  // log[0] unused
  };

  FieldCtx(unsigned m, std::uint64_t modulus);
  FieldElement mul_slow(FieldElement a, FieldElement b) const;

  unsigned m_ = 0;
  std::uint64_t modulus_ = 0;
  FieldElement gamma_;
  std::shared_ptr<const Tables> tables_;
};

// Polynomial helpers over F_2 (bitmask representation), exposed for tests
// and for FieldCtx::with_modulus.
bool is_irreducible_gf2(std::uint64_t poly);
std::uint64_t smallest_irreducible_gf2(unsigned m);

struct GcdPow2 {
  std::uint64_t minus_one;  // gcd(2^k - 1, 2^m - 1)
  std::uint64_t plus_one;   // gcd(2^k + 1, 2^m - 1)
};

// Integer gcds of 2^k -/+ 1 with 2^m - 1. Requires k >= 1, 1 <= m <= 63.
GcdPow2 gcd_pow2_identities(std::uint64_t k, unsigned m);

// Smallest nonnegative c with (2^k + 1) * 2^s * c == rhs (mod 2^m - 1).
// Requires m even, gcd(k, m) = 1 and rhs divisible by 3; rhs may be negative.
std::uint64_t solve_scaled_congruence(const FieldCtx& ctx, unsigned k,
                                      unsigned s, long long rhs);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace apnkit

#endif  // APNKIT_GF2M_HPP_
