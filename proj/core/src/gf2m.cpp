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

#include "apnkit/gf2m.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "apnkit/error.hpp"

namespace apnkit {
namespace {

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// (a * b) mod p for polynomials of degree < deg(p) <= 32.
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const int d = poly_degree(p);
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> d) & 1) a ^= p;
  }
  return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
  const int d = poly_degree(p);
  for (int i = poly_degree(a); i >= d; --i) {
    if ((a >> i) & 1) a ^= p << (i - d);
  }
  return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// X^(2^i) mod p.
std::uint64_t x_pow_pow2(unsigned i, std::uint64_t p) {
  std::uint64_t r = poly_mod(2, p);
  for (unsigned j = 0; j < i; ++j) r = poly_mulmod(r, r, p);
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t r = 1;
  base %= mod;
  while (e != 0) {
    if (e & 1) r = mulmod_u64(r, base, mod);
    base = mulmod_u64(base, base, mod);
    e >>= 1;
  }
  return r;
}

// Inverse of a modulo mod, gcd(a, mod) = 1.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t mod) {
  i128 t = 0, new_t = 1;
  i128 r = mod, new_r = a % mod;
  while (new_r != 0) {
    const i128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += mod;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t q : prime_factors(n)) result -= result / q;
  return result;
}

bool is_irreducible_gf2(std::uint64_t poly) {
  const int m = poly_degree(poly);
  if (m < 1 || m > static_cast<int>(FieldCtx::kMaxDegree)) return false;
  if (m == 1) return true;
  if ((poly & 1) == 0) return false;
  // Rabin: X^(2^m) = X mod p, and gcd(X^(2^(m/r)) - X, p) = 1 for every
  // prime r dividing m.
  if (x_pow_pow2(static_cast<unsigned>(m), poly) != 2) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(m))) {
    const std::uint64_t h = x_pow_pow2(static_cast<unsigned>(m / r), poly) ^ 2;
    if (poly_gcd(poly, h) != 1) return false;
  }
  return true;
}

std::uint64_t smallest_irreducible_gf2(unsigned m) {
  if (m < 1 || m > FieldCtx::kMaxDegree) {
    throw ParameterError("field degree m must satisfy 1 <= m <= 32");
  }
  // Odd candidates only: X itself is excluded so that m = 1 yields X + 1.
  for (std::uint64_t p = (std::uint64_t{1} << m) | 1;; p += 2) {
    if (is_irreducible_gf2(p)) return p;
  }
}

FieldCtx FieldCtx::create(unsigned m) {
  return FieldCtx(m, smallest_irreducible_gf2(m));
}

FieldCtx FieldCtx::with_modulus(unsigned m, std::uint64_t modulus) {
  if (m < 1 || m > kMaxDegree) {
    throw ParameterError("field degree m must satisfy 1 <= m <= 32");
  }
  if (poly_degree(modulus) != static_cast<int>(m) || (modulus & 1) == 0 ||
      !is_irreducible_gf2(modulus)) {
    throw ParameterError("modulus must be an irreducible polynomial of degree m");
  }
  return FieldCtx(m, modulus);
}

FieldCtx::FieldCtx(unsigned m, std::uint64_t modulus) : m_(m), modulus_(modulus) {
  const std::uint64_t order = group_order();
  const auto factors = prime_factors(order);
  for (std::uint64_t g = 1; g <= order; ++g) {
    const FieldElement cand(static_cast<std::uint32_t>(g));
    bool full = true;
    for (std::uint64_t q : factors) {
      if (pow(cand, order / q) == one()) {
        full = false;
        break;
      }
    }
    if (full) {
      gamma_ = cand;
      break;
    }
  }
  if (m_ <= kMaxTableDegree) {
    auto t = std::make_shared<Tables>();
    t->exp.resize(2 * order);
    t->log.assign(size(), 0);
    FieldElement x = one();
    for (std::uint64_t i = 0; i < order; ++i) {
      t->exp[i] = x.bits;
      t->exp[i + order] = x.bits;
      t->log[x.bits] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, gamma_);
    }
    tables_ = std::move(t);
  }
}

FieldElement FieldCtx::element(std::uint64_t bits) const {
  if (bits > group_order()) {
    throw ParameterError("field element " + std::to_string(bits) +
                         " out of range for m = " + std::to_string(m_));
  }
  return FieldElement(static_cast<std::uint32_t>(bits));
}

FieldElement FieldCtx::mul_slow(FieldElement a, FieldElement b) const {
  return FieldElement(static_cast<std::uint32_t>(poly_mulmod(a.bits, b.bits, modulus_)));
}

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  if (tables_) {
    const auto& t = *tables_;
    return FieldElement(t.exp[t.log[a.bits] + t.log[b.bits]]);
  }
  return mul_slow(a, b);
}

FieldElement FieldCtx::pow(FieldElement a, std::uint64_t e) const {
  if (a.is_zero()) return e == 0 ? one() : zero();
  e %= group_order();
  if (tables_) {
    const auto& t = *tables_;
    return FieldElement(t.exp[mulmod_u64(t.log[a.bits], e, group_order())]);
  }
  FieldElement r = one();
  while (e != 0) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

FieldElement FieldCtx::frobenius(FieldElement a, long long i) const {
  long long r = i % static_cast<long long>(m_);
  if (r < 0) r += m_;
  for (long long j = 0; j < r; ++j) a = mul(a, a);
  return a;
}

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a.is_zero()) throw ParameterError("inversion of zero");
  return pow(a, group_order() - 1);
}

std::uint64_t FieldCtx::dlog(FieldElement a) const {
  if (a.is_zero()) throw ParameterError("discrete logarithm of zero");
  if (tables_) return tables_->log[a.bits];
  // Baby-step giant-step.
  const std::uint64_t order = group_order();
  std::uint64_t step = 1;
  while (step * step < order) ++step;
  std::unordered_map<std::uint32_t, std::uint64_t> baby;
  baby.reserve(step * 2);
  FieldElement x = one();
  for (std::uint64_t j = 0; j < step; ++j) {
    baby.emplace(x.bits, j);
    x = mul(x, gamma_);
  }
  const FieldElement giant = inv(pow(gamma_, step));
  FieldElement y = a;
  for (std::uint64_t i = 0; i <= step; ++i) {
    if (auto it = baby.find(y.bits); it != baby.end()) {
      return (i * step + it->second) % order;
    }
    y = mul(y, giant);
  }
  throw InternalError("discrete logarithm not found");
}

bool FieldCtx::is_cube(FieldElement a) const {
  return cubic_class(a) == 0;
}

unsigned FieldCtx::cubic_class(FieldElement a) const {
  if (m_ % 2 != 0) {
    throw ParameterError("cube test requires even m: every element is a cube for odd m");
  }
  if (a.is_zero()) throw ParameterError("cube test requires a nonzero element");
  const std::uint64_t third = group_order() / 3;
  const FieldElement t = pow(a, third);
  if (t == one()) return 0;
  return t == pow(gamma_, third) ? 1 : 2;
}

GcdPow2 gcd_pow2_identities(std::uint64_t k, unsigned m) {
  if (k < 1 || m < 1 || m > 63) {
    throw ParameterError("gcd identities require k >= 1 and 1 <= m <= 63");
  }
  const std::uint64_t mod = (std::uint64_t{1} << m) - 1;
  const std::uint64_t r = powmod_u64(2, k, mod);  // 2^k mod (2^m - 1)
  return GcdPow2{gcd_u64(mod, mod == 1 ? 0 : (r + mod - 1) % mod),
                 gcd_u64(mod, mod == 1 ? 0 : (r + 1) % mod)};
}

std::uint64_t solve_scaled_congruence(const FieldCtx& ctx, unsigned k, unsigned s,
                                      long long rhs) {
  const unsigned m = ctx.degree();
  if (m % 2 != 0) throw ParameterError("scaled congruence requires even m");
  if (gcd_u64(k, m) != 1) throw ParameterError("scaled congruence requires gcd(k, m) = 1");
  const std::uint64_t mod = ctx.group_order();
  const std::uint64_t a =
      mulmod_u64((powmod_u64(2, k, mod) + 1) % mod, powmod_u64(2, s, mod), mod);
  const std::uint64_t g = gcd_u64(a, mod);
  long long r = rhs % static_cast<long long>(mod);
  if (r < 0) r += static_cast<long long>(mod);
  const auto ur = static_cast<std::uint64_t>(r);
  if (ur % 3 != 0 || ur % g != 0) {
    throw ParameterError("scaled congruence has no solution: rhs must be divisible by 3");
  }
  const std::uint64_t reduced_mod = mod / g;
  if (reduced_mod == 1) return 0;
  return mulmod_u64((ur / g) % reduced_mod, invmod_u64((a / g) % reduced_mod, reduced_mod),
                    reduced_mod);
}

}  // namespace apnkit
