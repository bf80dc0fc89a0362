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

// Linearized polynomials sum_i a_i X^(2^i) over GF(2^m), 2x2 block maps built
// from them, and explicit EA-equivalence witnesses f(L(v)) = N(g(v)) + M(v)
// for the Gold and Pott-Zhou families.

#ifndef APNKIT_LINEARIZED_HPP_
#define APNKIT_LINEARIZED_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apnkit/bit_matrix.hpp"
#include "apnkit/gf2m.hpp"
#include "apnkit/vbf.hpp"

namespace apnkit {

class LinearizedPoly {
 public:
  LinearizedPoly() = default;
  // coeffs[i] multiplies X^(2^i); the degree m is coeffs.size().
  explicit LinearizedPoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {}

  static LinearizedPoly zero(unsigned m) { return LinearizedPoly(std::vector<FieldElement>(m)); }
  static LinearizedPoly identity(unsigned m) { return monomial(m, 0, FieldElement(1)); }
  // a X^(2^u), u taken mod m (negative u allowed).
  static LinearizedPoly monomial(unsigned m, long long u, FieldElement a);

  unsigned m() const { return static_cast<unsigned>(coeffs_.size()); }
  std::span<const FieldElement> coeffs() const { return coeffs_; }
  FieldElement coeff(unsigned i) const { return coeffs_[i]; }
  void add_term(long long u, FieldElement a);
  bool is_zero() const;

  FieldElement eval(const FieldCtx& ctx, FieldElement x) const;

  friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;

 private:
  std::vector<FieldElement> coeffs_;
};

LinearizedPoly operator+(const LinearizedPoly& p, const LinearizedPoly& q);
// (outer o inner)(X) = outer(inner(X)), reduced mod X^(2^m) - X.
LinearizedPoly compose(const FieldCtx& ctx, const LinearizedPoly& outer,
                       const LinearizedPoly& inner);
// m x m matrix over F_2 in the polynomial basis: column j is p(X^j).
BitMatrix to_matrix(const FieldCtx& ctx, const LinearizedPoly& p);
bool is_permutation(const FieldCtx& ctx, const LinearizedPoly& p);

// (x, y) -> (b1(x) + b3(y), b2(x) + b4(y)).
struct BivariateLinearMap {
  LinearizedPoly b1, b2, b3, b4;

  static BivariateLinearMap zero(unsigned m);
  static BivariateLinearMap identity(unsigned m);
  // Diagonal map (x, y) -> (p(x), q(y)).
  static BivariateLinearMap diagonal(LinearizedPoly p, LinearizedPoly q);

  unsigned m() const { return b1.m(); }
  // Acts on a packed index (x low, y high).
  std::uint32_t apply(const FieldCtx& ctx, std::uint32_t v) const;

  friend bool operator==(const BivariateLinearMap&, const BivariateLinearMap&) = default;
};

BivariateLinearMap operator+(const BivariateLinearMap& a, const BivariateLinearMap& b);
BivariateLinearMap compose(const FieldCtx& ctx, const BivariateLinearMap& outer,
                           const BivariateLinearMap& inner);
// 2m x 2m matrix acting on packed indices.
BitMatrix to_matrix(const FieldCtx& ctx, const BivariateLinearMap& map);
bool is_invertible(const FieldCtx& ctx, const BivariateLinearMap& map);

// Univariate witnesses use only block b1 of each map (the others are zero).
enum class WitnessShape { kUnivariate, kBivariate };

// f(L(v)) = N(g(v)) + M(v) for all v, with L and N invertible.
struct EAWitness {
  WitnessShape shape = WitnessShape::kBivariate;
  BivariateLinearMap L, N, M;

  static EAWitness identity(unsigned m, WitnessShape shape);
  unsigned m() const { return L.m(); }

  friend bool operator==(const EAWitness&, const EAWitness&) = default;
};

// If w1 relates (f, g) and w2 relates (g, h), the result relates (f, h).
EAWitness compose(const FieldCtx& ctx, const EAWitness& w1, const EAWitness& w2);

// Exhaustive check over all inputs, plus invertibility of L and N. Throws
// ParameterError if f, g and the witness shape disagree on dimensions.
bool verify_ea_witness(const FieldCtx& ctx, const Vbf& f, const Vbf& g, const EAWitness& w);

// Witness relating f_{k,s,alpha} to f_{k,s,beta}; alpha and beta non-cubes.
EAWitness pz_alpha_witness(const FieldCtx& ctx, unsigned k, unsigned s, FieldElement alpha,
                           FieldElement beta);

// Witness relating f_{k,s,alpha} to f_{k',s',alpha} with
// k' = sign_k * k mod m and s' = sign_s * s mod m. Signs are +1 or -1;
// alpha defaults to the primitive element.
EAWitness pz_sign_witness(const FieldCtx& ctx, unsigned k, unsigned s, int sign_k, int sign_s);
EAWitness pz_sign_witness(const FieldCtx& ctx, unsigned k, unsigned s, int sign_k, int sign_s,
                          FieldElement alpha);

// L = a X^(2^u), N = a^(2^k+1) X^(2^u), M = 0, for all u and nonzero a, in
// that order. Each relates the Gold function x^(2^k+1) to itself.
std::vector<EAWitness> gold_monomial_automorphisms(const FieldCtx& ctx, unsigned k);

// m = 4 only: the two binomial families of linear automorphisms of x^3.
std::vector<EAWitness> gold_m4_binomial_automorphisms(const FieldCtx& ctx);

struct Case2Exhaustion {
  std::uint64_t candidates = 0;
  std::uint64_t permutations = 0;
};

// m = 4 only: coefficient tuples (a0, a1, a2, a3), all nonzero, with a1/a3 a
// cube, a2 = a0 (a1/a3)^2 and a0^3 != a3^2 a1. Counts candidates and those
// whose L is a permutation. With require_cube_ratio = false the cube
// condition on a1/a3 is dropped.
Case2Exhaustion gold_m4_case2_exhaustion(const FieldCtx& ctx, bool require_cube_ratio = true);

// P(X) = X + alpha delta^((2^k+1) 2^s) X^(2^s) is a permutation of GF(2^m).
bool p_map_is_bijective(const FieldCtx& ctx, unsigned k, unsigned s, FieldElement alpha,
                        FieldElement delta);

// JSON with m, shape and the twelve blocks as arrays of hex coefficients.
std::string witness_to_json(const EAWitness& w);
EAWitness witness_from_json(std::string_view text);

}  // namespace apnkit

#endif  // APNKIT_LINEARIZED_HPP_
