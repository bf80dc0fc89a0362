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

#include "apnkit/linearized.hpp"

#include "json.hpp"

#include "apnkit/constructions.hpp"
#include "apnkit/error.hpp"

namespace apnkit {
namespace {

void require_same_m(unsigned a, unsigned b) {
  if (a != b) throw ParameterError("linearized polynomials must share m");
}

// Values of p on every field element, built from its values on the
// polynomial basis.
std::vector<std::uint32_t> value_table(const FieldCtx& ctx, const LinearizedPoly& p) {
  const unsigned m = ctx.degree();
  require_same_m(p.m(), m);
  std::vector<std::uint32_t> table(ctx.size());
  for (std::uint32_t v = 1; v < table.size(); ++v) {
    const std::uint32_t low = v & (~v + 1);
    table[v] = (low == v) ? p.eval(ctx, FieldElement(v)).bits : table[v ^ low] ^ table[low];
  }
  return table;
}

struct MapTables {
  std::vector<std::uint32_t> t1, t2, t3, t4;
};

MapTables map_tables(const FieldCtx& ctx, const BivariateLinearMap& map) {
  return {value_table(ctx, map.b1), value_table(ctx, map.b2), value_table(ctx, map.b3),
          value_table(ctx, map.b4)};
}

bool blocks_zero_except_b1(const BivariateLinearMap& map) {
  return map.b2.is_zero() && map.b3.is_zero() && map.b4.is_zero();
}

FieldElement primitive_power(const FieldCtx& ctx, std::uint64_t e) {
  return ctx.pow(ctx.gamma(), e);
}

void require_valid_pz(const FieldCtx& ctx, unsigned k, unsigned s, FieldElement alpha) {
  if (auto err = validate(ctx, PottZhouParams{ctx.degree(), k, s, alpha})) {
    throw ParameterError(*err);
  }
}

// Witnesses are checked before they leave this module.
void self_check(const FieldCtx& ctx, const Vbf& f, const Vbf& g, const EAWitness& w) {
  if (!verify_ea_witness(ctx, f, g, w)) throw InternalError("constructed witness failed to verify");
}

void self_check_pz(const FieldCtx& ctx, const PottZhouParams& pf, const PottZhouParams& pg,
                   const EAWitness& w) {
  if (2 * ctx.degree() > Vbf::kMaxDimension) return;
  self_check(ctx, pott_zhou(ctx, pf), pott_zhou(ctx, pg), w);
}

EAWitness univariate_witness(LinearizedPoly l, LinearizedPoly n) {
  const unsigned m = l.m();
  EAWitness w;
  w.shape = WitnessShape::kUnivariate;
  w.L = BivariateLinearMap::zero(m);
  w.N = BivariateLinearMap::zero(m);
  w.M = BivariateLinearMap::zero(m);
  w.L.b1 = std::move(l);
  w.N.b1 = std::move(n);
  return w;
}

unsigned neg_mod(unsigned m, unsigned v) { return (m - v % m) % m; }

// f_{k,s,alpha} from f_{m-k,s,alpha}.
EAWitness k_negation(const FieldCtx& ctx, unsigned k) {
  const unsigned m = ctx.degree();
  const auto frob = LinearizedPoly::monomial(m, -static_cast<long long>(k), ctx.one());
  EAWitness w = EAWitness::identity(m, WitnessShape::kBivariate);
  w.L = BivariateLinearMap::diagonal(frob, frob);
  w.N = BivariateLinearMap::diagonal(LinearizedPoly::identity(m), frob);
  return w;
}

// f_{k,s,alpha} from f_{k,-s,alpha}: swap x and y, which turns alpha into
// alpha^-1, then rescale alpha^-1 back to alpha.
EAWitness s_negation(const FieldCtx& ctx, unsigned k, unsigned s, FieldElement alpha) {
  const unsigned m = ctx.degree();
  const auto frob = LinearizedPoly::monomial(m, -static_cast<long long>(s), ctx.one());
  EAWitness swap = EAWitness::identity(m, WitnessShape::kBivariate);
  swap.L = BivariateLinearMap::zero(m);
  swap.L.b2 = frob;
  swap.L.b3 = frob;
  swap.N = BivariateLinearMap::diagonal(LinearizedPoly::monomial(m, 0, alpha), frob);
  const unsigned s_neg = neg_mod(m, s);
  return compose(ctx, swap, pz_alpha_witness(ctx, k, s_neg, ctx.inv(alpha), alpha));
}

std::string to_hex(std::uint32_t v) {
  static const char* kDigits = "0123456789abcdef";
  if (v == 0) return "0";
  std::string out;
  while (v) {
    out.insert(out.begin(), kDigits[v & 15]);
    v >>= 4;
  }
  return out;
}

nlohmann::json poly_json(const LinearizedPoly& p) {
  auto arr = nlohmann::json::array();
  for (FieldElement c : p.coeffs()) arr.push_back(to_hex(c.bits));
  return arr;
}

nlohmann::json map_json(const BivariateLinearMap& map) {
  return {{"b1", poly_json(map.b1)},
          {"b2", poly_json(map.b2)},
          {"b3", poly_json(map.b3)},
          {"b4", poly_json(map.b4)}};
}

LinearizedPoly poly_from_json(const nlohmann::json& j, unsigned m) {
  if (!j.is_array() || j.size() != m) throw FormatError("block must hold m coefficients");
  std::vector<FieldElement> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw FormatError("coefficient must be a hex string");
    const auto& s = c.get_ref<const std::string&>();
    if (s.empty() || s.size() > 8) throw FormatError("bad hex coefficient: " + s);
    std::uint64_t v = 0;
    for (char ch : s) {
      int d;
      if (ch >= '0' && ch <= '9') d = ch - '0';
      else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
      else throw FormatError("bad hex coefficient: " + s);
      v = v * 16 + static_cast<unsigned>(d);
    }
    if (v >> m) throw FormatError("coefficient outside the field: " + s);
    coeffs.emplace_back(static_cast<std::uint32_t>(v));
  }
  return LinearizedPoly(std::move(coeffs));
}

BivariateLinearMap map_from_json(const nlohmann::json& j, unsigned m) {
  if (!j.is_object()) throw FormatError("map must be an object");
  auto block = [&](const char* name) {
    if (!j.contains(name)) throw FormatError(std::string("missing block ") + name);
    return poly_from_json(j.at(name), m);
  };
  return BivariateLinearMap{block("b1"), block("b2"), block("b3"), block("b4")};
}

}  // namespace

LinearizedPoly LinearizedPoly::monomial(unsigned m, long long u, FieldElement a) {
  LinearizedPoly p = zero(m);
  p.add_term(u, a);
  return p;
}

void LinearizedPoly::add_term(long long u, FieldElement a) {
  if (coeffs_.empty()) throw ParameterError("polynomial has m = 0");
  const long long mm = m();
  coeffs_[static_cast<std::size_t>(((u % mm) + mm) % mm)] += a;
}

bool LinearizedPoly::is_zero() const {
  for (FieldElement c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

FieldElement LinearizedPoly::eval(const FieldCtx& ctx, FieldElement x) const {
  FieldElement acc, xp = x;
  for (FieldElement c : coeffs_) {
    if (!c.is_zero()) acc += ctx.mul(c, xp);
    xp = ctx.square(xp);
  }
  return acc;
}

LinearizedPoly operator+(const LinearizedPoly& p, const LinearizedPoly& q) {
  require_same_m(p.m(), q.m());
  std::vector<FieldElement> c(p.m());
  for (unsigned i = 0; i < p.m(); ++i) c[i] = p.coeff(i) + q.coeff(i);
  return LinearizedPoly(std::move(c));
}

LinearizedPoly compose(const FieldCtx& ctx, const LinearizedPoly& outer,
                       const LinearizedPoly& inner) {
  const unsigned m = outer.m();
  require_same_m(m, inner.m());
  require_same_m(m, ctx.degree());
  LinearizedPoly out = LinearizedPoly::zero(m);
  for (unsigned i = 0; i < m; ++i) {
    if (outer.coeff(i).is_zero()) continue;
    for (unsigned j = 0; j < m; ++j) {
      if (inner.coeff(j).is_zero()) continue;
      out.add_term(i + j, ctx.mul(outer.coeff(i), ctx.frobenius(inner.coeff(j), i)));
    }
  }
  return out;
}

BitMatrix to_matrix(const FieldCtx& ctx, const LinearizedPoly& p) {
  const unsigned m = ctx.degree();
  require_same_m(p.m(), m);
  BitMatrix mat(m, m);
  for (unsigned j = 0; j < m; ++j) {
    const std::uint32_t image = p.eval(ctx, FieldElement(std::uint32_t{1} << j)).bits;
    for (unsigned i = 0; i < m; ++i) {
      if ((image >> i) & 1) mat.set(i, j, true);
    }
  }
  return mat;
}

bool is_permutation(const FieldCtx& ctx, const LinearizedPoly& p) {
  return to_matrix(ctx, p).is_invertible();
}

BivariateLinearMap BivariateLinearMap::zero(unsigned m) {
  return {LinearizedPoly::zero(m), LinearizedPoly::zero(m), LinearizedPoly::zero(m),
          LinearizedPoly::zero(m)};
}

BivariateLinearMap BivariateLinearMap::identity(unsigned m) {
  return diagonal(LinearizedPoly::identity(m), LinearizedPoly::identity(m));
}

BivariateLinearMap BivariateLinearMap::diagonal(LinearizedPoly p, LinearizedPoly q) {
  const unsigned m = p.m();
  require_same_m(m, q.m());
  return {std::move(p), LinearizedPoly::zero(m), LinearizedPoly::zero(m), std::move(q)};
}

std::uint32_t BivariateLinearMap::apply(const FieldCtx& ctx, std::uint32_t v) const {
  const unsigned mm = m();
  const std::uint32_t mask = (std::uint32_t{1} << mm) - 1;
  const FieldElement x(v & mask), y(v >> mm);
  const FieldElement lo = b1.eval(ctx, x) + b3.eval(ctx, y);
  const FieldElement hi = b2.eval(ctx, x) + b4.eval(ctx, y);
  return pack_bivariate(mm, lo, hi);
}

BivariateLinearMap operator+(const BivariateLinearMap& a, const BivariateLinearMap& b) {
  return {a.b1 + b.b1, a.b2 + b.b2, a.b3 + b.b3, a.b4 + b.b4};
}

BivariateLinearMap compose(const FieldCtx& ctx, const BivariateLinearMap& o,
                           const BivariateLinearMap& i) {
  auto c = [&](const LinearizedPoly& p, const LinearizedPoly& q) { return compose(ctx, p, q); };
  return {c(o.b1, i.b1) + c(o.b3, i.b2), c(o.b2, i.b1) + c(o.b4, i.b2),
          c(o.b1, i.b3) + c(o.b3, i.b4), c(o.b2, i.b3) + c(o.b4, i.b4)};
}

BitMatrix to_matrix(const FieldCtx& ctx, const BivariateLinearMap& map) {
  const unsigned n = 2 * ctx.degree();
  require_same_m(map.m(), ctx.degree());
  BitMatrix mat(n, n);
  for (unsigned j = 0; j < n; ++j) {
    const std::uint32_t image = map.apply(ctx, std::uint32_t{1} << j);
    for (unsigned i = 0; i < n; ++i) {
      if ((image >> i) & 1) mat.set(i, j, true);
    }
  }
  return mat;
}

bool is_invertible(const FieldCtx& ctx, const BivariateLinearMap& map) {
  return to_matrix(ctx, map).is_invertible();
}

EAWitness EAWitness::identity(unsigned m, WitnessShape shape) {
  if (shape == WitnessShape::kUnivariate) {
    return univariate_witness(LinearizedPoly::identity(m), LinearizedPoly::identity(m));
  }
  return EAWitness{shape, BivariateLinearMap::identity(m), BivariateLinearMap::identity(m),
                   BivariateLinearMap::zero(m)};
}

EAWitness compose(const FieldCtx& ctx, const EAWitness& w1, const EAWitness& w2) {
  if (w1.shape != w2.shape) throw ParameterError("witness shapes differ");
  // f L1 = N1 g + M1 and g L2 = N2 h + M2 give
  // f (L1 L2) = (N1 N2) h + (N1 M2 + M1 L2).
  EAWitness out;
  out.shape = w1.shape;
  out.L = compose(ctx, w1.L, w2.L);
  out.N = compose(ctx, w1.N, w2.N);
  out.M = compose(ctx, w1.N, w2.M) + compose(ctx, w1.M, w2.L);
  return out;
}

bool verify_ea_witness(const FieldCtx& ctx, const Vbf& f, const Vbf& g, const EAWitness& w) {
  const unsigned m = ctx.degree();
  const unsigned n = w.shape == WitnessShape::kUnivariate ? m : 2 * m;
  if (f.n() != n || g.n() != n || w.L.m() != m || w.N.m() != m || w.M.m() != m ||
      w.L.b2.m() != m || w.N.b2.m() != m || w.M.b2.m() != m) {
    throw ParameterError("dimension mismatch between functions and witness");
  }
  if (w.shape == WitnessShape::kUnivariate) {
    if (!blocks_zero_except_b1(w.L) || !blocks_zero_except_b1(w.N) ||
        !blocks_zero_except_b1(w.M)) {
      return false;
    }
    if (!is_permutation(ctx, w.L.b1) || !is_permutation(ctx, w.N.b1)) return false;
    const auto l = value_table(ctx, w.L.b1);
    const auto nn = value_table(ctx, w.N.b1);
    const auto mm = value_table(ctx, w.M.b1);
    for (std::uint32_t v = 0; v < f.size(); ++v) {
      if (f(l[v]) != (nn[g(v)] ^ mm[v])) return false;
    }
    return true;
  }
  if (!is_invertible(ctx, w.L) || !is_invertible(ctx, w.N)) return false;
  const MapTables l = map_tables(ctx, w.L), nt = map_tables(ctx, w.N), mt = map_tables(ctx, w.M);
  const std::uint32_t mask = (std::uint32_t{1} << m) - 1;
  auto apply = [&](const MapTables& t, std::uint32_t v) {
    const std::uint32_t x = v & mask, y = v >> m;
    return (t.t1[x] ^ t.t3[y]) | ((t.t2[x] ^ t.t4[y]) << m);
  };
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    if (f(apply(l, v)) != (apply(nt, g(v)) ^ apply(mt, v))) return false;
  }
  return true;
}

EAWitness pz_alpha_witness(const FieldCtx& ctx, unsigned k, unsigned s, FieldElement alpha,
                           FieldElement beta) {
  require_valid_pz(ctx, k, s, alpha);
  require_valid_pz(ctx, k, s, beta);
  const unsigned m = ctx.degree();
  const auto a = static_cast<long long>(ctx.dlog(alpha));
  const auto b = static_cast<long long>(ctx.dlog(beta));
  const bool same_class = ctx.cubic_class(alpha) == ctx.cubic_class(beta);
  // f_alpha(L(x, y)) = N(f_beta(x, y)) holds when
  // alpha gamma^(c (2^k+1) 2^s) equals beta (same class) or beta^2.
  const long long rhs = same_class ? b - a : 2 * b - a;
  const FieldElement scale = primitive_power(ctx, solve_scaled_congruence(ctx, k, s, rhs));
  const unsigned u = same_class ? 0 : 1;
  const auto base = LinearizedPoly::monomial(m, u, ctx.one());
  const auto scaled = LinearizedPoly::monomial(m, u, scale);
  EAWitness w = EAWitness::identity(m, WitnessShape::kBivariate);
  w.L = BivariateLinearMap::diagonal(base, scaled);
  w.N = BivariateLinearMap::diagonal(base, scaled);
  self_check_pz(ctx, {m, k, s, alpha}, {m, k, s, beta}, w);
  return w;
}

EAWitness pz_sign_witness(const FieldCtx& ctx, unsigned k, unsigned s, int sign_k, int sign_s) {
  return pz_sign_witness(ctx, k, s, sign_k, sign_s, ctx.gamma());
}

EAWitness pz_sign_witness(const FieldCtx& ctx, unsigned k, unsigned s, int sign_k, int sign_s,
                          FieldElement alpha) {
  if ((sign_k != 1 && sign_k != -1) || (sign_s != 1 && sign_s != -1)) {
    throw ParameterError("signs must be +1 or -1");
  }
  require_valid_pz(ctx, k, s, alpha);
  const unsigned m = ctx.degree();
  const unsigned k2 = sign_k < 0 ? neg_mod(m, k) : k;
  const unsigned s2 = sign_s < 0 ? neg_mod(m, s) : s;
  EAWitness w = EAWitness::identity(m, WitnessShape::kBivariate);
  if (sign_k < 0 && sign_s < 0) {
    w = compose(ctx, k_negation(ctx, k), s_negation(ctx, k2, s, alpha));
  } else if (sign_k < 0) {
    w = k_negation(ctx, k);
  } else if (sign_s < 0) {
    w = s_negation(ctx, k, s, alpha);
  }
  self_check_pz(ctx, {m, k, s, alpha}, {m, k2, s2, alpha}, w);
  return w;
}

std::vector<EAWitness> gold_monomial_automorphisms(const FieldCtx& ctx, unsigned k) {
  const unsigned m = ctx.degree();
  const Vbf f = gold(ctx, k);
  const std::uint64_t q = (std::uint64_t{1} << (k % m)) + 1;
  std::vector<EAWitness> out;
  out.reserve(m * ctx.group_order());
  for (unsigned u = 0; u < m; ++u) {
    for (std::uint32_t a = 1; a < ctx.size(); ++a) {
      const FieldElement coeff(a);
      out.push_back(univariate_witness(LinearizedPoly::monomial(m, u, coeff),
                                       LinearizedPoly::monomial(m, u, ctx.pow(coeff, q))));
      self_check(ctx, f, f, out.back());
    }
  }
  return out;
}

std::vector<EAWitness> gold_m4_binomial_automorphisms(const FieldCtx& ctx) {
  if (ctx.degree() != 4) throw ParameterError("binomial automorphism families require m = 4");
  const Vbf f = gold(ctx, 1);
  auto cube = [&](FieldElement a) { return ctx.pow(a, 3); };
  auto sq = [&](FieldElement a) { return ctx.square(a); };
  auto poly = [](FieldElement c0, FieldElement c1, FieldElement c2, FieldElement c3) {
    return LinearizedPoly({c0, c1, c2, c3});
  };
  const FieldElement z = ctx.zero();
  std::vector<EAWitness> out;
  out.reserve(300);
  // L = a1 X^2 + a3 X^8.
  for (std::uint32_t i = 1; i < 16; ++i) {
    for (std::uint32_t j = 1; j < 16; ++j) {
      const FieldElement a1(i), a3(j);
      if (ctx.is_cube(ctx.div(a1, a3))) continue;
      out.push_back(univariate_witness(
          poly(z, a1, z, a3), poly(ctx.mul(sq(a3), a1), cube(a1), ctx.mul(sq(a1), a3), cube(a3))));
      self_check(ctx, f, f, out.back());
    }
  }
  // L = a0 X + a2 X^4.
  for (std::uint32_t i = 1; i < 16; ++i) {
    for (std::uint32_t j = 1; j < 16; ++j) {
      const FieldElement a0(i), a2(j);
      if (ctx.is_cube(ctx.div(a0, a2))) continue;
      out.push_back(univariate_witness(
          poly(a0, z, a2, z), poly(cube(a0), ctx.mul(sq(a0), a2), cube(a2), ctx.mul(sq(a2), a0))));
      self_check(ctx, f, f, out.back());
    }
  }
  return out;
}

Case2Exhaustion gold_m4_case2_exhaustion(const FieldCtx& ctx, bool require_cube_ratio) {
  if (ctx.degree() != 4) throw ParameterError("case-2 exhaustion requires m = 4");
  Case2Exhaustion result;
  for (std::uint32_t i1 = 1; i1 < 16; ++i1) {
    for (std::uint32_t i3 = 1; i3 < 16; ++i3) {
      const FieldElement a1(i1), a3(i3);
      const FieldElement ratio = ctx.div(a1, a3);
      if (require_cube_ratio && !ctx.is_cube(ratio)) continue;
      for (std::uint32_t i0 = 1; i0 < 16; ++i0) {
        const FieldElement a0(i0);
        if (ctx.pow(a0, 3) == ctx.mul(ctx.square(a3), a1)) continue;
        const FieldElement a2 = ctx.mul(a0, ctx.square(ratio));
        ++result.candidates;
        if (is_permutation(ctx, LinearizedPoly({a0, a1, a2, a3}))) ++result.permutations;
      }
    }
  }
  return result;
}

bool p_map_is_bijective(const FieldCtx& ctx, unsigned k, unsigned s, FieldElement alpha,
                        FieldElement delta) {
  const unsigned m = ctx.degree();
  if (m % 2 != 0) throw ParameterError("m must be even");
  if (s % 2 != 0 || s % m == 0) throw ParameterError("s must be even and nonzero mod m");
  if (!ctx.contains(alpha) || alpha.is_zero()) throw ParameterError("alpha must be nonzero");
  if (!ctx.contains(delta) || delta.is_zero()) throw ParameterError("delta must be nonzero");
  const FieldElement dq = ctx.frobenius(ctx.mul(ctx.frobenius(delta, k), delta), s);
  LinearizedPoly p = LinearizedPoly::identity(m);
  p.add_term(s, ctx.mul(alpha, dq));
  return is_permutation(ctx, p);
}

std::string witness_to_json(const EAWitness& w) {
  nlohmann::json j = {
      {"m", w.m()},
      {"shape", w.shape == WitnessShape::kUnivariate ? "univariate" : "bivariate"},
      {"L", map_json(w.L)},
      {"N", map_json(w.N)},
      {"M", map_json(w.M)},
  };
  return j.dump();
}

EAWitness witness_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("witness is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("witness must be a JSON object");
  try {
    const auto m = j.at("m").get<unsigned>();
    if (m < 1 || m > 32) throw FormatError("m out of range");
    const auto shape = j.at("shape").get<std::string>();
    EAWitness w;
    if (shape == "univariate") {
      w.shape = WitnessShape::kUnivariate;
    } else if (shape == "bivariate") {
      w.shape = WitnessShape::kBivariate;
    } else {
      throw FormatError("unknown witness shape: " + shape);
    }
    w.L = map_from_json(j.at("L"), m);
    w.N = map_from_json(j.at("N"), m);
    w.M = map_from_json(j.at("M"), m);
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed witness: ") + e.what());
  }
}

}  // namespace apnkit
