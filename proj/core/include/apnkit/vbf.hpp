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

// Vectorial Boolean functions on F_2^n stored as full truth tables.

#ifndef APNKIT_VBF_HPP_
#define APNKIT_VBF_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "apnkit/gf2m.hpp"

namespace apnkit {

class Vbf {
 public:
  static constexpr unsigned kMaxDimension = 26;

  Vbf() = default;
  // Throws ParameterError unless table.size() == 2^n and every entry < 2^n.
  Vbf(unsigned n, std::vector<std::uint32_t> table);

  static Vbf identity(unsigned n);
  static Vbf constant(unsigned n, std::uint32_t value);

  unsigned n() const { return n_; }
  std::size_t size() const { return table_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }
  std::span<const std::uint32_t> table() const { return table_; }

  friend bool operator==(const Vbf&, const Vbf&) = default;

 private:
  unsigned n_ = 0;
  std::vector<std::uint32_t> table_;
};

// Truth table of (x, y) -> (f1(x, y), f2(x, y)) on GF(2^m)^2, n = 2m.
// Input index and output value both pack x (resp. f1) in the low m bits and
// y (resp. f2) in the high m bits.
template <typename F1, typename F2>
Vbf from_bivariate(const FieldCtx& ctx, F1&& f1, F2&& f2) {
  const unsigned m = ctx.degree();
  const std::uint32_t mask = (std::uint32_t{1} << m) - 1;
  std::vector<std::uint32_t> table(std::size_t{1} << (2 * m));
  for (std::uint32_t v = 0; v < table.size(); ++v) {
    const FieldElement x(v & mask), y(v >> m);
    const FieldElement lo = f1(x, y), hi = f2(x, y);
    table[v] = lo.bits | (hi.bits << m);
  }
  return Vbf(2 * m, std::move(table));
}

inline std::uint32_t pack_bivariate(unsigned m, FieldElement x, FieldElement y) {
  return x.bits | (y.bits << m);
}

// Univariate x -> x^d on n = m.
Vbf power_function(const FieldCtx& ctx, std::uint64_t d);

// Multiset of solution counts |{x : f(x + a) + f(x) = b}| over a != 0 and
// all b. counts[c] is the number of pairs (a, b) with exactly c solutions.
struct DifferentialSpectrum {
  std::vector<std::uint64_t> counts;

  std::uint32_t max() const;
  std::uint64_t pairs_with(std::uint32_t c) const {
    return c < counts.size() ? counts[c] : 0;
  }
};

bool is_apn(const Vbf& f);
DifferentialSpectrum differential_spectrum(const Vbf& f);

// Binary Moebius transform applied to every coordinate at once: bit i of
// result[u] is the ANF coefficient of x^u in coordinate i. The transform is
// an involution.
std::vector<std::uint32_t> moebius_transform(std::span<const std::uint32_t> values,
                                             unsigned n);
std::vector<std::uint32_t> anf(const Vbf& f);
unsigned algebraic_degree(const Vbf& f);

// Text format: "n=<decimal>" on the first line, then 2^n lowercase hex
// entries in index order. write_vbf emits 16 entries per line; read_vbf
// accepts any whitespace and throws FormatError on malformed input.
void write_vbf(std::ostream& out, const Vbf& f);
Vbf read_vbf(std::istream& in);

}  // namespace apnkit

#endif  // APNKIT_VBF_HPP_
