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

#include "apnkit/vbf.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "apnkit/error.hpp"

namespace apnkit {

Vbf::Vbf(unsigned n, std::vector<std::uint32_t> table) : n_(n), table_(std::move(table)) {
  if (n > kMaxDimension) {
    throw ParameterError("truth-table dimension n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxDimension));
  }
  if (table_.size() != (std::size_t{1} << n)) {
    throw ParameterError("truth table must have exactly 2^n entries");
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint32_t v : table_) {
    if (v >= limit) throw ParameterError("truth-table entry out of range for n");
  }
}

Vbf Vbf::identity(unsigned n) {
  std::vector<std::uint32_t> t(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = x;
  return Vbf(n, std::move(t));
}

Vbf Vbf::constant(unsigned n, std::uint32_t value) {
  return Vbf(n, std::vector<std::uint32_t>(std::size_t{1} << n, value));
}

Vbf power_function(const FieldCtx& ctx, std::uint64_t d) {
  std::vector<std::uint32_t> t(ctx.size());
  for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = ctx.pow(FieldElement(x), d).bits;
  return Vbf(ctx.degree(), std::move(t));
}

std::uint32_t DifferentialSpectrum::max() const {
  for (std::size_t c = counts.size(); c-- > 0;) {
    if (counts[c] != 0) return static_cast<std::uint32_t>(c);
  }
  return 0;
}

bool is_apn(const Vbf& f) {
  const std::size_t size = f.size();
  std::vector<std::uint8_t> bucket(size);
  const auto t = f.table();
  for (std::uint32_t a = 1; a < size; ++a) {
    std::fill(bucket.begin(), bucket.end(), 0);
    for (std::uint32_t x = 0; x < size; ++x) {
      // Solutions come in pairs {x, x + a}; visit each pair once.
      if ((x ^ a) < x) continue;
      if (++bucket[t[x ^ a] ^ t[x]] > 1) return false;
    }
  }
  return true;
}

DifferentialSpectrum differential_spectrum(const Vbf& f) {
  const std::size_t size = f.size();
  const auto t = f.table();
  std::vector<std::uint32_t> bucket(size);
  DifferentialSpectrum spec;
  spec.counts.assign(size + 1, 0);
  for (std::uint32_t a = 1; a < size; ++a) {
    std::fill(bucket.begin(), bucket.end(), 0);
    for (std::uint32_t x = 0; x < size; ++x) ++bucket[t[x ^ a] ^ t[x]];
    for (std::uint32_t c : bucket) ++spec.counts[c];
  }
  while (spec.counts.size() > 1 && spec.counts.back() == 0) spec.counts.pop_back();
  return spec;
}

std::vector<std::uint32_t> moebius_transform(std::span<const std::uint32_t> values,
                                             unsigned n) {
  std::vector<std::uint32_t> a(values.begin(), values.end());
  if (a.size() != (std::size_t{1} << n)) throw ParameterError("Moebius transform size must be 2^n");
  for (std::size_t step = 1; step < a.size(); step <<= 1) {
    for (std::size_t u = 0; u < a.size(); ++u) {
      if (u & step) a[u] ^= a[u ^ step];
    }
  }
  return a;
}

std::vector<std::uint32_t> anf(const Vbf& f) { return moebius_transform(f.table(), f.n()); }

unsigned algebraic_degree(const Vbf& f) {
  const auto coeffs = anf(f);
  unsigned degree = 0;
  for (std::uint32_t u = 0; u < coeffs.size(); ++u) {
    if (coeffs[u] != 0) degree = std::max(degree, static_cast<unsigned>(std::popcount(u)));
  }
  return degree;
}

void write_vbf(std::ostream& out, const Vbf& f) {
  out << "n=" << f.n() << '\n';
  char buf[16];
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, f(static_cast<std::uint32_t>(i)), 16);
    out.write(buf, end - buf);
    out << ((i % 16 == 15 || i + 1 == f.size()) ? '\n' : ' ');
  }
}

Vbf read_vbf(std::istream& in) {
  std::string header;
  if (!(in >> header) || header.rfind("n=", 0) != 0) {
    throw FormatError("truth table must start with 'n=<decimal>'");
  }
  unsigned n = 0;
  const char* first = header.data() + 2;
  const char* last = header.data() + header.size();
  auto [p, ec] = std::from_chars(first, last, n, 10);
  if (ec != std::errc() || p != last || first == last) {
    throw FormatError("invalid dimension in header '" + header + "'");
  }
  if (n > Vbf::kMaxDimension) throw FormatError("dimension n = " + std::to_string(n) + " too large");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> table;
  table.reserve(size);
  std::string token;
  while (in >> token) {
    if (table.size() == size) throw FormatError("truth table has more than 2^n entries");
    std::uint64_t v = 0;
    auto [q, ec2] = std::from_chars(token.data(), token.data() + token.size(), v, 16);
    if (ec2 != std::errc() || q != token.data() + token.size()) {
      throw FormatError("invalid hex entry '" + token + "'");
    }
    if (v >= (std::uint64_t{1} << n)) throw FormatError("entry '" + token + "' out of range");
    table.push_back(static_cast<std::uint32_t>(v));
  }
  if (table.size() != size) {
    throw FormatError("truth table has " + std::to_string(table.size()) + " entries, expected " +
                      std::to_string(size));
  }
  return Vbf(n, std::move(table));
}

}  // namespace apnkit
