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

#include "apnkit/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "apnkit/error.hpp"

namespace apnkit {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  auto& w = data_[r * stride_ + c / 64];
  w = v ? (w | bit) : (w & ~bit);
}

std::size_t BitMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::uint64_t> scratch(data_);
  RankAccumulator acc(cols_);
  acc.add_rows(scratch, rows_);
  return acc.rank();
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ParameterError("matrix product dimension mismatch");
  BitMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(i, k)) continue;
      auto src = rhs.row(k);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

std::uint64_t BitMatrix::apply(std::uint64_t v) const {
  if (cols_ > 64 || rows_ > 64) throw ParameterError("apply() needs at most 64 rows and columns");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    out |= static_cast<std::uint64_t>(std::popcount(data_[i * stride_] & v) & 1) << i;
  }
  return out;
}

RankAccumulator::RankAccumulator(std::size_t cols, std::size_t memory_budget)
    : cols_(cols),
      words_((cols + 63) / 64),
      budget_(memory_budget),
      open_first_word_(words_) {}

void RankAccumulator::build_tables(std::size_t group) {
  if (tables_group_ == group) return;
  tables_.resize(8 * 256 * words_);
  for (std::size_t t = 0; t < 8; ++t) {
    std::uint64_t* table = tables_.data() + t * 256 * words_;
    std::memset(table, 0, words_ * sizeof(std::uint64_t));
    for (unsigned idx = 1; idx < 256; ++idx) {
      const unsigned low = static_cast<unsigned>(std::countr_zero(idx));
      const std::uint64_t* v = basis_.data() + (group * kGroup + t * 8 + low) * words_;
      const std::uint64_t* prev = table + (idx & (idx - 1)) * words_;
      std::uint64_t* dst = table + idx * words_;
      for (std::size_t w = 0; w < words_; ++w) dst[w] = prev[w] ^ v[w];
    }
  }
  tables_group_ = group;
}

void RankAccumulator::apply_group(std::size_t group, std::uint64_t* row) const {
  const std::uint32_t* piv = pivots_.data() + group * kGroup;
  unsigned idx[8];
  std::size_t first_word = words_;
  for (std::size_t t = 0; t < 8; ++t) {
    unsigned v = 0;
    for (std::size_t j = 0; j < 8; ++j) {
      const std::uint32_t p = piv[t * 8 + j];
      v |= static_cast<unsigned>((row[p / 64] >> (p % 64)) & 1) << j;
      first_word = std::min<std::size_t>(first_word, p / 64);
    }
    idx[t] = v;
  }
  for (std::size_t t = 0; t < 8; ++t) {
    if (idx[t] == 0) continue;
    const std::uint64_t* entry = tables_.data() + (t * 256 + idx[t]) * words_;
    for (std::size_t w = first_word; w < words_; ++w) row[w] ^= entry[w];
  }
}

void RankAccumulator::insert_row(std::uint64_t* row) {
  const std::size_t full = pivots_.size() / kGroup;
  // Back-reduction inside the open group can set bits below a vector's own
  // pivot, but never below the smallest pivot word of the group.
  for (std::size_t j = full * kGroup; j < pivots_.size(); ++j) {
    const std::uint32_t p = pivots_[j];
    if ((row[p / 64] >> (p % 64)) & 1) {
      const std::uint64_t* v = basis_.data() + j * words_;
      for (std::size_t w = open_first_word_; w < words_; ++w) row[w] ^= v[w];
    }
  }
  std::size_t w0 = 0;
  while (w0 < words_ && row[w0] == 0) ++w0;
  if (w0 == words_) return;
  const auto pivot = static_cast<std::uint32_t>(w0 * 64 + std::countr_zero(row[w0]));

  if ((pivots_.size() + 1) * words_ * sizeof(std::uint64_t) > budget_) {
    throw ResourceError("rank computation exceeds the memory budget");
  }
  basis_.insert(basis_.end(), row, row + words_);
  const std::uint64_t* fresh = basis_.data() + pivots_.size() * words_;
  // Keep the open group mutually reduced.
  for (std::size_t j = full * kGroup; j < pivots_.size(); ++j) {
    std::uint64_t* v = basis_.data() + j * words_;
    if ((v[pivot / 64] >> (pivot % 64)) & 1) {
      for (std::size_t w = w0; w < words_; ++w) v[w] ^= fresh[w];
    }
  }
  pivots_.push_back(pivot);
  open_first_word_ = std::min(open_first_word_, w0);
  if (pivots_.size() % kGroup == 0) open_first_word_ = words_;
}

void RankAccumulator::add_rows(std::span<std::uint64_t> rows, std::size_t count) {
  if (rows.size() < count * words_) throw ParameterError("row buffer too small");
  const std::size_t full_at_start = pivots_.size() / kGroup;
  for (std::size_t g = 0; g < full_at_start; ++g) {
    build_tables(g);
    for (std::size_t i = 0; i < count; ++i) apply_group(g, rows.data() + i * words_);
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t before = pivots_.size();
    insert_row(rows.data() + i * words_);
    if (pivots_.size() != before && pivots_.size() % kGroup == 0) {
      const std::size_t g = pivots_.size() / kGroup - 1;
      tables_group_ = static_cast<std::size_t>(-1);
      build_tables(g);
      for (std::size_t r = i + 1; r < count; ++r) apply_group(g, rows.data() + r * words_);
    }
  }
}

}  // namespace apnkit
