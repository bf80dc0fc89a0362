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

// Packed-bit matrices over F_2.

#ifndef APNKIT_BIT_MATRIX_HPP_
#define APNKIT_BIT_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace apnkit {

// Row-major, each row padded to a whole number of 64-bit words. Column c of a
// row lives in bit (c % 64) of word (c / 64).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / 64] >> (c % 64)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v);
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }

  std::span<std::uint64_t> row(std::size_t r) {
    return {data_.data() + r * stride_, stride_};
  }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }

  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  BitMatrix operator*(const BitMatrix& rhs) const;

  // Matrix-vector product for matrices with at most 64 columns; bit j of v is
  // coordinate j, bit i of the result is row i.
  std::uint64_t apply(std::uint64_t v) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

// Incremental row-echelon basis over F_2 with Four-Russians reduction.
//
// Rows are fed in batches; each batch row is reduced against the basis and,
// if nonzero, becomes a new basis vector whose pivot is its lowest set bit.
// Basis vectors are grouped by 64; within a group they are mutually reduced,
// so eight 256-entry lookup tables reduce a row against a whole group in
// eight XORs. Only the basis is stored, never the full matrix.
class RankAccumulator {
 public:
  // Throws ResourceError when the basis would exceed memory_budget bytes.
  explicit RankAccumulator(std::size_t cols,
                           std::size_t memory_budget = std::size_t{3} << 30);

  std::size_t cols() const { return cols_; }
  std::size_t words() const { return words_; }
  std::size_t rank() const { return pivots_.size(); }

  // `rows` holds `count` rows of words() words each; it is used as scratch
  // and left in an unspecified state.
  void add_rows(std::span<std::uint64_t> rows, std::size_t count);

 private:
  static constexpr std::size_t kGroup = 64;

  void build_tables(std::size_t group);
  void apply_group(std::size_t group, std::uint64_t* row) const;
  void insert_row(std::uint64_t* row);

  std::size_t cols_;
  std::size_t words_;
  std::size_t budget_;
  std::size_t open_first_word_;
  std::vector<std::uint64_t> basis_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::uint64_t> tables_;
  std::size_t tables_group_ = static_cast<std::size_t>(-1);
};

}  // namespace apnkit

#endif  // APNKIT_BIT_MATRIX_HPP_
