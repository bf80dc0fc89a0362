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

// Backtracking search for affine bijections of F_2^N that preserve a point
// labeling. Points are N-bit integers. A map is fixed by the images of an
// affine basis b_0, b_0 + d_1, ..., b_0 + d_N; after each choice the whole
// affine span of the chosen points is mapped and every label is checked.

#ifndef APNKIT_SRC_GRAPH_SEARCH_HPP_
#define APNKIT_SRC_GRAPH_SEARCH_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace apnkit::detail {

struct AffineMap {
  std::uint32_t translation = 0;
  std::vector<std::uint32_t> columns;  // image of each unit vector

  std::uint32_t operator()(std::uint32_t p) const {
    std::uint32_t r = translation;
    for (unsigned k = 0; p; ++k, p >>= 1) {
      if (p & 1) r ^= columns[k];
    }
    return r;
  }
};

struct SearchProblem {
  unsigned dim = 0;
  std::vector<std::uint32_t> src_labels;  // 2^dim entries
  std::vector<std::uint32_t> dst_labels;  // 2^dim entries
  // Points the base is drawn from first (typically the source graph).
  std::vector<std::uint32_t> preferred;
  // Fix b_0 = 0 and require C(0) = 0 (linear maps only).
  bool linear = false;
};

class SearchTimeout {};
class NodeBudgetExceeded {};

class AffineSearch {
 public:
  // deadline == nullopt means no limit; SearchTimeout is thrown when it passes.
  AffineSearch(SearchProblem problem,
               std::optional<std::chrono::steady_clock::time_point> deadline);

  // Order of the group of label-preserving maps (src and dst must agree).
  // Throws ResourceError if the order does not fit in 64 bits.
  std::uint64_t count_automorphisms();

  // Some label-preserving map from src onto dst, if one exists. When
  // b0_candidates is set, only those images of b_0 are tried.
  std::optional<AffineMap> find_map(
      const std::optional<std::vector<std::uint32_t>>& b0_candidates = std::nullopt);

  // Throw NodeBudgetExceeded after this many search nodes (0 = unlimited).
  void set_node_budget(std::uint64_t budget) { node_budget_ = budget; }
  std::uint64_t nodes() const { return nodes_; }

  const std::vector<std::uint32_t>& base_diffs() const { return diffs_; }
  std::uint32_t base_origin() const { return b0_; }

 private:
  void choose_base();
  const std::vector<std::uint32_t>& bucket(std::uint32_t label) const;
  bool try_level(unsigned level, std::uint32_t image);
  void undo_level(unsigned level);
  bool extend(unsigned level);
  AffineMap current_map() const;
  void tick();

  SearchProblem p_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint32_t b0_ = 0;
  std::vector<std::uint32_t> diffs_;        // d_1..d_N stored at [0, N)
  std::vector<std::uint32_t> span_labels_;  // label of b_0 + sum_{i in mask} d_i
  std::vector<std::uint32_t> img_;          // image of the same point
  std::vector<std::uint32_t> echelon_;      // image differences chosen so far
  std::vector<std::uint32_t> coords_;       // unit vector k = sum of d_i over bits of coords_[k]
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> buckets_;  // dst points by label
  std::uint64_t nodes_ = 0;
  std::uint64_t node_budget_ = 0;
};

}  // namespace apnkit::detail

#endif  // APNKIT_SRC_GRAPH_SEARCH_HPP_
