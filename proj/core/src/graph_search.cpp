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

#include "graph_search.hpp"

#include <algorithm>

#include "apnkit/error.hpp"

namespace apnkit::detail {
namespace {

// Exact greedy base selection is skipped once spans get this large.
constexpr std::size_t kGreedySpanLimit = 4096;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) throw ResourceError("group order exceeds 64 bits");
  return a * b;
}

// Closure of `seeds` under the maps in `gens`; marks members in `member`.
std::vector<std::uint32_t> closure(std::vector<std::uint32_t> seeds,
                                   const std::vector<AffineMap>& gens,
                                   std::vector<std::uint8_t>& member) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : seeds) {
    if (!member[s]) {
      member[s] = 1;
      out.push_back(s);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const AffineMap& g : gens) {
      const std::uint32_t q = g(out[i]);
      if (!member[q]) {
        member[q] = 1;
        out.push_back(q);
      }
    }
  }
  return out;
}

}  // namespace

AffineSearch::AffineSearch(SearchProblem problem,
                           std::optional<std::chrono::steady_clock::time_point> deadline)
    : p_(std::move(problem)), deadline_(deadline) {
  const unsigned n = p_.dim;
  if (n == 0 || n > 24) throw ParameterError("search dimension must lie in [1, 24]");
  const std::size_t size = std::size_t{1} << n;
  if (p_.src_labels.size() != size || p_.dst_labels.size() != size) {
    throw ParameterError("label arrays must have 2^dim entries");
  }
  for (std::uint32_t q : p_.preferred) {
    if (q >= size) throw ParameterError("preferred point out of range");
  }
  for (std::uint32_t q = 0; q < size; ++q) buckets_[p_.dst_labels[q]].push_back(q);
  choose_base();
  img_.assign(size, 0);
}

void AffineSearch::choose_base() {
  const unsigned n = p_.dim;
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> pref(size, 0), in_span(size, 0);
  std::vector<std::uint32_t> preferred = p_.preferred;
  std::sort(preferred.begin(), preferred.end());
  preferred.erase(std::unique(preferred.begin(), preferred.end()), preferred.end());
  for (std::uint32_t q : preferred) pref[q] = 1;

  b0_ = (p_.linear || preferred.empty()) ? 0 : preferred.front();
  std::vector<std::uint32_t> pts{b0_};
  in_span[b0_] = 1;
  diffs_.clear();
  for (unsigned level = 1; level <= n; ++level) {
    std::optional<std::uint32_t> best;
    long best_score = -1;
    for (std::uint32_t c : preferred) {
      if (in_span[c]) continue;
      if (pts.size() > kGreedySpanLimit) {
        best = c;
        break;
      }
      const std::uint32_t d = c ^ b0_;
      long score = 0;
      for (std::uint32_t q : pts) score += pref[q ^ d];
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    if (!best) {
      for (unsigned k = 0; k < n; ++k) {
        if (!in_span[b0_ ^ (std::uint32_t{1} << k)]) {
          best = b0_ ^ (std::uint32_t{1} << k);
          break;
        }
      }
    }
    const std::uint32_t d = *best ^ b0_;
    diffs_.push_back(d);
    const std::size_t half = pts.size();
    for (std::size_t i = 0; i < half; ++i) {
      pts.push_back(pts[i] ^ d);
      in_span[pts.back()] = 1;
    }
  }
  span_labels_.resize(size);
  for (std::size_t mask = 0; mask < size; ++mask) span_labels_[mask] = p_.src_labels[pts[mask]];

  // Coordinates of each unit vector in the basis d_1..d_N.
  std::vector<std::uint32_t> rows = diffs_, tags(n);
  for (unsigned i = 0; i < n; ++i) tags[i] = std::uint32_t{1} << i;
  coords_.assign(n, 0);
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && !((rows[piv] >> col) & 1)) ++piv;
    if (piv == n) throw InternalError("base is not a basis");
    std::swap(rows[piv], rows[col]);
    std::swap(tags[piv], tags[col]);
    for (unsigned r = 0; r < n; ++r) {
      if (r != col && ((rows[r] >> col) & 1)) {
        rows[r] ^= rows[col];
        tags[r] ^= tags[col];
      }
    }
  }
  for (unsigned k = 0; k < n; ++k) coords_[k] = tags[k];
}

const std::vector<std::uint32_t>& AffineSearch::bucket(std::uint32_t label) const {
  static const std::vector<std::uint32_t> kEmpty;
  auto it = buckets_.find(label);
  return it == buckets_.end() ? kEmpty : it->second;
}

void AffineSearch::tick() {
  ++nodes_;
  if (node_budget_ != 0 && nodes_ > node_budget_) throw NodeBudgetExceeded{};
  if (deadline_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) {
    throw SearchTimeout{};
  }
}

bool AffineSearch::try_level(unsigned level, std::uint32_t image) {
  if (level == 0) {
    if (p_.dst_labels[image] != span_labels_[0]) return false;
    img_[0] = image;
    return true;
  }
  std::uint32_t diff = image ^ img_[0];
  std::uint32_t reduced = diff;
  for (std::uint32_t e : echelon_) {
    const unsigned lead = 31 - static_cast<unsigned>(__builtin_clz(e));
    if ((reduced >> lead) & 1) reduced ^= e;
  }
  if (reduced == 0) return false;
  const std::size_t half = std::size_t{1} << (level - 1);
  for (std::size_t mask = 0; mask < half; ++mask) {
    const std::uint32_t im = img_[mask] ^ diff;
    if (p_.dst_labels[im] != span_labels_[mask | half]) return false;
    img_[mask | half] = im;
  }
  echelon_.push_back(reduced);
  return true;
}

void AffineSearch::undo_level(unsigned level) {
  if (level > 0) echelon_.pop_back();
}

bool AffineSearch::extend(unsigned level) {
  if (level > p_.dim) return true;
  tick();
  const std::size_t half = std::size_t{1} << (level - 1);
  for (std::uint32_t c : bucket(span_labels_[half])) {
    if (!try_level(level, c)) continue;
    if (extend(level + 1)) return true;
    undo_level(level);
  }
  return false;
}

AffineMap AffineSearch::current_map() const {
  const unsigned n = p_.dim;
  std::vector<std::uint32_t> image_diffs(n);
  for (unsigned i = 0; i < n; ++i) image_diffs[i] = img_[std::size_t{1} << i] ^ img_[0];
  AffineMap map;
  map.columns.assign(n, 0);
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned i = 0; i < n; ++i) {
      if ((coords_[k] >> i) & 1) map.columns[k] ^= image_diffs[i];
    }
  }
  // C(0) = C(b_0) + A b_0.
  map.translation = 0;
  map.translation = img_[0] ^ map(b0_);
  return map;
}

std::uint64_t AffineSearch::count_automorphisms() {
  if (p_.src_labels != p_.dst_labels) throw ParameterError("automorphisms need equal labelings");
  const unsigned n = p_.dim;
  const std::size_t size = std::size_t{1} << n;
  const unsigned lowest = p_.linear ? 1 : 0;
  std::vector<AffineMap> gens;
  std::uint64_t order = 1;
  for (unsigned i = n + 1; i-- > lowest;) {
    const std::uint32_t point = i == 0 ? b0_ : b0_ ^ diffs_[i - 1];
    // Identity on b_0, ..., b_{i-1}.
    echelon_.clear();
    for (unsigned j = 0; j < i; ++j) {
      if (!try_level(j, j == 0 ? b0_ : b0_ ^ diffs_[j - 1])) {
        throw InternalError("identity failed the label check");
      }
    }
    const std::size_t keep = echelon_.size();
    std::vector<std::uint8_t> in_orbit(size, 0), dead(size, 0);
    std::vector<std::uint32_t> orbit = closure({point}, gens, in_orbit);
    for (std::uint32_t c : bucket(p_.src_labels[point])) {
      if (in_orbit[c] || dead[c]) continue;
      bool found = false;
      if (try_level(i, c)) {
        found = extend(i + 1);
        if (found) gens.push_back(current_map());
        echelon_.resize(keep);
      }
      if (found) {
        std::fill(in_orbit.begin(), in_orbit.end(), 0);
        orbit = closure(orbit, gens, in_orbit);
      } else {
        closure({c}, gens, dead);
      }
    }
    order = checked_mul(order, orbit.size());
  }
  return order;
}

std::optional<AffineMap> AffineSearch::find_map(
    const std::optional<std::vector<std::uint32_t>>& b0_candidates) {
  echelon_.clear();
  std::vector<std::uint32_t> starts;
  if (p_.linear) {
    starts = {0};
  } else if (b0_candidates) {
    starts = *b0_candidates;
  } else {
    starts = bucket(span_labels_[0]);
  }
  for (std::uint32_t c : starts) {
    if (!try_level(0, c)) continue;
    if (extend(1)) {
      AffineMap map = current_map();
      echelon_.clear();
      return map;
    }
  }
  return std::nullopt;
}

}  // namespace apnkit::detail
