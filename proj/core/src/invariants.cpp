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

#include "apnkit/invariants.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "apnkit/bit_matrix.hpp"
#include "apnkit/error.hpp"
#include "graph_search.hpp"
#include "json.hpp"

namespace apnkit {
namespace {

constexpr unsigned kMaxSearchN = 12;
constexpr std::size_t kGammaBatchRows = 4096;
constexpr unsigned kMinFormulaN = 4;

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

Deadline make_deadline(const std::optional<std::chrono::milliseconds>& timeout) {
  if (!timeout) return std::nullopt;
  return std::chrono::steady_clock::now() + *timeout;
}

bool expired(const Deadline& deadline) {
  return deadline && std::chrono::steady_clock::now() >= *deadline;
}

void require_search_size(const Vbf& f) {
  if (f.n() == 0 || f.n() > kMaxSearchN) {
    throw ParameterError("graph search supports 1 <= n <= " + std::to_string(kMaxSearchN));
  }
}

std::uint32_t graph_point(const Vbf& f, std::uint32_t x) { return x | (f(x) << f.n()); }

void walsh_hadamard(std::vector<std::int64_t>& v) {
  for (std::size_t len = 1; len < v.size(); len <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += 2 * len) {
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

// Per point p of F_2^(2n): graph membership, the number of 3-subsets of the
// graph summing to p (affine invariant) and, for linear labels, the number of
// 2-subsets summing to p plus the coordinate-subspace flags.
using LabelKey = std::array<std::uint64_t, 6>;

std::vector<LabelKey> point_keys(const Vbf& f, bool linear) {
  const unsigned n = f.n();
  const std::size_t size = std::size_t{1} << (2 * n);
  std::vector<std::int64_t> ind(size, 0);
  for (std::uint32_t x = 0; x < f.size(); ++x) ind[graph_point(f, x)] = 1;
  std::vector<std::int64_t> spec = ind;
  walsh_hadamard(spec);
  std::vector<std::int64_t> cube(size), square(size);
  for (std::size_t i = 0; i < size; ++i) {
    cube[i] = spec[i] * spec[i] * spec[i];
    square[i] = spec[i] * spec[i];
  }
  walsh_hadamard(cube);
  walsh_hadamard(square);
  const auto g = static_cast<std::int64_t>(f.size());
  const std::uint32_t low_mask = (std::uint32_t{1} << n) - 1;
  std::vector<LabelKey> keys(size);
  for (std::size_t p = 0; p < size; ++p) {
    const std::int64_t ordered = cube[p] / static_cast<std::int64_t>(size);
    const std::int64_t degenerate = ind[p] ? 3 * g - 2 : 0;
    const auto r3 = static_cast<std::uint64_t>((ordered - degenerate) / 6);
    LabelKey key{static_cast<std::uint64_t>(ind[p]), r3, 0, 0, 0, 0};
    if (linear) {
      const std::int64_t pairs = square[p] / static_cast<std::int64_t>(size);
      key[2] = p == 0 ? 0 : static_cast<std::uint64_t>(pairs / 2);
      key[3] = (p & low_mask) == 0;
      key[4] = (p >> n) == 0;
      key[5] = p == 0;
    }
    keys[p] = key;
  }
  return keys;
}

class Labeler {
 public:
  std::vector<std::uint32_t> assign(const std::vector<LabelKey>& keys) {
    std::vector<std::uint32_t> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      auto [it, inserted] = ids_.try_emplace(keys[i], static_cast<std::uint32_t>(ids_.size()));
      out[i] = it->second;
    }
    return out;
  }

 private:
  std::map<LabelKey, std::uint32_t> ids_;
};

std::vector<std::uint32_t> graph_points(const Vbf& f, bool skip_origin) {
  std::vector<std::uint32_t> pts;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const std::uint32_t p = graph_point(f, x);
    if (!(skip_origin && p == 0)) pts.push_back(p);
  }
  return pts;
}

OrderResult count_with(detail::SearchProblem problem, const Deadline& deadline) {
  if (expired(deadline)) return OrderResult{SearchStatus::kTimeout, std::nullopt};
  try {
    detail::AffineSearch search(std::move(problem), deadline);
    return OrderResult{SearchStatus::kComplete, search.count_automorphisms()};
  } catch (const detail::SearchTimeout&) {
    return OrderResult{SearchStatus::kTimeout, std::nullopt};
  }
}

std::vector<std::uint64_t> histogram(const std::vector<std::uint32_t>& labels) {
  std::vector<std::uint64_t> h;
  for (std::uint32_t l : labels) {
    if (l >= h.size()) h.resize(l + 1, 0);
    ++h[l];
  }
  return h;
}

std::uint64_t gamma_rank_until(const Vbf& f, const Deadline& deadline) {
  const unsigned n = f.n();
  if (n > 16) throw ParameterError("gamma_rank requires n <= 16");
  const std::size_t dim = std::size_t{1} << (2 * n);
  RankAccumulator acc(dim);
  const std::size_t words = acc.words();
  const std::size_t batch = std::min(kGammaBatchRows, dim);
  std::vector<std::uint64_t> rows(batch * words);
  std::size_t filled = 0;
  for (std::uint64_t r = 0; r < dim; ++r) {
    const std::uint32_t a = static_cast<std::uint32_t>(r >> n);
    const std::uint32_t b = static_cast<std::uint32_t>(r & ((std::uint64_t{1} << n) - 1));
    std::uint64_t* row = rows.data() + filled * words;
    std::fill(row, row + words, 0);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      const std::uint64_t col = (std::uint64_t{x} << n) | (f(x ^ a) ^ b);
      row[col / 64] |= std::uint64_t{1} << (col % 64);
    }
    if (++filled == batch) {
      acc.add_rows(rows, filled);
      filled = 0;
      if (expired(deadline)) throw detail::SearchTimeout{};
    }
  }
  if (filled) acc.add_rows(rows, filled);
  return acc.rank();
}

}  // namespace

std::uint64_t gamma_rank(const Vbf& f) { return gamma_rank_until(f, std::nullopt); }

OrderResult graph_aut_order(const Vbf& f, const SearchOptions& options) {
  require_search_size(f);
  const Deadline deadline = make_deadline(options.timeout);
  Labeler labeler;
  auto labels = labeler.assign(point_keys(f, false));
  detail::SearchProblem problem{2 * f.n(), labels, labels, graph_points(f, false), false};
  return count_with(std::move(problem), deadline);
}

OrderResult aut_l_order(const Vbf& f, const SearchOptions& options) {
  require_search_size(f);
  const Deadline deadline = make_deadline(options.timeout);
  Labeler labeler;
  auto labels = labeler.assign(point_keys(f, true));
  detail::SearchProblem problem{2 * f.n(), labels, labels, graph_points(f, true), true};
  return count_with(std::move(problem), deadline);
}

std::string to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  auto put = [&](const char* name, const auto& v) {
    if (v) {
      j[name] = *v;
    } else {
      j[name] = nullptr;
    }
  };
  put("gamma_rank", r.gamma_rank);
  put("aut_l_order", r.aut_l_order);
  put("aut_ea_order", r.aut_ea_order);
  put("aut_order", r.aut_order);
  put("is_apn", r.is_apn);
  put("algebraic_degree", r.algebraic_degree);
  return j.dump();
}

InvariantReport aut_orders_quadratic(const Vbf& f, const SearchOptions& options,
                                     unsigned cross_check_max_n) {
  InvariantReport report;
  report.algebraic_degree = algebraic_degree(f);
  report.is_apn = is_apn(f);
  if (*report.algebraic_degree != 2 || !*report.is_apn) {
    throw ParameterError("automorphism formulas require a quadratic APN function");
  }
  const OrderResult lin = aut_l_order(f, options);
  if (lin.status == SearchStatus::kTimeout) {
    report.timed_out = true;
    return report;
  }
  report.aut_l_order = lin.order;
  if (f.n() < kMinFormulaN) {
    // The graph group is strictly larger here; only the search is exact.
    const OrderResult full = graph_aut_order(f, options);
    report.aut_order = full.order;
    report.timed_out = full.status == SearchStatus::kTimeout;
    return report;
  }
  const std::uint64_t translations = std::uint64_t{1} << f.n();
  if (*lin.order > UINT64_MAX / translations) throw ResourceError("group order exceeds 64 bits");
  report.aut_ea_order = *lin.order * translations;
  report.aut_order = report.aut_ea_order;
  if (f.n() <= cross_check_max_n) {
    const OrderResult full = graph_aut_order(f, options);
    if (full.status == SearchStatus::kTimeout) {
      report.timed_out = true;
    } else if (full.order != report.aut_order) {
      throw InternalError("graph automorphism count disagrees with 2^n |Aut_L|");
    }
  }
  return report;
}

CczResult ccz_equivalent(const Vbf& f, const Vbf& g, const CczOptions& options) {
  if (f.n() != g.n()) throw ParameterError("functions have different dimensions");
  require_search_size(f);
  auto settled = [](bool eq, const char* why) {
    return CczResult{SearchStatus::kComplete, eq, why};
  };
  if (f == g) return settled(true, "identical");
  if (differential_spectrum(f).counts != differential_spectrum(g).counts) {
    return settled(false, "differential_spectrum");
  }
  const Deadline deadline = make_deadline(options.timeout);
  Labeler labeler;
  auto lf = labeler.assign(point_keys(f, false));
  auto lg = labeler.assign(point_keys(g, false));
  auto hf = histogram(lf), hg = histogram(lg);
  hf.resize(std::max(hf.size(), hg.size()), 0);
  hg.resize(hf.size(), 0);
  if (hf != hg) return settled(false, "point_labels");
  std::vector<std::uint8_t> in_g(std::size_t{1} << (2 * g.n()), 0);
  for (std::uint32_t x = 0; x < g.size(); ++x) in_g[graph_point(g, x)] = 1;
  auto checked = [&](const std::optional<detail::AffineMap>& map) {
    if (map) {
      for (std::uint32_t x = 0; x < f.size(); ++x) {
        if (!in_g[(*map)(graph_point(f, x))]) throw InternalError("search returned a non-map");
      }
    }
    return settled(map.has_value(), "search");
  };
  try {
    detail::SearchProblem problem{2 * f.n(), std::move(lf), std::move(lg), graph_points(f, false),
                                  false};
    if (expired(deadline)) throw detail::SearchTimeout{};
    detail::AffineSearch search(std::move(problem), deadline);
    if (options.probe_nodes != 0) {
      search.set_node_budget(options.probe_nodes);
      try {
        return checked(search.find_map());
      } catch (const detail::NodeBudgetExceeded&) {
        search.set_node_budget(0);
      }
    }
    if (f.n() <= options.gamma_rank_max_n &&
        gamma_rank_until(f, deadline) != gamma_rank_until(g, deadline)) {
      return settled(false, "gamma_rank");
    }
    return checked(search.find_map());
  } catch (const detail::SearchTimeout&) {
    return CczResult{SearchStatus::kTimeout, std::nullopt, "timeout"};
  }
}

}  // namespace apnkit
