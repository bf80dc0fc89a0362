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

// CCZ-invariants: Gamma-rank, automorphism group orders and a decision
// procedure for CCZ-equivalence by graph search.

#ifndef APNKIT_INVARIANTS_HPP_
#define APNKIT_INVARIANTS_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "apnkit/vbf.hpp"

namespace apnkit {

// F_2-rank of the 2^(2n) x 2^(2n) matrix with rows indexed by shifts (a, b),
// columns by points (x, y), and entry 1 iff y + b = f(x + a). Refuses n > 16;
// throws ResourceError if elimination needs more memory than allowed.
std::uint64_t gamma_rank(const Vbf& f);

enum class SearchStatus { kComplete, kTimeout };

struct SearchOptions {
  // No limit when unset.
  std::optional<std::chrono::milliseconds> timeout;
};

struct OrderResult {
  SearchStatus status = SearchStatus::kComplete;
  std::optional<std::uint64_t> order;  // empty on timeout
};

// Number of affine permutations of F_2^(2n) mapping the graph
// {(x, f(x))} onto itself.
OrderResult graph_aut_order(const Vbf& f, const SearchOptions& options = {});

// Number of pairs (A1, A2) of invertible linear maps with A2 f = f A1.
OrderResult aut_l_order(const Vbf& f, const SearchOptions& options = {});

// Fields stay empty when not computed; JSON writes them as null.
struct InvariantReport {
  std::optional<std::uint64_t> gamma_rank;
  std::optional<std::uint64_t> aut_l_order;
  std::optional<std::uint64_t> aut_ea_order;
  std::optional<std::uint64_t> aut_order;
  std::optional<bool> is_apn;
  std::optional<unsigned> algebraic_degree;
  // Set when a search ran out of time; not serialized.
  bool timed_out = false;
};

// Flat JSON object with the six fields above, in declaration order.
std::string to_json(const InvariantReport& report);

// For quadratic APN f with n >= 4: aut_l_order, aut_ea_order = 2^n aut_l_order
// and aut_order = aut_ea_order. For n <= cross_check_max_n the graph search is
// run as well and must agree (InternalError otherwise). For n < 4 the graph
// group is larger than 2^n aut_l_order, so aut_order comes from the search and
// aut_ea_order stays empty. Throws ParameterError if f is not quadratic APN.
InvariantReport aut_orders_quadratic(const Vbf& f, const SearchOptions& options = {},
                                     unsigned cross_check_max_n = 4);

struct CczOptions {
  std::optional<std::chrono::milliseconds> timeout;
  // A search capped at this many nodes runs before the Gamma-rank; it settles
  // most equivalent pairs cheaply. 0 disables the probe.
  std::uint64_t probe_nodes = std::uint64_t{1} << 20;
  // Gamma-rank is compared before the full search when n is at most this.
  unsigned gamma_rank_max_n = 8;
};

struct CczResult {
  SearchStatus status = SearchStatus::kComplete;
  std::optional<bool> equivalent;  // empty on timeout
  // What settled the answer: "identical", "differential_spectrum",
  // "point_labels", "gamma_rank", "search" or "timeout".
  std::string decided_by;
};

// Order of work: cheap invariants, a node-capped search, Gamma-rank, then the
// uncapped search for an affine permutation mapping graph(f) onto graph(g).
CczResult ccz_equivalent(const Vbf& f, const Vbf& g, const CczOptions& options = {});

}  // namespace apnkit

#endif  // APNKIT_INVARIANTS_HPP_
