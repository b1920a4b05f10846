#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The fairca authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <cstddef>
#include <functional>
#include <vector>

#include "fairca/bids.hpp"
#include "fairca/money.hpp"
#include "fairca/types.hpp"

namespace fairca {

struct Award {
  BidderId bidder;
  Package package;
  Money amount;

  friend auto operator<=>(const Award&, const Award&) = default;
};

/// A feasible outcome: pairwise-disjoint packages, revenue = sum of amounts.
/// bid_indices refer into the BidTable the solver ran on and are kept sorted;
/// allocations compare lexicographically by them.
struct Allocation {
  std::vector<std::size_t> bid_indices;
  std::vector<Award> awards;
  Money revenue;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// At least two bidders offered the same amount for the same package, and
/// that package is awarded in some optimal allocation.
struct TieGroup {
  Package package;
  std::vector<BidderId> bidders;  // ascending, size >= 2
  Money amount;

  friend bool operator==(const TieGroup&, const TieGroup&) = default;
};

struct WdpResult {
  Allocation optimal;                  // = alternates.front()
  std::vector<TieGroup> ties;
  std::vector<Allocation> alternates;  // every optimal allocation, lexicographic

  friend bool operator==(const WdpResult&, const WdpResult&) = default;
};

/// Resource bound for the exhaustive route; FAIRCA_ORACLE_LIMIT overrides
/// the default of 16.
int oracle_resource_limit();

/// Enumerates every feasible subset of atomic bids.  Exact by construction;
/// refuses instances above oracle_resource_limit() resources.
WdpResult solve_oracle(const BidTable& bids);

/// Depth-first search branching on the lowest unallocated resource with an
/// admissible per-resource price bound.  Exact; collects every optimal
/// allocation, so its output matches solve_oracle wherever both run.
WdpResult solve_bnb(const BidTable& bids);

/// Drops bids that can never raise revenue: bid (i, S, p) goes when some
/// other bid (j, T, q) has T subset-of S, q >= p and (T, q) != (S, p).
/// A bid sharing (package, amount) with another bid is never dropped, so
/// tie detection is unaffected.
BidTable preprocess_dominated(const BidTable& bids);

/// Tie groups over the packages awarded anywhere in `alternates`.
std::vector<TieGroup> detect_ties(const BidTable& bids,
                                  const std::vector<Allocation>& alternates);

using SolverFn = std::function<WdpResult(const BidTable&)>;

}  // namespace fairca
