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

#include <vector>

#include "fairca/bids.hpp"
#include "fairca/money.hpp"
#include "fairca/types.hpp"
#include "fairca/wdp.hpp"

namespace fairca {

/// One winner's price for one package: the bid less the Vickrey discount
/// share.  0 <= discount <= bid always, so package_cost <= bid.
struct GvaAward {
  BidderId bidder;
  Package package;
  Money bid;
  Money discount;
  Money package_cost;

  friend bool operator==(const GvaAward&, const GvaAward&) = default;
};

struct GvaPricing {
  std::vector<GvaAward> awards;  // ordered by (bidder, package)
  Money total_revenue;           // optimal revenue the prices were derived from
};

/// Vickrey pricing for an untied result: per winner i, the discount is
/// W* - W_-i where W_-i re-solves with all of i's bids removed, then the
/// discount is split across i's awarded packages in proportion to their bid
/// amounts (largest remainder, leftover cents toward the lowest package
/// bitmask).  Throws TieNotPriceable when `result` carries a tie group.
GvaPricing price_gva(const BidTable& bids, const WdpResult& result, const SolverFn& solver);

/// Same computation without the tie gate, pricing only the awards whose
/// package is not in `excluded_packages`.  Used where tied packages settle
/// separately and the rest of the allocation still needs prices.
GvaPricing price_vcg_unchecked(const BidTable& bids, const WdpResult& result,
                               const SolverFn& solver,
                               const std::vector<Package>& excluded_packages = {});

}  // namespace fairca
