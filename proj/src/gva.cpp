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

#include "fairca/gva.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "fairca/errors.hpp"

namespace fairca {

GvaPricing price_vcg_unchecked(const BidTable& bids, const WdpResult& result,
                               const SolverFn& solver,
                               const std::vector<Package>& excluded_packages) {
  auto excluded = [&](Package pkg) {
    return std::find(excluded_packages.begin(), excluded_packages.end(), pkg) !=
           excluded_packages.end();
  };

  // Awards to price, grouped per bidder in package-bitmask order.
  std::map<BidderId, std::vector<Award>> by_winner;
  for (const Award& award : result.optimal.awards) {
    if (!excluded(award.package)) by_winner[award.bidder].push_back(award);
  }

  GvaPricing pricing;
  pricing.total_revenue = result.optimal.revenue;
  for (auto& [bidder, awards] : by_winner) {
    std::sort(awards.begin(), awards.end(), [](const Award& a, const Award& b) {
      return a.package.bits() < b.package.bits();
    });
    BidTable others = bids.without_bidder(bidder);
    Money without = others.empty() ? Money::zero() : solver(others).optimal.revenue;
    Money discount = result.optimal.revenue - without;

    Money value;
    for (const Award& award : awards) value += award.amount;
    // The bidder's marginal contribution never exceeds its awarded value and
    // never goes negative; both follow from optimality of the two solves.
    discount = min(max(discount, Money::zero()), value);

    std::vector<Money> weights;
    weights.reserve(awards.size());
    for (const Award& award : awards) weights.push_back(award.amount);
    if (value.is_zero()) {
      weights.assign(awards.size(), Money::from_cents(1));  // zero-value edge: even split of 0
    }
    std::vector<Money> discount_parts = apportion(discount, weights);
    for (std::size_t i = 0; i < awards.size(); ++i) {
      pricing.awards.push_back(GvaAward{bidder, awards[i].package, awards[i].amount,
                                        discount_parts[i],
                                        awards[i].amount - discount_parts[i]});
    }
  }
  return pricing;
}

GvaPricing price_gva(const BidTable& bids, const WdpResult& result, const SolverFn& solver) {
  if (!result.ties.empty()) {
    throw TieNotPriceable("instance has " + std::to_string(result.ties.size()) +
                          " tie group(s); tied packages settle by equitable division");
  }
  return price_vcg_unchecked(bids, result, solver);
}

}  // namespace fairca
