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

// Seeded instance generators shared by the unit and acceptance suites.

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "fairca/auction_file.hpp"
#include "fairca/instance.hpp"

namespace fairca::testing {

struct GenBounds {
  int max_resources = 6;
  int max_bidders = 5;
  int max_bids = 12;
  std::int64_t max_amount_cents = 10000;  // bids in [0, $100]
  double duplicate_offer_chance = 0.2;    // copy (package, amount) to another bidder
};

inline std::int64_t rand_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline BidTable random_bid_table(std::mt19937_64& rng, int n, int m, const GenBounds& b) {
  const std::uint64_t full = Package::all(m).bits();
  std::set<std::pair<int, std::uint64_t>> used;
  std::vector<AtomicBid> bids;
  const std::int64_t distinct_pairs = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(full);
  const int target = static_cast<int>(
      std::min<std::int64_t>(rand_in(rng, 1, b.max_bids), distinct_pairs));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (static_cast<int>(bids.size()) < target) {
    int bidder = static_cast<int>(rand_in(rng, 0, n - 1));
    std::uint64_t bits = static_cast<std::uint64_t>(rand_in(rng, 1, static_cast<std::int64_t>(full)));
    Money amount = Money::from_cents(rand_in(rng, 0, b.max_amount_cents));
    if (!bids.empty() && coin(rng) < b.duplicate_offer_chance) {
      const AtomicBid& other = bids[static_cast<std::size_t>(
          rand_in(rng, 0, static_cast<std::int64_t>(bids.size()) - 1))];
      bits = other.package.bits();
      amount = other.amount;  // manufactured tie candidate
    }
    if (!used.emplace(bidder, bits).second) continue;
    bids.push_back(AtomicBid{BidderId{bidder}, Package::from_bits(bits), amount});
  }
  return BidTable(n, m, std::move(bids));
}

inline AuctionInstance random_instance(std::mt19937_64& rng, const GenBounds& b = {}) {
  const int m = static_cast<int>(rand_in(rng, 1, b.max_resources));
  const int n = static_cast<int>(rand_in(rng, 1, b.max_bidders));
  std::vector<std::vector<Money>> bidder_values(static_cast<std::size_t>(n));
  for (auto& row : bidder_values) {
    for (int j = 0; j < m; ++j) {
      row.push_back(Money::from_cents(rand_in(rng, 0, 6000)));
    }
  }
  std::vector<Money> auctioneer;
  for (int j = 0; j < m; ++j) {
    // Positive so package-level ratios are always defined.
    auctioneer.push_back(Money::from_cents(rand_in(rng, 100, 5000)));
  }
  return AuctionInstance{FairnessTable(std::move(bidder_values), std::move(auctioneer)),
                         random_bid_table(rng, n, m, b)};
}

inline ParsedAuction random_parsed_auction(std::mt19937_64& rng, const GenBounds& b = {}) {
  ParsedAuction out{random_instance(rng, b), AuctionOptions{}, "fuzz"};
  const int m = out.instance.bids.resource_count();
  const int n = out.instance.bids.bidder_count();
  for (int j = 0; j < m; ++j) out.options.resource_names.push_back("r" + std::to_string(j));
  for (int i = 0; i < n; ++i) out.options.bidder_names.push_back("b" + std::to_string(i));
  return out;
}

}  // namespace fairca::testing
