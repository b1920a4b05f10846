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
#include <vector>

#include "fairca/money.hpp"
#include "fairca/types.hpp"

namespace fairca {

/// One independently-acceptable package bid (OR bidding language).
struct AtomicBid {
  BidderId bidder;
  Package package;
  Money amount;

  friend auto operator<=>(const AtomicBid&, const AtomicBid&) = default;
};

/// Immutable multiset of atomic bids for an auction with a fixed bidder and
/// resource count.  A (bidder, package) pair appears at most once; pairs that
/// are absent count as a bid of zero.
class BidTable {
 public:
  BidTable(int bidder_count, int resource_count, std::vector<AtomicBid> bids);

  int bidder_count() const { return bidder_count_; }
  int resource_count() const { return resource_count_; }
  std::size_t size() const { return bids_.size(); }
  bool empty() const { return bids_.empty(); }

  const std::vector<AtomicBid>& bids() const { return bids_; }
  const AtomicBid& operator[](std::size_t i) const { return bids_[i]; }

  /// Zero when the pair holds no bid.
  Money amount_of(BidderId b, Package pkg) const;

  /// Bidders with a strictly positive bid on exactly this package, ascending.
  std::vector<BidderId> bidders_on(Package pkg) const;

  BidTable without_bidder(BidderId b) const;

  /// Copy with one bid's amount replaced (deviation harness helper).
  BidTable with_amount(std::size_t bid_index, Money amount) const;

 private:
  int bidder_count_;
  int resource_count_;
  std::vector<AtomicBid> bids_;
};

}  // namespace fairca
