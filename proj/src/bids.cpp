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

#include "fairca/bids.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "fairca/errors.hpp"

namespace fairca {

BidTable::BidTable(int bidder_count, int resource_count, std::vector<AtomicBid> bids)
    : bidder_count_(bidder_count), resource_count_(resource_count), bids_(std::move(bids)) {
  if (bidder_count_ <= 0) throw ValidationError("bid table needs at least one bidder");
  if (resource_count_ <= 0 || resource_count_ > Package::max_resources) {
    throw ValidationError("bid table needs between 1 and 64 resources");
  }
  std::set<std::pair<int, std::uint64_t>> seen;
  for (std::size_t i = 0; i < bids_.size(); ++i) {
    const AtomicBid& bid = bids_[i];
    if (bid.bidder.index < 0 || bid.bidder.index >= bidder_count_) {
      throw ValidationError("bid " + std::to_string(i) + " references unknown bidder b" +
                            std::to_string(bid.bidder.index));
    }
    if (bid.package.empty()) {
      throw InvalidPackage("bid " + std::to_string(i) + " has an empty package");
    }
    if (!bid.package.fits_within(resource_count_)) {
      throw InvalidPackage("bid " + std::to_string(i) + " references resources outside the auction");
    }
    if (bid.amount.is_negative()) {
      throw ValidationError("bid " + std::to_string(i) + " has a negative amount");
    }
    if (bid.amount.cents > kMaxAmountMinorUnits) {
      throw ValidationError("bid " + std::to_string(i) + " exceeds the supported amount range");
    }
    if (!seen.emplace(bid.bidder.index, bid.package.bits()).second) {
      throw ValidationError("duplicate bid by b" + std::to_string(bid.bidder.index) +
                            " on " + bid.package.to_string());
    }
  }
}

Money BidTable::amount_of(BidderId b, Package pkg) const {
  for (const AtomicBid& bid : bids_) {
    if (bid.bidder == b && bid.package == pkg) return bid.amount;
  }
  return Money::zero();
}

std::vector<BidderId> BidTable::bidders_on(Package pkg) const {
  std::vector<BidderId> out;
  for (const AtomicBid& bid : bids_) {
    if (bid.package == pkg && bid.amount > Money::zero()) out.push_back(bid.bidder);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BidTable BidTable::without_bidder(BidderId b) const {
  std::vector<AtomicBid> kept;
  kept.reserve(bids_.size());
  for (const AtomicBid& bid : bids_) {
    if (bid.bidder != b) kept.push_back(bid);
  }
  return BidTable(bidder_count_, resource_count_, std::move(kept));
}

BidTable BidTable::with_amount(std::size_t bid_index, Money amount) const {
  std::vector<AtomicBid> copy = bids_;
  copy.at(bid_index).amount = amount;
  return BidTable(bidder_count_, resource_count_, std::move(copy));
}

}  // namespace fairca
