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

// The worked three-bidder, three-resource auction used across the test
// suites: a grand-bundle tie at $50 between b0 and b1, and an untied variant
// with b0's grand-bundle bid withdrawn.

#include <vector>

#include "fairca/instance.hpp"

namespace fairca::testing {

inline Money dollars(std::int64_t d) { return Money::from_cents(d * 100); }

inline FairnessTable demo_fairness() {
  return FairnessTable(
      {{dollars(5), dollars(8), dollars(8)},
       {dollars(10), dollars(2), dollars(8)},
       {dollars(10), dollars(5), dollars(10)}},
      {dollars(8), dollars(10), dollars(15)});
}

inline std::vector<AtomicBid> demo_bid_rows() {
  const Package r0 = Package::of({0});
  const Package r1 = Package::of({1});
  const Package r2 = Package::of({2});
  const Package r01 = Package::of({0, 1});
  const Package r02 = Package::of({0, 2});
  const Package r12 = Package::of({1, 2});
  const Package grand = Package::of({0, 1, 2});
  return {
      {BidderId{0}, r1, dollars(10)},   {BidderId{0}, r2, dollars(5)},
      {BidderId{0}, r01, dollars(10)},  {BidderId{0}, r02, dollars(20)},
      {BidderId{0}, r12, dollars(15)},  {BidderId{0}, grand, dollars(50)},
      {BidderId{1}, r0, dollars(10)},   {BidderId{1}, r1, dollars(5)},
      {BidderId{1}, r2, dollars(10)},   {BidderId{1}, r01, dollars(30)},
      {BidderId{1}, grand, dollars(50)},
      {BidderId{2}, r0, dollars(10)},   {BidderId{2}, r2, dollars(15)},
      {BidderId{2}, r01, dollars(20)},  {BidderId{2}, r02, dollars(30)},
      {BidderId{2}, r12, dollars(15)},  {BidderId{2}, grand, dollars(30)},
  };
}

/// The tied instance: 17 atomic bids, optimal revenue $50 shared by b0 and b1.
inline BidTable demo_bids() { return BidTable(3, 3, demo_bid_rows()); }

/// Same auction with b0's grand-bundle bid withdrawn; b1 wins outright.
inline BidTable demo_bids_untied() {
  std::vector<AtomicBid> rows = demo_bid_rows();
  const Package grand = Package::of({0, 1, 2});
  std::erase_if(rows, [&](const AtomicBid& b) {
    return b.bidder == BidderId{0} && b.package == grand;
  });
  return BidTable(3, 3, std::move(rows));
}

inline AuctionInstance demo_instance() { return {demo_fairness(), demo_bids()}; }
inline AuctionInstance demo_instance_untied() { return {demo_fairness(), demo_bids_untied()}; }

}  // namespace fairca::testing
