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

#include "fairca/money.hpp"
#include "fairca/types.hpp"

namespace fairca {

/// A participant's private estimate for one resource: an initial value and a
/// non-negative desirability weight.  The fair value is weight * initial,
/// computed exactly and rounded half-up to whole cents once, here.
struct Valuation {
  Money initial_value;
  Ratio weight;  // >= 0

  Money fair() const { return round_half_up(initial_value * weight); }
};

/// Per-resource fair values declared by every bidder and by the auctioneer
/// before bidding starts.  The table is born sealed: entry reads throw until
/// unseal() is called, and unsealing cannot be reversed.  Package fair values
/// are additive over the package's resources.
class FairnessTable {
 public:
  /// Direct fair values (n x m bidder matrix plus m-vector auctioneer row).
  FairnessTable(std::vector<std::vector<Money>> bidder_values,
                std::vector<Money> auctioneer_values);

  /// Fair values derived from (initial value, weight) pairs.
  static FairnessTable from_valuations(
      const std::vector<std::vector<Valuation>>& bidder_valuations,
      const std::vector<Valuation>& auctioneer_valuations);

  int bidder_count() const { return static_cast<int>(bidder_values_.size()); }
  int resource_count() const { return static_cast<int>(auctioneer_values_.size()); }

  bool is_sealed() const { return sealed_; }
  /// One-way transition; calling on an already-open table is a no-op.
  void unseal() { sealed_ = false; }

  Money bidder_value(BidderId b, ResourceId r) const;
  Money auctioneer_value(ResourceId r) const;

 private:
  void check_open() const;

  std::vector<std::vector<Money>> bidder_values_;
  std::vector<Money> auctioneer_values_;
  bool sealed_ = true;
};

/// Sum of the bidder's per-resource fair values over the package.
Money fair_value_package(const FairnessTable& table, BidderId bidder, Package pkg);

/// Sum of the auctioneer's per-resource fair values over the package.
Money auctioneer_fair_value(const FairnessTable& table, Package pkg);

/// Utility of a package: bid minus fair value.  May be negative.
constexpr Money utility_value(Money bid, Money fair) { return bid - fair; }

}  // namespace fairca
