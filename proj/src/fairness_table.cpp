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

#include "fairca/fairness_table.hpp"

#include <string>

#include "fairca/errors.hpp"

namespace fairca {

namespace {

void check_entry(Money v, const std::string& where) {
  if (v.is_negative()) {
    throw ValidationError("fairness table entry is negative at " + where);
  }
  if (v.cents > kMaxAmountMinorUnits) {
    throw ValidationError("fairness table entry exceeds the supported range at " + where);
  }
}

}  // namespace

FairnessTable::FairnessTable(std::vector<std::vector<Money>> bidder_values,
                             std::vector<Money> auctioneer_values)
    : bidder_values_(std::move(bidder_values)),
      auctioneer_values_(std::move(auctioneer_values)) {
  const std::size_t m = auctioneer_values_.size();
  if (m == 0 || m > Package::max_resources) {
    throw ValidationError("fairness table needs between 1 and 64 resources");
  }
  for (std::size_t j = 0; j < m; ++j) {
    check_entry(auctioneer_values_[j], "auctioneer r" + std::to_string(j));
  }
  for (std::size_t i = 0; i < bidder_values_.size(); ++i) {
    if (bidder_values_[i].size() != m) {
      throw ValidationError("fairness table row b" + std::to_string(i) +
                            " has wrong width");
    }
    for (std::size_t j = 0; j < m; ++j) {
      check_entry(bidder_values_[i][j],
                  "b" + std::to_string(i) + " r" + std::to_string(j));
    }
  }
}

FairnessTable FairnessTable::from_valuations(
    const std::vector<std::vector<Valuation>>& bidder_valuations,
    const std::vector<Valuation>& auctioneer_valuations) {
  auto fair_row = [](const std::vector<Valuation>& row) {
    std::vector<Money> out;
    out.reserve(row.size());
    for (const Valuation& v : row) {
      if (v.weight.is_negative()) throw ValidationError("valuation weight is negative");
      out.push_back(v.fair());
    }
    return out;
  };
  std::vector<std::vector<Money>> bidders;
  bidders.reserve(bidder_valuations.size());
  for (const auto& row : bidder_valuations) bidders.push_back(fair_row(row));
  return FairnessTable(std::move(bidders), fair_row(auctioneer_valuations));
}

void FairnessTable::check_open() const {
  if (sealed_) {
    throw SealedTableError("fairness table is sealed until winner determination completes");
  }
}

Money FairnessTable::bidder_value(BidderId b, ResourceId r) const {
  check_open();
  if (b.index < 0 || b.index >= bidder_count()) {
    throw ValidationError("bidder index out of range: " + std::to_string(b.index));
  }
  if (r.index < 0 || r.index >= resource_count()) {
    throw ValidationError("resource index out of range: " + std::to_string(r.index));
  }
  return bidder_values_[static_cast<std::size_t>(b.index)][static_cast<std::size_t>(r.index)];
}

Money FairnessTable::auctioneer_value(ResourceId r) const {
  check_open();
  if (r.index < 0 || r.index >= resource_count()) {
    throw ValidationError("resource index out of range: " + std::to_string(r.index));
  }
  return auctioneer_values_[static_cast<std::size_t>(r.index)];
}

namespace {

void check_package(const FairnessTable& table, Package pkg) {
  if (pkg.empty()) throw InvalidPackage("empty package has no fair value");
  if (!pkg.fits_within(table.resource_count())) {
    throw InvalidPackage("package " + pkg.to_string() + " exceeds resource set");
  }
}

}  // namespace

Money fair_value_package(const FairnessTable& table, BidderId bidder, Package pkg) {
  check_package(table, pkg);
  Money sum;
  for (ResourceId r : pkg.resources()) sum += table.bidder_value(bidder, r);
  return sum;
}

Money auctioneer_fair_value(const FairnessTable& table, Package pkg) {
  check_package(table, pkg);
  Money sum;
  for (ResourceId r : pkg.resources()) sum += table.auctioneer_value(r);
  return sum;
}

}  // namespace fairca
