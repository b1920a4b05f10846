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

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fairca {

/// Zero-based ordinal into the auction's resource set.
struct ResourceId {
  int index = 0;
  friend constexpr auto operator<=>(ResourceId, ResourceId) = default;
};

/// Zero-based ordinal into the auction's bidder set.  The auctioneer is a
/// distinguished participant, never a BidderId.
struct BidderId {
  int index = 0;
  friend constexpr auto operator<=>(BidderId, BidderId) = default;
};

/// Subset of resources as a fixed-width bitmask.  Two packages conflict iff
/// their masks intersect.
class Package {
 public:
  static constexpr int max_resources = 64;

  constexpr Package() = default;
  static constexpr Package from_bits(std::uint64_t bits) { return Package(bits); }
  static constexpr Package single(ResourceId r) { return Package(std::uint64_t{1} << r.index); }
  static Package of(std::initializer_list<int> resources) {
    std::uint64_t bits = 0;
    for (int r : resources) bits |= std::uint64_t{1} << r;
    return Package(bits);
  }
  /// Full set {r_0 .. r_{m-1}}.
  static constexpr Package all(int resource_count) {
    return Package(resource_count >= max_resources ? ~std::uint64_t{0}
                                                   : (std::uint64_t{1} << resource_count) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(ResourceId r) const { return (bits_ >> r.index) & 1u; }
  constexpr bool intersects(Package o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(Package o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr Package united(Package o) const { return Package(bits_ | o.bits_); }
  constexpr bool fits_within(int resource_count) const {
    return subset_of(all(resource_count));
  }

  std::vector<ResourceId> resources() const {
    std::vector<ResourceId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(ResourceId{std::countr_zero(b)});
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (ResourceId r : resources()) {
      if (!first) s += ",";
      s += "r" + std::to_string(r.index);
      first = false;
    }
    return s + "}";
  }

  friend constexpr auto operator<=>(Package, Package) = default;

 private:
  constexpr explicit Package(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

}  // namespace fairca
