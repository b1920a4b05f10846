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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairca/instance.hpp"

namespace fairca {

/// Everything in the auction file besides the numbers: participant names,
/// the currency scale and the pipeline choices.
struct AuctionOptions {
  std::int64_t minor_units_per_unit = 100;  // power of ten
  std::vector<std::string> resource_names;
  std::vector<std::string> bidder_names;
  std::string tie_policy = "basic-fairness";
  std::string solver = "bnb";  // "bnb" or "oracle"
};

struct ParsedAuction {
  AuctionInstance instance;  // fairness table arrives sealed
  AuctionOptions options;
  std::string origin;  // file path or caller-supplied label
};

/// Reads and validates an auction definition.  All amounts are integers in
/// minor units; fairness-table cells are either a plain fair value or an
/// {"initial", "weight"} pair, with the weight given exactly as an integer,
/// an [num, den] array, or a decimal string.
ParsedAuction parse_auction(const std::filesystem::path& path);
ParsedAuction parse_auction_json(const nlohmann::json& doc, const std::string& origin);

/// Canonical self-describing form of a parsed auction; weights collapse to
/// the fair values they produced, so parse(emit(parse(f))) == parse(f).
nlohmann::json emit_auction(const ParsedAuction& auction);

}  // namespace fairca
