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

#include "fairca/auction_file.hpp"

#include <fstream>
#include <map>
#include <utility>

#include "fairca/errors.hpp"

namespace fairca {

using nlohmann::json;

namespace {

const json& require(const json& doc, const std::string& key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(where + ": missing key \"" + key + "\"");
  return *it;
}

std::int64_t require_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw ParseError(where + ": expected an integer amount in minor units");
  }
  return v.get<std::int64_t>();
}

std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

// "1.25" -> 5/4, "-0.5" -> -1/2.  Exact; no exponents.
Ratio parse_decimal(const std::string& text, const std::string& where) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool digits = false, in_fraction = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (in_fraction) throw ParseError(where + ": malformed decimal \"" + text + "\"");
      in_fraction = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (in_fraction) den *= 10;
      digits = true;
    } else {
      throw ParseError(where + ": malformed decimal \"" + text + "\"");
    }
  }
  if (!digits) throw ParseError(where + ": malformed decimal \"" + text + "\"");
  return Ratio(negative ? -num : num, den);
}

Ratio parse_weight(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Ratio(v.get<std::int64_t>(), 1);
  if (v.is_string()) return parse_decimal(v.get<std::string>(), where);
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
    return Ratio(v[0].get<std::int64_t>(), v[1].get<std::int64_t>());
  }
  throw ParseError(where + ": weight must be an integer, a [num, den] pair, or a "
                           "decimal string (floats are not exact)");
}

// A cell is a direct fair value or an {"initial", "weight"} pair.
Money parse_cell(const json& v, const std::string& where) {
  if (v.is_object()) {
    Money initial = Money::from_cents(require_int(require(v, "initial", where), where));
    Ratio weight = parse_weight(require(v, "weight", where), where);
    if (weight.is_negative()) throw ValidationError(where + ": weight is negative");
    return Valuation{initial, weight}.fair();
  }
  return Money::from_cents(require_int(v, where));
}

std::vector<std::string> parse_names(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty()) {
    throw ParseError(where + ": expected a non-empty array of names");
  }
  std::vector<std::string> names;
  std::map<std::string, int> seen;
  for (const json& v : arr) {
    std::string name = require_string(v, where);
    if (!seen.emplace(name, 1).second) {
      throw ValidationError(where + ": duplicate name \"" + name + "\"");
    }
    names.push_back(std::move(name));
  }
  return names;
}

}  // namespace

ParsedAuction parse_auction_json(const json& doc, const std::string& origin) {
  if (!doc.is_object()) throw ParseError(origin + ": top level must be an object");

  AuctionOptions options;
  if (doc.contains("minor_units_per_unit")) {
    options.minor_units_per_unit = require_int(doc["minor_units_per_unit"],
                                               origin + "/minor_units_per_unit");
    std::int64_t s = options.minor_units_per_unit;
    while (s > 1 && s % 10 == 0) s /= 10;
    if (s != 1) {
      throw ValidationError(origin + ": minor_units_per_unit must be a power of ten");
    }
  }
  options.resource_names = parse_names(require(doc, "resources", origin), origin + "/resources");
  options.bidder_names = parse_names(require(doc, "bidders", origin), origin + "/bidders");
  const int m = static_cast<int>(options.resource_names.size());
  const int n = static_cast<int>(options.bidder_names.size());

  std::map<std::string, int> resource_index, bidder_index;
  for (int j = 0; j < m; ++j) resource_index[options.resource_names[static_cast<std::size_t>(j)]] = j;
  for (int i = 0; i < n; ++i) bidder_index[options.bidder_names[static_cast<std::size_t>(i)]] = i;

  const json& ft = require(doc, "fairness_table", origin);
  const json& bidder_rows = require(ft, "bidders", origin + "/fairness_table");
  const json& auctioneer_row = require(ft, "auctioneer", origin + "/fairness_table");
  if (!bidder_rows.is_array() || static_cast<int>(bidder_rows.size()) != n) {
    throw ValidationError(origin + "/fairness_table: expected " + std::to_string(n) +
                          " bidder rows");
  }
  if (!auctioneer_row.is_array() || static_cast<int>(auctioneer_row.size()) != m) {
    throw ValidationError(origin + "/fairness_table: auctioneer row needs " +
                          std::to_string(m) + " entries");
  }
  std::vector<std::vector<Money>> bidder_values;
  for (int i = 0; i < n; ++i) {
    const json& row = bidder_rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != m) {
      throw ValidationError(origin + "/fairness_table: row for " +
                            options.bidder_names[static_cast<std::size_t>(i)] + " needs " +
                            std::to_string(m) + " entries");
    }
    std::vector<Money> values;
    for (int j = 0; j < m; ++j) {
      values.push_back(parse_cell(row[static_cast<std::size_t>(j)],
                                  origin + "/fairness_table/" +
                                      options.bidder_names[static_cast<std::size_t>(i)] + "/" +
                                      options.resource_names[static_cast<std::size_t>(j)]));
    }
    bidder_values.push_back(std::move(values));
  }
  std::vector<Money> auctioneer_values;
  for (int j = 0; j < m; ++j) {
    auctioneer_values.push_back(parse_cell(auctioneer_row[static_cast<std::size_t>(j)],
                                           origin + "/fairness_table/auctioneer/" +
                                               options.resource_names[static_cast<std::size_t>(j)]));
  }

  const json& bids_doc = require(doc, "bids", origin);
  if (!bids_doc.is_array()) throw ParseError(origin + "/bids: expected an array");
  if (bids_doc.empty()) throw ValidationError(origin + "/bids: auction has no bids");
  std::vector<AtomicBid> bids;
  int position = 0;
  for (const json& b : bids_doc) {
    const std::string where = origin + "/bids[" + std::to_string(position++) + "]";
    std::string bidder_name = require_string(require(b, "bidder", where), where + "/bidder");
    auto bit = bidder_index.find(bidder_name);
    if (bit == bidder_index.end()) {
      throw ValidationError(where + ": unknown bidder \"" + bidder_name + "\"");
    }
    const json& resources = require(b, "resources", where);
    if (!resources.is_array()) throw ParseError(where + "/resources: expected an array");
    Package pkg;
    for (const json& r : resources) {
      std::string rname = require_string(r, where + "/resources");
      auto rit = resource_index.find(rname);
      if (rit == resource_index.end()) {
        throw ValidationError(where + ": unknown resource \"" + rname + "\"");
      }
      pkg = pkg.united(Package::single(ResourceId{rit->second}));
    }
    Money amount = Money::from_cents(require_int(require(b, "amount", where), where + "/amount"));
    bids.push_back(AtomicBid{BidderId{bit->second}, pkg, amount});
  }

  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) throw ParseError(origin + "/options: expected an object");
    if (o.contains("tie_policy")) {
      options.tie_policy = require_string(o["tie_policy"], origin + "/options/tie_policy");
      if (options.tie_policy != "basic-fairness") {
        throw ValidationError(origin + ": unsupported tie_policy \"" + options.tie_policy + "\"");
      }
    }
    if (o.contains("solver")) {
      options.solver = require_string(o["solver"], origin + "/options/solver");
      if (options.solver != "bnb" && options.solver != "oracle") {
        throw ValidationError(origin + ": unsupported solver \"" + options.solver + "\"");
      }
    }
  }

  return ParsedAuction{
      AuctionInstance{FairnessTable(std::move(bidder_values), std::move(auctioneer_values)),
                      BidTable(n, m, std::move(bids))},
      std::move(options), origin};
}

ParsedAuction parse_auction(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_auction_json(doc, path.string());
}

json emit_auction(const ParsedAuction& auction) {
  const AuctionOptions& opt = auction.options;
  const AuctionInstance& inst = auction.instance;

  FairnessTable table = inst.fairness;
  table.unseal();  // a local copy for emission only

  json ft_bidders = json::array();
  for (int i = 0; i < table.bidder_count(); ++i) {
    json row = json::array();
    for (int j = 0; j < table.resource_count(); ++j) {
      row.push_back(table.bidder_value(BidderId{i}, ResourceId{j}).cents);
    }
    ft_bidders.push_back(std::move(row));
  }
  json ft_auctioneer = json::array();
  for (int j = 0; j < table.resource_count(); ++j) {
    ft_auctioneer.push_back(table.auctioneer_value(ResourceId{j}).cents);
  }

  json bids = json::array();
  for (const AtomicBid& bid : inst.bids.bids()) {
    json resources = json::array();
    for (ResourceId r : bid.package.resources()) {
      resources.push_back(opt.resource_names[static_cast<std::size_t>(r.index)]);
    }
    bids.push_back(json{{"bidder", opt.bidder_names[static_cast<std::size_t>(bid.bidder.index)]},
                        {"resources", std::move(resources)},
                        {"amount", bid.amount.cents}});
  }

  return json{{"minor_units_per_unit", opt.minor_units_per_unit},
              {"resources", opt.resource_names},
              {"bidders", opt.bidder_names},
              {"fairness_table", json{{"bidders", std::move(ft_bidders)},
                                      {"auctioneer", std::move(ft_auctioneer)}}},
              {"bids", std::move(bids)},
              {"options", json{{"tie_policy", opt.tie_policy}, {"solver", opt.solver}}}};
}

}  // namespace fairca
