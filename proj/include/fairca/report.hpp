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

#include <string>

#include <json.hpp>

#include "fairca/auction_file.hpp"
#include "fairca/engine.hpp"
#include "fairca/incentives.hpp"

namespace fairca {

struct RunOptions {
  /// Overrides the solver named in the auction file ("bnb" or "oracle").
  std::string solver;
  /// Test hook: replaces the winner-determination routine outright.
  SolverFn solver_fn;
  bool oracle_cross_check = true;
};

struct ReportTotals {
  Money final_payments;       // effective extended payments plus tie payments
  Money redistributed;        // loser shares handed back
  Money rewards_paid;         // positive winner rewards handed back
  Money auctioneer_receipts;  // final_payments - redistributed - rewards_paid
};

/// Deterministic settlement report: same input, same bytes.  No timestamps.
struct SettlementReport {
  AuctionOptions options;
  std::string origin;
  std::string solver_used;
  EngineOutcome outcome;
  ReportTotals totals;
};

/// Full pipeline: solve (with exhaustive cross-check where feasible), unseal,
/// settle ties and priced awards, total everything up.
SettlementReport run_pipeline(const ParsedAuction& auction, const RunOptions& run = {});

nlohmann::json report_to_json(const SettlementReport& report);
std::string report_to_csv(const SettlementReport& report);

/// Winner determination only (the `solve` and `oracle` subcommands).
nlohmann::json wdp_to_json(const WdpResult& result, const AuctionOptions& options,
                           const std::string& origin, const std::string& solver_used);

nlohmann::json sweep_report_to_json(const SweepReport& report);

}  // namespace fairca
