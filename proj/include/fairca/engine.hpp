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

#include "fairca/fairness.hpp"
#include "fairca/gva.hpp"
#include "fairca/instance.hpp"
#include "fairca/wdp.hpp"

namespace fairca {

struct EngineOptions {
  /// Winner-determination routine; preprocess + branch-and-bound when unset.
  SolverFn solver;
  bool preprocess = true;
  /// Re-solve exhaustively and demand an identical result whenever the
  /// instance fits under the oracle bound.
  bool oracle_cross_check = true;
};

/// Everything the settlement produced, in solver order of events.
struct EngineOutcome {
  WdpResult wdp;
  int bids_removed_by_preprocess = 0;
  bool oracle_checked = false;
  GvaPricing gva;                               // untied awards only
  std::vector<ExtendedSettlement> extended;     // by (package, bidder)
  std::vector<TieSettlement> tie_settlements;   // tied awards of the chosen allocation
};

/// Runs the full auction: preprocess, determine winners (with optional
/// exhaustive cross-check), only then open the fairness table, route tied
/// awards to equitable division and the rest through Vickrey pricing and the
/// payment-case settlement.  The sealed table is never read before the solve
/// completes.
EngineOutcome settle_auction(const AuctionInstance& instance, const EngineOptions& options = {});

}  // namespace fairca
