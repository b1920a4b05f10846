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

#include "fairca/engine.hpp"

#include <string>

#include "fairca/errors.hpp"

namespace fairca {

EngineOutcome settle_auction(const AuctionInstance& instance, const EngineOptions& options) {
  EngineOutcome out;

  BidTable solve_table = options.preprocess ? preprocess_dominated(instance.bids)
                                            : instance.bids;
  out.bids_removed_by_preprocess =
      static_cast<int>(instance.bids.size() - solve_table.size());

  SolverFn solver = options.solver ? options.solver : SolverFn(&solve_bnb);
  out.wdp = solver(solve_table);

  if (options.oracle_cross_check &&
      solve_table.resource_count() <= oracle_resource_limit()) {
    WdpResult reference = solve_oracle(solve_table);
    if (!(out.wdp == reference)) {
      throw SolverMismatch(
          "winner determination disagrees with the exhaustive check: " +
          format_minor(out.wdp.optimal.revenue) + " vs " +
          format_minor(reference.optimal.revenue));
    }
    out.oracle_checked = true;
  }

  // Bidding is over; the fairness table may now be read.
  FairnessTable table = instance.fairness;
  table.unseal();

  // Tied awards of the chosen allocation settle by equitable division; any
  // further tie groups live only in alternate optima and stay report-only.
  std::vector<Package> tied_packages;
  for (const TieGroup& group : out.wdp.ties) {
    bool in_chosen = false;
    for (const Award& award : out.wdp.optimal.awards) {
      if (award.package == group.package && award.amount == group.amount) {
        in_chosen = true;
        break;
      }
    }
    if (in_chosen) {
      out.tie_settlements.push_back(settle_tie(group, table));
      tied_packages.push_back(group.package);
    }
  }

  // Vickrey prices run against the original bid table: a reduced solve must
  // see bids that preprocessing dropped as dominated, since the dominating
  // bidder may be the one removed.
  out.gva = price_vcg_unchecked(instance.bids, out.wdp, solver, tied_packages);
  out.extended = settle_extended(out.gva, table, instance.bids);
  return out;
}

}  // namespace fairca
