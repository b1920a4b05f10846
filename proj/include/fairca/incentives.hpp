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
#include <map>
#include <string>
#include <vector>

#include "fairca/fairness.hpp"
#include "fairca/instance.hpp"
#include "fairca/money.hpp"

namespace fairca {

/// What a sweep varies.  winner_bid sweeps the winning payment fed into the
/// settlement (the post-auction package cost); the fair-value parameters
/// rewrite the corresponding fairness-table row for the won package.
enum class SweptParameter { winner_bid, winner_fair_value, loser_fair_value };

struct SweepSpec {
  AuctionInstance base;
  SweptParameter parameter = SweptParameter::winner_bid;
  std::vector<Money> grid;  // non-empty, strictly increasing
  std::uint64_t seed = 0;
};

struct SweepRow {
  Money parameter_value;
  Money final_payment;
  Money winner_reward;
  std::vector<std::pair<BidderId, Money>> loser_shares;  // ascending bidder
  PaymentCase case_tag = PaymentCase::B;
  bool hypothesis_violation = false;  // excluded from verdicts, never dropped
  std::string note;
};

struct Verdict {
  bool pass = false;
  std::string detail;  // counterexample or summary
};

struct SweepReport {
  std::string check;
  std::uint64_t seed = 0;
  std::vector<SweepRow> rows;
  std::map<std::string, Verdict> verdicts;
  std::map<std::string, std::int64_t> counters;  // e.g. deviations evaluated

  bool all_pass() const {
    for (const auto& [name, v] : verdicts) {
      if (!v.pass) return false;
    }
    return true;
  }
};

/// Higher winning payments mean higher loser shares: sweeps the winning
/// payment over the grid and verifies each loser's share and the profit pool
/// are non-decreasing, with the higher-fair-value loser always weakly ahead.
/// Grid points where the payment drops below the auctioneer's fair value are
/// flagged as hypothesis violations.
SweepReport check_theorem1(const SweepSpec& spec);

/// Reward is maximised by declaring the auctioneer's own fair value: sweeps
/// the winner's declared fair value and verifies the reward peaks exactly at
/// Qw = Qa, stays positive strictly inside the truthful band, and is <= 0
/// once Qw reaches twice Qa.  The grid must span all three regimes.
SweepReport check_theorem2(const SweepSpec& spec);

enum class TruthfulnessMode {
  gva_only,       // utility = true value of won packages - Vickrey price
  full_pipeline,  // adds fairness payments, rewards and shares on top
};

/// Unilateral single-bid deviations over a +/- grid of offsets: with each
/// bidder's true values set to its submitted bids (gva_only) or its declared
/// fair values (full_pipeline), reports every deviation that strictly beats
/// truthful reporting.
SweepReport check_truthfulness(const AuctionInstance& instance,
                               const std::vector<Money>& deviation_offsets,
                               TruthfulnessMode mode);

/// Does the revenue-optimal allocation also maximise the winners' total fair
/// value?  Solves both objectives exhaustively and reports the two optima.
SweepReport check_efficiency(const AuctionInstance& instance);

}  // namespace fairca
