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

#include <utility>
#include <vector>

#include "fairca/bids.hpp"
#include "fairca/fairness_table.hpp"
#include "fairca/gva.hpp"
#include "fairca/money.hpp"
#include "fairca/types.hpp"
#include "fairca/wdp.hpp"

namespace fairca {

/// The five final-payment branches over (P, Qa, Qi) where P is the package
/// cost, Qa the auctioneer's fair value and Qi the winner's fair value:
///   A: P > Qa            -> pay P (profit gets redistributed)
///   B: P = Qa            -> pay P
///   C: P < Qa, Qi >= Qa  -> pay Qa (auctioneer recovers in full)
///   D: P < Qa, Qi <= P   -> pay P
///   E: P < Qi < Qa       -> pay Qi
enum class PaymentCase { A, B, C, D, E };

char payment_case_tag(PaymentCase c);

struct PaymentDecision {
  Money payment;
  PaymentCase tag;
};

/// Total over non-negative inputs; exactly one case fires per input.
PaymentDecision decide_payment(Money package_cost, Money auctioneer_fair, Money winner_fair);

/// Everything noteworthy that happened while carving up a profit pool.
enum class SettlementEvent {
  negative_ratio_clamped,   // a loser's fair value sat below the auctioneer's
  shares_scaled_to_pool,    // raw shares exceeded the pool and were scaled down
  fractional_total_rounded, // raw share total was not whole cents
  reward_clamped_negative,  // winner reward came out negative (surcharge)
  undistributed_residual,   // pool money left with the auctioneer
};

const char* settlement_event_name(SettlementEvent e);

struct RedistributionShare {
  BidderId bidder;
  Ratio raw_ratio;  // (Qk - Qa) / Qa before any clamping, kept for audit
  Money amount;     // >= 0
};

struct Redistribution {
  std::vector<RedistributionShare> shares;  // ascending bidder
  Money distributed;                        // = sum of share amounts
  std::vector<SettlementEvent> events;
};

/// Shares of `pool` for the losing bidders of a package: raw share is
/// pool * (Qk - Qa) / Qa, clamped below at zero; when the raw total exceeds
/// the pool every positive share scales down so exactly the pool leaves the
/// auctioneer.  Fractional-cent totals round half-up once at the total, then
/// largest-remainder across shares.  Qa must be positive.
Redistribution redistribute_profit(Money pool, Money auctioneer_fair,
                                   const std::vector<std::pair<BidderId, Money>>& loser_fairs);

/// Winner's cut of the profit as a function of how its declared fair value Qw
/// relates to the auctioneer's, r = (Qw - Qa) / Qa:
///   reward = profit * (1 - 2|r|)  when r < 0   (under-reporting doubles up)
///   reward = profit * (1 - r)     when r >= 0
/// Negative results are a surcharge added to the winner's payment.
Money winner_reward(Money profit, Money auctioneer_fair, Money winner_fair);

/// Full per-package settlement record.
struct ExtendedSettlement {
  Package package;
  BidderId winner;
  Money package_cost;     // P
  Money auctioneer_fair;  // Qa
  Money winner_fair;      // Qi
  PaymentCase case_tag;
  Money final_payment;    // the case-table value, before reward adjustments
  Money profit;           // max(0, P - Qa)
  Money loss;             // max(0, Qa - P)
  Money winner_reward;    // signed
  Money surcharge;        // max(0, -winner_reward)
  Money effective_payment;  // final_payment + surcharge
  Money winner_net;         // effective_payment - max(0, winner_reward)
  std::vector<RedistributionShare> shares;
  Money distributed;
  Money residual;  // profit kept by the auctioneer
  std::vector<SettlementEvent> events;
};

/// Settles one package given the already-computed fair values.  On a profit
/// (case A) the winner's reward is carved out first and the losers' shares
/// come out of what remains.
ExtendedSettlement settle_package(BidderId winner, Package pkg, Money package_cost,
                                  Money auctioneer_fair, Money winner_fair,
                                  const std::vector<std::pair<BidderId, Money>>& loser_fairs);

/// Settles every priced award: losers of a package are the bidders with a
/// strictly positive bid on exactly that package, excluding the winner.
/// Output ordered by (package bitmask, bidder).
std::vector<ExtendedSettlement> settle_extended(const GvaPricing& pricing,
                                                const FairnessTable& table,
                                                const BidTable& bids);

struct TieEntry {
  BidderId bidder;
  Money utility;   // tied amount minus the bidder's fair value
  Ratio fraction;  // of the package and of the payment; fractions sum to 1
  Money payment;
};

struct TieSettlement {
  Package package;
  std::vector<TieEntry> entries;  // ascending bidder
  Money total;                    // = tied amount; payments sum to this exactly
};

/// Equitable division of a tied package: fractions proportional to positive
/// utilities; bidders with non-positive utility are excluded unless everyone
/// is, in which case the split is equal.  Payments sum exactly to the tied
/// amount (largest remainder, ties to the lowest bidder index).
TieSettlement settle_tie(const TieGroup& group, const FairnessTable& table);

}  // namespace fairca
