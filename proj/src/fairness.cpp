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

#include "fairca/fairness.hpp"

#include <algorithm>
#include <string>

#include "fairca/errors.hpp"

namespace fairca {

char payment_case_tag(PaymentCase c) {
  switch (c) {
    case PaymentCase::A: return 'A';
    case PaymentCase::B: return 'B';
    case PaymentCase::C: return 'C';
    case PaymentCase::D: return 'D';
    case PaymentCase::E: return 'E';
  }
  return '?';
}

const char* settlement_event_name(SettlementEvent e) {
  switch (e) {
    case SettlementEvent::negative_ratio_clamped: return "negative_ratio_clamped";
    case SettlementEvent::shares_scaled_to_pool: return "shares_scaled_to_pool";
    case SettlementEvent::fractional_total_rounded: return "fractional_total_rounded";
    case SettlementEvent::reward_clamped_negative: return "reward_clamped_negative";
    case SettlementEvent::undistributed_residual: return "undistributed_residual";
  }
  return "?";
}

PaymentDecision decide_payment(Money package_cost, Money auctioneer_fair, Money winner_fair) {
  if (package_cost.is_negative() || auctioneer_fair.is_negative() || winner_fair.is_negative()) {
    throw ValidationError("payment decision over negative amounts");
  }
  if (package_cost > auctioneer_fair) return {package_cost, PaymentCase::A};
  if (package_cost == auctioneer_fair) return {package_cost, PaymentCase::B};
  // package_cost < auctioneer_fair: the auctioneer recovers what it can.
  if (winner_fair >= auctioneer_fair) return {auctioneer_fair, PaymentCase::C};
  if (winner_fair <= package_cost) return {package_cost, PaymentCase::D};
  return {winner_fair, PaymentCase::E};
}

Redistribution redistribute_profit(Money pool, Money auctioneer_fair,
                                   const std::vector<std::pair<BidderId, Money>>& loser_fairs) {
  if (pool.is_negative()) throw ValidationError("redistribution pool is negative");
  if (auctioneer_fair <= Money::zero()) {
    throw DegenerateFairValue("auctioneer fair value must be positive to form ratios");
  }

  Redistribution out;
  std::vector<std::pair<BidderId, Money>> sorted = loser_fairs;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Ratio> raw;  // clamped raw share per loser, in cents
  raw.reserve(sorted.size());
  Ratio raw_total = Ratio::zero();
  bool clamped = false;
  for (const auto& [bidder, fair] : sorted) {
    Ratio ratio = Ratio((fair - auctioneer_fair).cents, auctioneer_fair.cents);
    out.shares.push_back(RedistributionShare{bidder, ratio, Money::zero()});
    Ratio share = Ratio::zero();
    if (ratio.is_negative()) {
      clamped = true;
    } else {
      share = pool * ratio;
    }
    raw.push_back(share);
    raw_total = raw_total + share;
  }
  if (clamped) out.events.push_back(SettlementEvent::negative_ratio_clamped);

  Money payout;
  if (pool.is_zero() || raw_total.is_zero()) {
    payout = Money::zero();
  } else if (raw_total > Ratio::of_cents(pool)) {
    payout = pool;
    out.events.push_back(SettlementEvent::shares_scaled_to_pool);
  } else {
    if (!raw_total.is_integral()) {
      out.events.push_back(SettlementEvent::fractional_total_rounded);
    }
    // raw_total <= pool here and pool is whole cents, so rounding stays within it.
    payout = round_half_up(raw_total);
  }

  std::vector<Money> amounts = apportion(payout, raw);
  for (std::size_t i = 0; i < amounts.size(); ++i) out.shares[i].amount = amounts[i];
  out.distributed = payout;
  if (payout < pool) out.events.push_back(SettlementEvent::undistributed_residual);
  return out;
}

Money winner_reward(Money profit, Money auctioneer_fair, Money winner_fair) {
  if (profit.is_negative()) throw ValidationError("winner reward over negative profit");
  if (auctioneer_fair <= Money::zero()) {
    throw DegenerateFairValue("auctioneer fair value must be positive to form ratios");
  }
  Ratio r = Ratio((winner_fair - auctioneer_fair).cents, auctioneer_fair.cents);
  Ratio one(1, 1);
  Ratio factor = r.is_negative() ? one - Ratio(2, 1) * r.abs() : one - r;
  return round_half_up(profit * factor);
}

ExtendedSettlement settle_package(BidderId winner, Package pkg, Money package_cost,
                                  Money auctioneer_fair, Money winner_fair,
                                  const std::vector<std::pair<BidderId, Money>>& loser_fairs) {
  ExtendedSettlement s;
  s.package = pkg;
  s.winner = winner;
  s.package_cost = package_cost;
  s.auctioneer_fair = auctioneer_fair;
  s.winner_fair = winner_fair;

  PaymentDecision decision = decide_payment(package_cost, auctioneer_fair, winner_fair);
  s.case_tag = decision.tag;
  s.final_payment = decision.payment;
  s.profit = max(Money::zero(), package_cost - auctioneer_fair);
  s.loss = max(Money::zero(), auctioneer_fair - package_cost);

  if (decision.tag == PaymentCase::A) {
    s.winner_reward = fairca::winner_reward(s.profit, auctioneer_fair, winner_fair);
    if (s.winner_reward.is_negative()) {
      s.events.push_back(SettlementEvent::reward_clamped_negative);
    }
    Money reward_paid = max(Money::zero(), s.winner_reward);
    Money pool = s.profit - reward_paid;
    Redistribution red = redistribute_profit(pool, auctioneer_fair, loser_fairs);
    s.shares = std::move(red.shares);
    s.distributed = red.distributed;
    s.residual = pool - red.distributed;
    s.events.insert(s.events.end(), red.events.begin(), red.events.end());
  } else {
    s.winner_reward = Money::zero();
    s.distributed = Money::zero();
    s.residual = Money::zero();
    if (auctioneer_fair > Money::zero()) {
      // Zero-amount audit rows so reports still show who bid and at what ratio.
      s.shares = redistribute_profit(Money::zero(), auctioneer_fair, loser_fairs).shares;
    }
  }

  s.surcharge = max(Money::zero(), -s.winner_reward);
  s.effective_payment = s.final_payment + s.surcharge;
  s.winner_net = s.effective_payment - max(Money::zero(), s.winner_reward);
  return s;
}

std::vector<ExtendedSettlement> settle_extended(const GvaPricing& pricing,
                                                const FairnessTable& table,
                                                const BidTable& bids) {
  std::vector<GvaAward> awards = pricing.awards;
  std::sort(awards.begin(), awards.end(), [](const GvaAward& a, const GvaAward& b) {
    if (a.package != b.package) return a.package.bits() < b.package.bits();
    return a.bidder < b.bidder;
  });

  std::vector<ExtendedSettlement> out;
  out.reserve(awards.size());
  for (const GvaAward& award : awards) {
    Money qa = auctioneer_fair_value(table, award.package);
    Money qi = fair_value_package(table, award.bidder, award.package);
    std::vector<std::pair<BidderId, Money>> losers;
    for (BidderId b : bids.bidders_on(award.package)) {
      if (b != award.bidder) {
        losers.emplace_back(b, fair_value_package(table, b, award.package));
      }
    }
    out.push_back(settle_package(award.bidder, award.package, award.package_cost, qa, qi, losers));
  }
  return out;
}

TieSettlement settle_tie(const TieGroup& group, const FairnessTable& table) {
  if (group.bidders.size() < 2) {
    throw InvalidTieGroup("tie settlement needs at least two bidders");
  }
  TieSettlement s;
  s.package = group.package;
  s.total = group.amount;

  std::vector<BidderId> bidders = group.bidders;
  std::sort(bidders.begin(), bidders.end());

  std::vector<Money> utilities;
  utilities.reserve(bidders.size());
  Money positive_total;
  for (BidderId b : bidders) {
    Money u = utility_value(group.amount, fair_value_package(table, b, group.package));
    utilities.push_back(u);
    if (u > Money::zero()) positive_total += u;
  }

  std::vector<Ratio> fractions(bidders.size());
  if (positive_total > Money::zero()) {
    // Utility-proportional; non-positive utilities drop out of the split.
    for (std::size_t i = 0; i < bidders.size(); ++i) {
      fractions[i] = utilities[i] > Money::zero()
                         ? Ratio(utilities[i].cents, positive_total.cents)
                         : Ratio::zero();
    }
  } else {
    for (auto& f : fractions) f = Ratio(1, static_cast<std::int64_t>(bidders.size()));
  }

  std::vector<Money> payments = apportion(group.amount, fractions);
  for (std::size_t i = 0; i < bidders.size(); ++i) {
    s.entries.push_back(TieEntry{bidders[i], utilities[i], fractions[i], payments[i]});
  }
  return s;
}

}  // namespace fairca
