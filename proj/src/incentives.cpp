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

#include "fairca/incentives.hpp"

#include <sstream>

#include "fairca/engine.hpp"
#include "fairca/errors.hpp"

namespace fairca {

namespace {

void check_grid(const std::vector<Money>& grid) {
  if (grid.empty()) throw ValidationError("sweep grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) {
      throw ValidationError("sweep grid must be strictly increasing");
    }
  }
}

// One settled package pulled out of the base instance: the sweep target.
struct SettlementFixture {
  BidderId winner;
  Package package;
  Money package_cost;
  Money auctioneer_fair;
  Money winner_fair;
  std::vector<std::pair<BidderId, Money>> losers;
};

SettlementFixture derive_fixture(const AuctionInstance& base) {
  WdpResult result = solve_bnb(base.bids);
  if (!result.ties.empty()) {
    throw HypothesisViolation("sweep base instance is tied; sweeps need a unique winner");
  }
  GvaPricing pricing = price_gva(base.bids, result, SolverFn(&solve_bnb));
  if (pricing.awards.empty()) {
    throw HypothesisViolation("sweep base instance awards nothing");
  }
  const GvaAward* headline = &pricing.awards.front();
  for (const GvaAward& award : pricing.awards) {
    if (award.bid > headline->bid) headline = &award;
  }

  FairnessTable table = base.fairness;
  table.unseal();

  SettlementFixture fx;
  fx.winner = headline->bidder;
  fx.package = headline->package;
  fx.package_cost = headline->package_cost;
  fx.auctioneer_fair = auctioneer_fair_value(table, fx.package);
  fx.winner_fair = fair_value_package(table, fx.winner, fx.package);
  for (BidderId b : base.bids.bidders_on(fx.package)) {
    if (b != fx.winner) {
      fx.losers.emplace_back(b, fair_value_package(table, b, fx.package));
    }
  }
  return fx;
}

SweepRow row_from_settlement(Money parameter_value, const ExtendedSettlement& s) {
  SweepRow row;
  row.parameter_value = parameter_value;
  row.final_payment = s.final_payment;
  row.winner_reward = s.winner_reward;
  row.case_tag = s.case_tag;
  for (const RedistributionShare& share : s.shares) {
    row.loser_shares.emplace_back(share.bidder, share.amount);
  }
  return row;
}

std::string money_str(Money m) { return format_minor(m); }

}  // namespace

SweepReport check_theorem1(const SweepSpec& spec) {
  if (spec.parameter != SweptParameter::winner_bid) {
    throw ValidationError("theorem-1 sweep varies the winning payment");
  }
  check_grid(spec.grid);
  SettlementFixture fx = derive_fixture(spec.base);

  SweepReport report;
  report.check = "theorem1_monotone_rewards";
  report.seed = spec.seed;

  for (Money p : spec.grid) {
    ExtendedSettlement s = settle_package(fx.winner, fx.package, p, fx.auctioneer_fair,
                                          fx.winner_fair, fx.losers);
    SweepRow row = row_from_settlement(p, s);
    if (p < fx.auctioneer_fair) {
      row.hypothesis_violation = true;
      row.note = "payment " + money_str(p) + " below auctioneer fair value " +
                 money_str(fx.auctioneer_fair);
    }
    report.rows.push_back(std::move(row));
  }

  std::vector<const SweepRow*> valid;
  for (const SweepRow& row : report.rows) {
    if (!row.hypothesis_violation) valid.push_back(&row);
  }

  // Rows may settle outside case A (no distribution); align by bidder and
  // treat a missing entry as a zero share.
  auto share_of = [](const SweepRow& row, BidderId b) {
    for (const auto& [bidder, amount] : row.loser_shares) {
      if (bidder == b) return amount;
    }
    return Money::zero();
  };

  Verdict profit{true, ""};
  Verdict monotone{true, ""};
  Verdict ordered{true, ""};
  Money prev_profit = Money::from_cents(-1);
  std::vector<Money> prev_shares(fx.losers.size(), Money::from_cents(-1));
  bool any_positive_share = false;
  for (const SweepRow* row : valid) {
    Money phi = max(Money::zero(), row->parameter_value - fx.auctioneer_fair);
    if (prev_profit.cents >= 0 && phi < prev_profit) {
      profit.pass = false;
      profit.detail = "profit fell at payment " + money_str(row->parameter_value);
    }
    prev_profit = phi;

    for (std::size_t i = 0; i < fx.losers.size(); ++i) {
      Money share = share_of(*row, fx.losers[i].first);
      if (share > Money::zero()) any_positive_share = true;
      if (share < prev_shares[i] && prev_shares[i].cents >= 0) {
        monotone.pass = false;
        monotone.detail = "share of b" + std::to_string(fx.losers[i].first.index) +
                          " fell at payment " + money_str(row->parameter_value);
      }
      prev_shares[i] = share;
      for (std::size_t j = 0; j < fx.losers.size(); ++j) {
        if (fx.losers[i].second >= fx.losers[j].second &&
            share < share_of(*row, fx.losers[j].first)) {
          ordered.pass = false;
          ordered.detail = "b" + std::to_string(fx.losers[i].first.index) +
                           " has the higher fair value but the lower share at payment " +
                           money_str(row->parameter_value);
        }
      }
    }
  }
  if (profit.pass) profit.detail = "profit non-decreasing over " +
                                   std::to_string(valid.size()) + " grid points";
  if (monotone.pass) {
    monotone.detail = any_positive_share
                          ? "every loser share non-decreasing"
                          : "vacuously: all shares zero (no loser fair value "
                            "above the auctioneer's)";
  }
  if (ordered.pass) ordered.detail = "shares ordered by loser fair value at every point";

  report.verdicts["profit_non_decreasing"] = profit;
  report.verdicts["shares_non_decreasing"] = monotone;
  report.verdicts["shares_follow_fair_values"] = ordered;
  return report;
}

SweepReport check_theorem2(const SweepSpec& spec) {
  if (spec.parameter != SweptParameter::winner_fair_value) {
    throw ValidationError("theorem-2 sweep varies the winner's declared fair value");
  }
  check_grid(spec.grid);
  SettlementFixture fx = derive_fixture(spec.base);
  Money profit = fx.package_cost - fx.auctioneer_fair;
  if (!(profit > Money::zero())) {
    throw HypothesisViolation("base instance yields no profit; reward regimes are empty");
  }

  const Money qa = fx.auctioneer_fair;
  bool below = false, inside = false, beyond = false;
  for (Money qw : spec.grid) {
    if (qw < qa) below = true;
    else if (qw < qa * 2) inside = true;
    else beyond = true;
  }
  if (!below || !inside || !beyond) {
    throw IncompleteGrid("grid must span declared values below, at and beyond twice "
                         "the auctioneer fair value");
  }

  SweepReport report;
  report.check = "theorem2_reward_regimes";
  report.seed = spec.seed;

  Verdict peak{true, ""};
  Verdict band{true, ""};
  Verdict capped{true, ""};
  for (Money qw : spec.grid) {
    ExtendedSettlement s = settle_package(fx.winner, fx.package, fx.package_cost, qa, qw,
                                          fx.losers);
    report.rows.push_back(row_from_settlement(qw, s));
    const Money reward = s.winner_reward;

    if (reward > profit) {
      peak.pass = false;
      peak.detail = "reward " + money_str(reward) + " above the profit at Qw=" + money_str(qw);
    }
    if (qw == qa && reward != profit) {
      peak.pass = false;
      peak.detail = "truthful declaration pays " + money_str(reward) + ", not the full profit";
    }
    // Sign pattern: positive strictly between r = -1/2 and r = 1, zero at the
    // edges, non-positive outside.
    Ratio r = Ratio((qw - qa).cents, qa.cents);
    if (r > Ratio(-1, 2) && r < Ratio(1, 1) && !(reward > Money::zero())) {
      band.pass = false;
      band.detail = "reward not positive at Qw=" + money_str(qw);
    }
    if ((r == Ratio(-1, 2) || r == Ratio(1, 1)) && !reward.is_zero()) {
      band.pass = false;
      band.detail = "reward not zero at the regime edge Qw=" + money_str(qw);
    }
    if (r >= Ratio(1, 1) && reward > Money::zero()) {
      capped.pass = false;
      capped.detail = "reward positive at Qw=" + money_str(qw) + " despite r >= 1";
    }
  }
  if (peak.pass) peak.detail = "reward peaks at the truthful declaration";
  if (band.pass) band.detail = "reward positive exactly inside (-1/2, 1)";
  if (capped.pass) capped.detail = "reward <= 0 from twice the auctioneer value on";

  report.verdicts["peak_at_truthful"] = peak;
  report.verdicts["positive_in_reward_band"] = band;
  report.verdicts["non_positive_beyond_double"] = capped;
  return report;
}

namespace {

// Net outcome for one bidder under the pure Vickrey layer: value of won
// packages (at `values` amounts) minus package costs.
Money gva_outcome(const AuctionInstance& run, const BidTable& values, BidderId bidder) {
  WdpResult result = solve_bnb(run.bids);
  GvaPricing pricing = price_vcg_unchecked(run.bids, result, SolverFn(&solve_bnb));
  Money total;
  for (const GvaAward& award : pricing.awards) {
    if (award.bidder == bidder) {
      total += values.amount_of(bidder, award.package) - award.package_cost;
    }
  }
  return total;
}

// Net outcome for one bidder under the full settlement: fair-value worth of
// what it won (whole or fractional) minus what it pays, plus any shares.
Money full_outcome(const AuctionInstance& run, const FairnessTable& open_table,
                   BidderId bidder) {
  EngineOptions opts;
  opts.preprocess = false;
  opts.oracle_cross_check = false;
  EngineOutcome outcome = settle_auction(run, opts);

  Money total;
  for (const ExtendedSettlement& s : outcome.extended) {
    if (s.winner == bidder) {
      total += fair_value_package(open_table, bidder, s.package) - s.winner_net;
    }
    for (const RedistributionShare& share : s.shares) {
      if (share.bidder == bidder) total += share.amount;
    }
  }
  for (const TieSettlement& tie : outcome.tie_settlements) {
    for (const TieEntry& entry : tie.entries) {
      if (entry.bidder == bidder) {
        Money worth = fair_value_package(open_table, bidder, tie.package);
        total += round_half_up(worth * entry.fraction) - entry.payment;
      }
    }
  }
  return total;
}

}  // namespace

SweepReport check_truthfulness(const AuctionInstance& instance,
                               const std::vector<Money>& deviation_offsets,
                               TruthfulnessMode mode) {
  SweepReport report;
  report.check = mode == TruthfulnessMode::gva_only ? "truthfulness_gva"
                                                    : "truthfulness_full_pipeline";

  FairnessTable open_table = instance.fairness;
  open_table.unseal();

  auto outcome = [&](const AuctionInstance& run, BidderId b) {
    return mode == TruthfulnessMode::gva_only ? gva_outcome(run, instance.bids, b)
                                              : full_outcome(run, open_table, b);
  };

  std::vector<Money> truthful(static_cast<std::size_t>(instance.bids.bidder_count()));
  for (int b = 0; b < instance.bids.bidder_count(); ++b) {
    truthful[static_cast<std::size_t>(b)] = outcome(instance, BidderId{b});
  }

  int violations = 0;
  Money worst_gain;
  std::string first_violation;
  for (std::size_t bi = 0; bi < instance.bids.size(); ++bi) {
    const AtomicBid& bid = instance.bids[bi];
    for (Money offset : deviation_offsets) {
      if (offset.is_zero()) continue;
      Money amount = bid.amount + offset;
      if (amount.is_negative()) continue;

      AuctionInstance deviated{instance.fairness, instance.bids.with_amount(bi, amount)};
      Money gained = outcome(deviated, bid.bidder) -
                     truthful[static_cast<std::size_t>(bid.bidder.index)];

      SweepRow row;
      row.parameter_value = amount;
      row.note = "b" + std::to_string(bid.bidder.index) + " " + bid.package.to_string() +
                 " offset=" + money_str(offset) + " gain=" + money_str(gained);
      report.rows.push_back(std::move(row));

      if (gained > Money::zero()) {
        ++violations;
        if (gained > worst_gain) worst_gain = gained;
        if (first_violation.empty()) first_violation = report.rows.back().note;
      }
    }
  }

  Verdict v;
  v.pass = violations == 0;
  std::ostringstream detail;
  detail << report.rows.size() << " deviations evaluated, " << violations
         << " strictly profitable";
  if (violations > 0) {
    detail << "; first: " << first_violation << "; max gain " << money_str(worst_gain);
  }
  v.detail = detail.str();
  report.verdicts["no_profitable_deviation"] = v;
  report.counters["deviations_evaluated"] = static_cast<std::int64_t>(report.rows.size());
  report.counters["profitable_deviations"] = violations;
  return report;
}

SweepReport check_efficiency(const AuctionInstance& instance) {
  SweepReport report;
  report.check = "efficiency_fair_value_objective";

  FairnessTable open_table = instance.fairness;
  open_table.unseal();

  WdpResult by_bid = solve_oracle(instance.bids);

  std::vector<AtomicBid> fair_bids;
  fair_bids.reserve(instance.bids.size());
  for (const AtomicBid& bid : instance.bids.bids()) {
    fair_bids.push_back(AtomicBid{bid.bidder, bid.package,
                                  fair_value_package(open_table, bid.bidder, bid.package)});
  }
  BidTable fair_table(instance.bids.bidder_count(), instance.bids.resource_count(),
                      std::move(fair_bids));
  WdpResult by_fair = solve_oracle(fair_table);

  Money best_alt_fair;
  const Allocation* best_alt = &by_bid.optimal;
  for (const Allocation& alt : by_bid.alternates) {
    Money fair_sum;
    for (const Award& award : alt.awards) {
      fair_sum += fair_value_package(open_table, award.bidder, award.package);
    }
    if (fair_sum > best_alt_fair) {
      best_alt_fair = fair_sum;
      best_alt = &alt;
    }
  }

  auto describe = [](const Allocation& a) {
    std::string s;
    for (const Award& award : a.awards) {
      if (!s.empty()) s += " + ";
      s += "b" + std::to_string(award.bidder.index) + ":" + award.package.to_string() +
           "=" + format_minor(award.amount);
    }
    return s.empty() ? std::string("(nothing sold)") : s;
  };

  SweepRow revenue_row;
  revenue_row.parameter_value = by_bid.optimal.revenue;
  revenue_row.note = "revenue optimum: " + describe(by_bid.optimal) +
                     "; best fair-value total among revenue optima " +
                     money_str(best_alt_fair);
  report.rows.push_back(std::move(revenue_row));

  SweepRow fair_row;
  fair_row.parameter_value = by_fair.optimal.revenue;
  fair_row.note = "fair-value optimum: " + describe(by_fair.optimal) + "; total " +
                  money_str(by_fair.optimal.revenue);
  report.rows.push_back(std::move(fair_row));

  Verdict v;
  v.pass = best_alt_fair == by_fair.optimal.revenue;
  v.detail = "fair-value total at the revenue optimum " + money_str(best_alt_fair) +
             (v.pass ? " matches " : " falls short of ") + "the fair-value optimum " +
             money_str(by_fair.optimal.revenue) +
             (v.pass ? "" : " (" + describe(*best_alt) + " vs " +
                                describe(by_fair.optimal) + ")");
  report.verdicts["revenue_optimum_is_fair_optimum"] = v;
  return report;
}

}  // namespace fairca
