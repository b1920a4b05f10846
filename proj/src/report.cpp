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

#include "fairca/report.hpp"

#include <sstream>

#include "fairca/errors.hpp"

namespace fairca {

using nlohmann::json;

namespace {

json package_names(Package pkg, const AuctionOptions& opt) {
  json arr = json::array();
  for (ResourceId r : pkg.resources()) {
    arr.push_back(opt.resource_names[static_cast<std::size_t>(r.index)]);
  }
  return arr;
}

const std::string& bidder_name(BidderId b, const AuctionOptions& opt) {
  return opt.bidder_names[static_cast<std::size_t>(b.index)];
}

json allocation_to_json(const Allocation& a, const AuctionOptions& opt) {
  json awards = json::array();
  for (const Award& award : a.awards) {
    awards.push_back(json{{"bidder", bidder_name(award.bidder, opt)},
                          {"resources", package_names(award.package, opt)},
                          {"amount", award.amount.cents}});
  }
  return json{{"awards", std::move(awards)}, {"revenue", a.revenue.cents}};
}

json events_to_json(const std::vector<SettlementEvent>& events) {
  json arr = json::array();
  for (SettlementEvent e : events) arr.push_back(settlement_event_name(e));
  return arr;
}

}  // namespace

SettlementReport run_pipeline(const ParsedAuction& auction, const RunOptions& run) {
  SettlementReport report;
  report.options = auction.options;
  report.origin = auction.origin;
  report.solver_used = !run.solver.empty() ? run.solver : auction.options.solver;
  if (report.solver_used != "bnb" && report.solver_used != "oracle") {
    throw ValidationError("unknown solver \"" + report.solver_used + "\"");
  }

  EngineOptions engine;
  engine.oracle_cross_check = run.oracle_cross_check;
  if (run.solver_fn) {
    engine.solver = run.solver_fn;
    report.solver_used = "custom";
  } else if (report.solver_used == "oracle") {
    engine.solver = SolverFn(&solve_oracle);
    engine.oracle_cross_check = false;  // the primary route already is the oracle
  }
  report.outcome = settle_auction(auction.instance, engine);

  ReportTotals& t = report.totals;
  for (const ExtendedSettlement& s : report.outcome.extended) {
    t.final_payments += s.effective_payment;
    t.redistributed += s.distributed;
    t.rewards_paid += max(Money::zero(), s.winner_reward);
  }
  for (const TieSettlement& tie : report.outcome.tie_settlements) {
    for (const TieEntry& entry : tie.entries) t.final_payments += entry.payment;
  }
  t.auctioneer_receipts = t.final_payments - t.redistributed - t.rewards_paid;
  return report;
}

json wdp_to_json(const WdpResult& result, const AuctionOptions& opt,
                 const std::string& origin, const std::string& solver_used) {
  json ties = json::array();
  for (const TieGroup& group : result.ties) {
    json bidders = json::array();
    for (BidderId b : group.bidders) bidders.push_back(bidder_name(b, opt));
    ties.push_back(json{{"resources", package_names(group.package, opt)},
                        {"amount", group.amount.cents},
                        {"bidders", std::move(bidders)}});
  }
  return json{{"optimal", allocation_to_json(result.optimal, opt)},
              {"revenue", result.optimal.revenue.cents},
              {"alternates_count", result.alternates.size()},
              {"ties", std::move(ties)},
              {"meta", json{{"engine", "fairca"}, {"input", origin}, {"solver", solver_used}}}};
}

json report_to_json(const SettlementReport& report) {
  const AuctionOptions& opt = report.options;

  json gva = json::array();
  for (const GvaAward& award : report.outcome.gva.awards) {
    gva.push_back(json{{"bidder", bidder_name(award.bidder, opt)},
                       {"resources", package_names(award.package, opt)},
                       {"bid", award.bid.cents},
                       {"discount", award.discount.cents},
                       {"package_cost", award.package_cost.cents}});
  }

  json fairness = json::array();
  for (const ExtendedSettlement& s : report.outcome.extended) {
    json shares = json::array();
    for (const RedistributionShare& share : s.shares) {
      shares.push_back(json{{"bidder", bidder_name(share.bidder, opt)},
                            {"raw_ratio", share.raw_ratio.to_string()},
                            {"amount", share.amount.cents}});
    }
    fairness.push_back(json{{"resources", package_names(s.package, opt)},
                            {"winner", bidder_name(s.winner, opt)},
                            {"case", std::string(1, payment_case_tag(s.case_tag))},
                            {"package_cost", s.package_cost.cents},
                            {"auctioneer_fair", s.auctioneer_fair.cents},
                            {"winner_fair", s.winner_fair.cents},
                            {"final_payment", s.final_payment.cents},
                            {"profit", s.profit.cents},
                            {"loss", s.loss.cents},
                            {"winner_reward", s.winner_reward.cents},
                            {"surcharge", s.surcharge.cents},
                            {"effective_payment", s.effective_payment.cents},
                            {"winner_net", s.winner_net.cents},
                            {"shares", std::move(shares)},
                            {"distributed", s.distributed.cents},
                            {"residual", s.residual.cents},
                            {"events", events_to_json(s.events)}});
  }

  json ties = json::array();
  for (const TieSettlement& tie : report.outcome.tie_settlements) {
    json entries = json::array();
    for (const TieEntry& entry : tie.entries) {
      entries.push_back(json{{"bidder", bidder_name(entry.bidder, opt)},
                             {"utility", entry.utility.cents},
                             {"fraction", entry.fraction.to_string()},
                             {"payment", entry.payment.cents}});
    }
    ties.push_back(json{{"resources", package_names(tie.package, opt)},
                        {"total", tie.total.cents},
                        {"entries", std::move(entries)}});
  }

  return json{
      {"meta", json{{"engine", "fairca"},
                    {"input", report.origin},
                    {"solver", report.solver_used},
                    {"oracle_checked", report.outcome.oracle_checked},
                    {"preprocess_removed", report.outcome.bids_removed_by_preprocess},
                    {"minor_units_per_unit", opt.minor_units_per_unit}}},
      {"wdp", json{{"optimal", allocation_to_json(report.outcome.wdp.optimal, opt)},
                   {"revenue", report.outcome.wdp.optimal.revenue.cents},
                   {"alternates_count", report.outcome.wdp.alternates.size()},
                   {"ties", [&] {
                      json arr = json::array();
                      for (const TieGroup& group : report.outcome.wdp.ties) {
                        json bidders = json::array();
                        for (BidderId b : group.bidders) bidders.push_back(bidder_name(b, opt));
                        arr.push_back(json{{"resources", package_names(group.package, opt)},
                                           {"amount", group.amount.cents},
                                           {"bidders", std::move(bidders)}});
                      }
                      return arr;
                    }()}}},
      {"gva", std::move(gva)},
      {"fairness", std::move(fairness)},
      {"ties", std::move(ties)},
      {"totals", json{{"final_payments", report.totals.final_payments.cents},
                      {"redistributed", report.totals.redistributed.cents},
                      {"rewards_paid", report.totals.rewards_paid.cents},
                      {"auctioneer_receipts", report.totals.auctioneer_receipts.cents}}}};
}

namespace {

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  return quoted + "\"";
}

}  // namespace

std::string report_to_csv(const SettlementReport& report) {
  const AuctionOptions& opt = report.options;
  const std::int64_t scale = opt.minor_units_per_unit;
  std::ostringstream out;
  auto pkg_str = [&](Package pkg) {
    std::string s;
    for (ResourceId r : pkg.resources()) {
      if (!s.empty()) s += "+";
      s += opt.resource_names[static_cast<std::size_t>(r.index)];
    }
    return csv_field(s);
  };
  out << "section,package,bidder,case,minor_units,amount,detail\n";
  for (const Award& award : report.outcome.wdp.optimal.awards) {
    out << "award," << pkg_str(award.package) << "," << csv_field(bidder_name(award.bidder, opt))
        << ",," << award.amount.cents << "," << format_minor(award.amount, scale) << ",\n";
  }
  for (const GvaAward& award : report.outcome.gva.awards) {
    out << "gva," << pkg_str(award.package) << "," << csv_field(bidder_name(award.bidder, opt)) << ",,"
        << award.package_cost.cents << "," << format_minor(award.package_cost, scale)
        << ",discount=" << format_minor(award.discount, scale) << "\n";
  }
  for (const ExtendedSettlement& s : report.outcome.extended) {
    out << "payment," << pkg_str(s.package) << "," << csv_field(bidder_name(s.winner, opt)) << ","
        << payment_case_tag(s.case_tag) << "," << s.effective_payment.cents << ","
        << format_minor(s.effective_payment, scale)
        << ",reward=" << format_minor(s.winner_reward, scale) << "\n";
    for (const RedistributionShare& share : s.shares) {
      out << "share," << pkg_str(s.package) << "," << csv_field(bidder_name(share.bidder, opt)) << ",,"
          << share.amount.cents << "," << format_minor(share.amount, scale)
          << ",ratio=" << share.raw_ratio.to_string() << "\n";
    }
  }
  for (const TieSettlement& tie : report.outcome.tie_settlements) {
    for (const TieEntry& entry : tie.entries) {
      out << "tie," << pkg_str(tie.package) << "," << csv_field(bidder_name(entry.bidder, opt)) << ",,"
          << entry.payment.cents << "," << format_minor(entry.payment, scale)
          << ",fraction=" << entry.fraction.to_string() << "\n";
    }
  }
  out << "total,,,," << report.totals.auctioneer_receipts.cents << ","
      << format_minor(report.totals.auctioneer_receipts, scale) << ",auctioneer_receipts\n";
  return out.str();
}

json sweep_report_to_json(const SweepReport& report) {
  json rows = json::array();
  for (const SweepRow& row : report.rows) {
    json shares = json::array();
    for (const auto& [bidder, amount] : row.loser_shares) {
      shares.push_back(json{{"bidder", bidder.index}, {"amount", amount.cents}});
    }
    rows.push_back(json{{"parameter_value", row.parameter_value.cents},
                        {"final_payment", row.final_payment.cents},
                        {"winner_reward", row.winner_reward.cents},
                        {"loser_shares", std::move(shares)},
                        {"case", std::string(1, payment_case_tag(row.case_tag))},
                        {"hypothesis_violation", row.hypothesis_violation},
                        {"note", row.note}});
  }
  json verdicts = json::object();
  for (const auto& [name, verdict] : report.verdicts) {
    verdicts[name] = json{{"pass", verdict.pass}, {"detail", verdict.detail}};
  }
  json counters = json::object();
  for (const auto& [name, value] : report.counters) counters[name] = value;
  return json{{"check", report.check},
              {"seed", report.seed},
              {"rows", std::move(rows)},
              {"verdicts", std::move(verdicts)},
              {"counters", std::move(counters)}};
}

}  // namespace fairca
