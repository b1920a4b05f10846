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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairca/auction_file.hpp"
#include "fairca/errors.hpp"
#include "fairca/incentives.hpp"
#include "fairca/report.hpp"

namespace {

using nlohmann::json;

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw fairca::ValidationError("cannot write " + output_path);
  out << text;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

int run_solve(const std::string& input, const std::string& output,
              const std::string& solver, bool force_oracle) {
  fairca::ParsedAuction auction = fairca::parse_auction(input);
  std::string which = force_oracle ? "oracle" : (!solver.empty() ? solver : auction.options.solver);
  fairca::BidTable prepared = fairca::preprocess_dominated(auction.instance.bids);
  fairca::WdpResult result = which == "oracle" ? fairca::solve_oracle(prepared)
                                               : fairca::solve_bnb(prepared);
  write_output(dump(fairca::wdp_to_json(result, auction.options, auction.origin, which)), output);
  return 0;
}

int run_settle(const std::string& input, const std::string& output,
               const std::string& solver, const std::string& format) {
  fairca::ParsedAuction auction = fairca::parse_auction(input);
  fairca::RunOptions run;
  run.solver = solver;
  fairca::SettlementReport report = fairca::run_pipeline(auction, run);
  if (format == "csv") {
    write_output(fairca::report_to_csv(report), output);
  } else {
    write_output(dump(fairca::report_to_json(report)), output);
  }
  return 0;
}

int run_sweep(const std::string& input, const std::string& output,
              const std::string& check, std::uint64_t seed) {
  fairca::ParsedAuction auction = fairca::parse_auction(input);
  const fairca::AuctionInstance& base = auction.instance;

  // Grids derive from the instance: payments sweep upward from the
  // auctioneer's value, declared values sweep across every reward regime.
  auto derived_grids = [&] {
    fairca::FairnessTable open = base.fairness;
    open.unseal();
    fairca::Money qa;
    for (int j = 0; j < open.resource_count(); ++j) {
      qa += open.auctioneer_value(fairca::ResourceId{j});
    }
    if (qa.is_zero()) qa = fairca::Money::from_cents(100);
    std::vector<fairca::Money> payment_grid, declared_grid;
    for (int k = 2; k <= 30; ++k) {
      declared_grid.push_back(fairca::Money::from_cents(qa.cents * k / 10));
      if (k >= 10) payment_grid.push_back(fairca::Money::from_cents(qa.cents * k / 10));
    }
    return std::make_pair(payment_grid, declared_grid);
  }();

  json out = json::array();
  auto add = [&](const fairca::SweepReport& r) {
    out.push_back(fairca::sweep_report_to_json(r));
  };

  std::vector<fairca::Money> offsets;
  for (int d = -10; d <= 10; ++d) {
    if (d != 0) offsets.push_back(fairca::Money::from_cents(d * 100));
  }

  if (check == "theorem1" || check == "all") {
    add(fairca::check_theorem1({base, fairca::SweptParameter::winner_bid,
                                derived_grids.first, seed}));
  }
  if (check == "theorem2" || check == "all") {
    add(fairca::check_theorem2({base, fairca::SweptParameter::winner_fair_value,
                                derived_grids.second, seed}));
  }
  if (check == "truthfulness" || check == "all") {
    add(fairca::check_truthfulness(base, offsets, fairca::TruthfulnessMode::gva_only));
    add(fairca::check_truthfulness(base, offsets, fairca::TruthfulnessMode::full_pipeline));
  }
  if (check == "efficiency" || check == "all") {
    add(fairca::check_efficiency(base));
  }
  if (out.empty()) {
    throw fairca::ValidationError("unknown check \"" + check + "\"");
  }
  write_output(dump(out), output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairca: combinatorial-auction settlement engine"};
  app.require_subcommand(1);

  std::string input, output, solver, format = "json", check = "all";
  std::uint64_t seed = 0;

  auto add_io = [&](CLI::App* cmd, bool with_solver) {
    cmd->add_option("--input", input, "auction definition file")->required();
    cmd->add_option("--output", output, "output path (default stdout)");
    if (with_solver) {
      cmd->add_option("--solver", solver, "bnb or oracle")
          ->check(CLI::IsMember({"bnb", "oracle"}));
    }
  };

  CLI::App* solve = app.add_subcommand("solve", "winner determination only");
  add_io(solve, true);
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive winner determination");
  add_io(oracle, false);
  CLI::App* settle = app.add_subcommand("settle", "full settlement pipeline");
  add_io(settle, true);
  settle->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  CLI::App* sweep = app.add_subcommand("sweep", "incentive property checks");
  add_io(sweep, false);
  sweep->add_option("--check", check,
                    "theorem1, theorem2, truthfulness, efficiency or all")
      ->check(CLI::IsMember({"theorem1", "theorem2", "truthfulness", "efficiency", "all"}));
  sweep->add_option("--seed", seed, "recorded in the sweep report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(input, output, solver, false);
    if (oracle->parsed()) return run_solve(input, output, solver, true);
    if (settle->parsed()) return run_settle(input, output, solver, format);
    if (sweep->parsed()) return run_sweep(input, output, check, seed);
  } catch (const fairca::AuctionError& e) {
    std::cerr << json{{"error", json{{"type", e.name()}, {"message", e.what()}}}}.dump()
              << std::endl;
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << json{{"error", json{{"type", "internal"}, {"message", e.what()}}}}.dump()
              << std::endl;
    return 1;
  }
  return 1;
}
