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

#include <doctest.h>

#include <cstdlib>
#include <random>

#include "fairca/errors.hpp"
#include "fairca/wdp.hpp"
#include "fixtures.hpp"
#include "random_gen.hpp"

using namespace fairca;
using fairca::testing::demo_bids;
using fairca::testing::dollars;

TEST_CASE("oracle finds the $50 grand-bundle tie") {
  WdpResult r = solve_oracle(demo_bids());
  CHECK(r.optimal.revenue == dollars(50));
  CHECK(r.alternates.size() == 2);  // the two grand-bundle bids
  REQUIRE(r.ties.size() == 1);
  CHECK(r.ties[0].package == Package::of({0, 1, 2}));
  CHECK(r.ties[0].amount == dollars(50));
  REQUIRE(r.ties[0].bidders.size() == 2);
  CHECK(r.ties[0].bidders[0] == BidderId{0});
  CHECK(r.ties[0].bidders[1] == BidderId{1});
}

TEST_CASE("single bid instance") {
  BidTable bids(1, 1, {{BidderId{0}, Package::of({0}), dollars(10)}});
  WdpResult r = solve_oracle(bids);
  CHECK(r.optimal.revenue == dollars(10));
  CHECK(r.ties.empty());
  REQUIRE(r.optimal.awards.size() == 1);
  CHECK(r.optimal.awards[0].bidder == BidderId{0});
}

TEST_CASE("oracle from the demo with both $50 bids withdrawn") {
  std::vector<AtomicBid> rows = fairca::testing::demo_bid_rows();
  std::erase_if(rows, [](const AtomicBid& b) { return b.amount == dollars(50); });
  WdpResult r = solve_oracle(BidTable(3, 3, std::move(rows)));
  CHECK(r.optimal.revenue == dollars(45));  // b1:{r0,r1}=$30 + b2:{r2}=$15
  bool found_b1 = false, found_b2 = false;
  for (const Award& a : r.optimal.awards) {
    if (a.bidder == BidderId{1} && a.package == Package::of({0, 1})) found_b1 = true;
    if (a.bidder == BidderId{2} && a.package == Package::of({2})) found_b2 = true;
  }
  CHECK(found_b1);
  CHECK(found_b2);
}

TEST_CASE("branch and bound reproduces the oracle on the demo") {
  WdpResult oracle = solve_oracle(demo_bids());
  WdpResult bnb = solve_bnb(demo_bids());
  CHECK(bnb == oracle);
  CHECK(bnb.optimal.revenue == dollars(50));
  REQUIRE(bnb.ties.size() == 1);
  CHECK(bnb.ties[0].bidders.size() == 2);
}

TEST_CASE("disjoint singleton bids sum the per-resource maxima") {
  BidTable bids(2, 3,
                {{BidderId{0}, Package::of({0}), dollars(4)},
                 {BidderId{1}, Package::of({0}), dollars(6)},
                 {BidderId{0}, Package::of({1}), dollars(7)},
                 {BidderId{1}, Package::of({2}), dollars(3)}});
  CHECK(solve_bnb(bids).optimal.revenue == dollars(16));
}

TEST_CASE("solvers agree on random instances and preprocessing is safe") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    BidTable bids = fairca::testing::random_bid_table(
        rng, static_cast<int>(fairca::testing::rand_in(rng, 1, 5)),
        static_cast<int>(fairca::testing::rand_in(rng, 1, 6)), {});
    WdpResult oracle = solve_oracle(bids);
    WdpResult bnb = solve_bnb(bids);
    REQUIRE(bnb.optimal.revenue == oracle.optimal.revenue);
    CHECK(bnb == oracle);

    // Feasibility: no resource sold twice, revenue adds up.
    for (const Allocation& alt : bnb.alternates) {
      std::uint64_t used = 0;
      Money total;
      for (const Award& award : alt.awards) {
        CHECK((used & award.package.bits()) == 0);
        used |= award.package.bits();
        total += award.amount;
      }
      CHECK(total == alt.revenue);
    }

    BidTable reduced = preprocess_dominated(bids);
    CHECK(reduced.size() <= bids.size());
    CHECK(solve_oracle(reduced).optimal.revenue == oracle.optimal.revenue);

    // Determinism, including alternate ordering.
    CHECK(solve_bnb(bids) == bnb);
  }
}

TEST_CASE("dominated-bid removal") {
  SUBCASE("wider package at a lower price goes") {
    BidTable bids(2, 2,
                  {{BidderId{0}, Package::of({0, 1}), dollars(5)},
                   {BidderId{1}, Package::of({0}), dollars(8)}});
    BidTable reduced = preprocess_dominated(bids);
    REQUIRE(reduced.size() == 1);
    CHECK(reduced[0].bidder == BidderId{1});
  }
  SUBCASE("single bid stays") {
    BidTable bids(1, 2, {{BidderId{0}, Package::of({0, 1}), dollars(5)}});
    CHECK(preprocess_dominated(bids).size() == 1);
  }
  SUBCASE("demo instance keeps tie-relevant offers") {
    BidTable reduced = preprocess_dominated(demo_bids());
    CHECK(reduced.size() == 10);
    // b2's grand bundle loses to b1's {r0,r1} at the same price.
    CHECK(reduced.amount_of(BidderId{2}, Package::of({0, 1, 2})) == Money::zero());
    // The $15 {r1,r2} pair and both $50 grand bids are equal offers; all stay.
    CHECK(reduced.amount_of(BidderId{0}, Package::of({1, 2})) == dollars(15));
    CHECK(reduced.amount_of(BidderId{2}, Package::of({1, 2})) == dollars(15));
    CHECK(reduced.amount_of(BidderId{0}, Package::of({0, 1, 2})) == dollars(50));
    CHECK(reduced.amount_of(BidderId{1}, Package::of({0, 1, 2})) == dollars(50));
    CHECK(solve_oracle(reduced).optimal.revenue == dollars(50));
  }
}

TEST_CASE("oracle refuses oversized instances") {
  std::vector<AtomicBid> rows;
  for (int r = 0; r < 17; ++r) {
    rows.push_back({BidderId{0}, Package::single(ResourceId{r}), dollars(1)});
  }
  BidTable bids(1, 17, rows);
  CHECK_THROWS_AS(solve_oracle(bids), OracleScaleError);
  CHECK(solve_bnb(bids).optimal.revenue == dollars(17));

  // The environment override narrows (or widens) the bound.
  setenv("FAIRCA_ORACLE_LIMIT", "4", 1);
  BidTable small(1, 5, {{BidderId{0}, Package::of({0}), dollars(1)}});
  CHECK_THROWS_AS(solve_oracle(small), OracleScaleError);
  setenv("FAIRCA_ORACLE_LIMIT", "18", 1);
  CHECK(solve_oracle(bids).optimal.revenue == dollars(17));
  unsetenv("FAIRCA_ORACLE_LIMIT");
}

TEST_CASE("empty bid table is rejected by the solvers") {
  BidTable bids(1, 1, {});
  CHECK_THROWS_AS(solve_oracle(bids), ValidationError);
  CHECK_THROWS_AS(solve_bnb(bids), ValidationError);
}

TEST_CASE("degenerate all-zero instances hit the optima bound loudly") {
  // 24 disjoint zero bids tie 2^24 subsets at revenue zero.
  std::vector<AtomicBid> rows;
  for (int r = 0; r < 24; ++r) {
    rows.push_back({BidderId{0}, Package::single(ResourceId{r}), Money::zero()});
  }
  BidTable bids(1, 24, rows);
  CHECK_THROWS_AS(solve_bnb(bids), SolverLimitError);
  CHECK(SolverLimitError("x").exit_code() == 3);
}
