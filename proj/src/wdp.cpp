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

#include "fairca/wdp.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "fairca/errors.hpp"

namespace fairca {

namespace {

// Shared accumulator for both solvers: keeps every allocation that ties the
// best revenue seen so far.
class OptimaCollector {
 public:
  // Exactness bound: an instance with more revenue-tied optima than this is
  // refused outright rather than silently truncated.
  static constexpr std::size_t max_optima = 1u << 18;

  void offer(Money revenue, const std::vector<std::size_t>& picked) {
    if (best_.empty() || revenue > best_revenue_) {
      best_revenue_ = revenue;
      best_.clear();
      best_.push_back(picked);
    } else if (revenue == best_revenue_) {
      if (best_.size() >= max_optima) {
        throw SolverLimitError("more than " + std::to_string(max_optima) +
                               " revenue-tied optimal allocations");
      }
      best_.push_back(picked);
    }
  }

  Money best_revenue() const { return best_revenue_; }

  std::vector<Allocation> finish(const BidTable& bids) && {
    for (auto& indices : best_) std::sort(indices.begin(), indices.end());
    std::sort(best_.begin(), best_.end());
    best_.erase(std::unique(best_.begin(), best_.end()), best_.end());
    std::vector<Allocation> out;
    out.reserve(best_.size());
    for (auto& indices : best_) {
      Allocation a;
      a.revenue = Money::zero();
      for (std::size_t i : indices) {
        const AtomicBid& bid = bids[i];
        a.awards.push_back(Award{bid.bidder, bid.package, bid.amount});
        a.revenue += bid.amount;
      }
      a.bid_indices = std::move(indices);
      out.push_back(std::move(a));
    }
    return out;
  }

 private:
  Money best_revenue_ = Money::from_cents(-1);
  std::vector<std::vector<std::size_t>> best_;
};

WdpResult assemble(const BidTable& bids, OptimaCollector&& collector) {
  WdpResult result;
  result.alternates = std::move(collector).finish(bids);
  result.optimal = result.alternates.front();
  result.ties = detect_ties(bids, result.alternates);
  return result;
}

void check_nonempty(const BidTable& bids) {
  if (bids.empty()) throw ValidationError("winner determination needs at least one bid");
}

}  // namespace

int oracle_resource_limit() {
  if (const char* env = std::getenv("FAIRCA_ORACLE_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= Package::max_resources) {
      return static_cast<int>(v);
    }
  }
  return 16;
}

namespace {

// Include/exclude recursion over bid indices; the include branch requires
// disjointness, so leaves are exactly the feasible bid subsets.
void oracle_walk(const BidTable& bids, std::size_t idx, std::uint64_t used,
                 Money revenue, std::vector<std::size_t>& picked,
                 OptimaCollector& collector) {
  if (idx == bids.size()) {
    collector.offer(revenue, picked);
    return;
  }
  const AtomicBid& bid = bids[idx];
  if ((bid.package.bits() & used) == 0) {
    picked.push_back(idx);
    oracle_walk(bids, idx + 1, used | bid.package.bits(), revenue + bid.amount,
                picked, collector);
    picked.pop_back();
  }
  oracle_walk(bids, idx + 1, used, revenue, picked, collector);
}

}  // namespace

WdpResult solve_oracle(const BidTable& bids) {
  check_nonempty(bids);
  const int limit = oracle_resource_limit();
  if (bids.resource_count() > limit) {
    throw OracleScaleError("instance has " + std::to_string(bids.resource_count()) +
                           " resources; exhaustive bound is " + std::to_string(limit));
  }
  OptimaCollector collector;
  std::vector<std::size_t> picked;
  oracle_walk(bids, 0, 0, Money::zero(), picked, collector);
  return assemble(bids, std::move(collector));
}

namespace {

struct BnbContext {
  const BidTable& bids;
  std::vector<std::vector<std::size_t>> by_resource;  // branch order per resource
  std::vector<std::vector<Money>> unit_price;         // ceil(amount/|S|) per bid
  OptimaCollector collector;
};

// Admissible optimistic completion: for each open resource, the best
// ceil-divided per-resource price among still-compatible bids.
Money upper_bound(const BnbContext& ctx, std::uint64_t blocked) {
  Money bound;
  const int m = ctx.bids.resource_count();
  std::vector<Money> best(static_cast<std::size_t>(m), Money::zero());
  for (std::size_t i = 0; i < ctx.bids.size(); ++i) {
    const AtomicBid& bid = ctx.bids[i];
    if ((bid.package.bits() & blocked) != 0) continue;
    for (ResourceId r : bid.package.resources()) {
      Money per = ctx.unit_price[i][static_cast<std::size_t>(r.index)];
      best[static_cast<std::size_t>(r.index)] = max(best[static_cast<std::size_t>(r.index)], per);
    }
  }
  for (int r = 0; r < m; ++r) {
    if (((blocked >> r) & 1u) == 0) bound += best[static_cast<std::size_t>(r)];
  }
  return bound;
}

void bnb_walk(BnbContext& ctx, std::uint64_t blocked, Money revenue,
              std::vector<std::size_t>& picked) {
  const int m = ctx.bids.resource_count();
  int branch_resource = -1;
  for (int r = 0; r < m; ++r) {
    if (((blocked >> r) & 1u) == 0) {
      branch_resource = r;
      break;
    }
  }
  if (branch_resource < 0) {
    ctx.collector.offer(revenue, picked);
    return;
  }
  // Keep exploring at equality so every revenue-tied optimum is collected.
  if (revenue + upper_bound(ctx, blocked) < ctx.collector.best_revenue()) return;

  for (std::size_t i : ctx.by_resource[static_cast<std::size_t>(branch_resource)]) {
    const AtomicBid& bid = ctx.bids[i];
    if ((bid.package.bits() & blocked) != 0) continue;
    picked.push_back(i);
    bnb_walk(ctx, blocked | bid.package.bits(), revenue + bid.amount, picked);
    picked.pop_back();
  }
  // Free disposal: leave the resource unsold for this subtree.
  bnb_walk(ctx, blocked | (std::uint64_t{1} << branch_resource), revenue, picked);
}

}  // namespace

WdpResult solve_bnb(const BidTable& bids) {
  check_nonempty(bids);
  BnbContext ctx{bids, {}, {}, {}};
  const int m = bids.resource_count();
  ctx.by_resource.resize(static_cast<std::size_t>(m));
  ctx.unit_price.resize(bids.size());
  for (std::size_t i = 0; i < bids.size(); ++i) {
    const AtomicBid& bid = bids[i];
    const std::int64_t width = bid.package.size();
    ctx.unit_price[i].assign(static_cast<std::size_t>(m), Money::zero());
    for (ResourceId r : bid.package.resources()) {
      ctx.unit_price[i][static_cast<std::size_t>(r.index)] =
          Money::from_cents((bid.amount.cents + width - 1) / width);
      ctx.by_resource[static_cast<std::size_t>(r.index)].push_back(i);
    }
  }
  for (auto& order : ctx.by_resource) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const AtomicBid& ba = bids[a];
      const AtomicBid& bb = bids[b];
      if (ba.amount != bb.amount) return ba.amount > bb.amount;
      if (ba.bidder != bb.bidder) return ba.bidder < bb.bidder;
      if (ba.package != bb.package) return ba.package.bits() < bb.package.bits();
      return a < b;
    });
  }
  std::vector<std::size_t> picked;
  bnb_walk(ctx, 0, Money::zero(), picked);
  return assemble(bids, std::move(ctx.collector));
}

BidTable preprocess_dominated(const BidTable& bids) {
  const auto& all = bids.bids();
  auto tie_relevant = [&](std::size_t i) {
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (k != i && all[k].package == all[i].package && all[k].amount == all[i].amount) {
        return true;
      }
    }
    return false;
  };
  std::vector<AtomicBid> kept;
  kept.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    if (!tie_relevant(i)) {
      for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
        if (j == i) continue;
        const bool same_offer =
            all[j].package == all[i].package && all[j].amount == all[i].amount;
        dominated = !same_offer && all[j].package.subset_of(all[i].package) &&
                    all[j].amount >= all[i].amount;
      }
    }
    if (!dominated) kept.push_back(all[i]);
  }
  return BidTable(bids.bidder_count(), bids.resource_count(), std::move(kept));
}

std::vector<TieGroup> detect_ties(const BidTable& bids,
                                  const std::vector<Allocation>& alternates) {
  std::set<std::pair<std::uint64_t, std::int64_t>> awarded;
  for (const Allocation& alt : alternates) {
    for (const Award& award : alt.awards) {
      awarded.emplace(award.package.bits(), award.amount.cents);
    }
  }
  std::vector<TieGroup> groups;
  for (const auto& [pkg_bits, amount_cents] : awarded) {
    TieGroup group{Package::from_bits(pkg_bits), {}, Money::from_cents(amount_cents)};
    for (const AtomicBid& bid : bids.bids()) {
      if (bid.package.bits() == pkg_bits && bid.amount.cents == amount_cents) {
        group.bidders.push_back(bid.bidder);
      }
    }
    if (group.bidders.size() >= 2) {
      std::sort(group.bidders.begin(), group.bidders.end());
      groups.push_back(std::move(group));
    }
  }
  return groups;  // set iteration already orders by (package, amount)
}

}  // namespace fairca
