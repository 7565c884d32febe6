#include "auctionlab/sequential.hpp"

#include <algorithm>
#include <string>

#include "auctionlab/error.hpp"

namespace auctionlab {

namespace {

struct Branch {
  Rational probability;
  std::vector<Rational> budgets;
  std::vector<int> wins;
  std::vector<Rational> paid;
  std::vector<RoundRecord> history;
};

std::vector<std::optional<Rational>> collect_bids(std::span<const Strategy> strategies,
                                                  const Branch& state, int round, int n,
                                                  RngStream& rng) {
  const int k = static_cast<int>(strategies.size());
  std::vector<std::optional<Rational>> bids(strategies.size());
  for (std::size_t j = 0; j < strategies.size(); ++j) {
    SequentialView view{round, n, k, j, state.budgets, state.wins, state.history};
    bids[j] = strategies[j].decide(view, rng);
    if (!bids[j]) continue;
    if (sgn(*bids[j]) <= 0) {
      throw AuctionError(ErrorCode::kStrategyViolation,
                         strategies[j].name + " placed a non-positive bid");
    }
    if (*bids[j] > state.budgets[j]) {
      throw AuctionError(ErrorCode::kStrategyViolation,
                         strategies[j].name + " bid above its remaining budget");
    }
  }
  return bids;
}

std::vector<std::size_t> top_bidders(const std::vector<std::optional<Rational>>& bids) {
  std::vector<std::size_t> top;
  for (std::size_t j = 0; j < bids.size(); ++j) {
    if (!bids[j]) continue;
    if (top.empty() || *bids[j] > *bids[top.front()]) {
      top.assign(1, j);
    } else if (*bids[j] == *bids[top.front()]) {
      top.push_back(j);
    }
  }
  return top;
}

Branch initial_state(std::size_t k) {
  return Branch{Rational(1), std::vector<Rational>(k, Rational(1)), std::vector<int>(k, 0),
                std::vector<Rational>(k, Rational(0)), {}};
}

void award(Branch& b, std::size_t winner, const Rational& price) {
  b.budgets[winner] -= price;
  b.paid[winner] += price;
  b.wins[winner] += 1;
  b.history.push_back(RoundRecord{winner, price});
}

void require_strategies(std::span<const Strategy> strategies, int n) {
  if (strategies.empty()) throw AuctionError(ErrorCode::kDomainError, "no bidders");
  if (n < 1) throw AuctionError(ErrorCode::kDomainError, "need at least one object");
}

}  // namespace

Strategy steady_strategy(int n, int k) {
  if (k < 2 || n < k) throw AuctionError(ErrorCode::kDomainError, "need n >= k >= 2");
  if (n % k != 0) {
    throw AuctionError(ErrorCode::kNotMultiple,
                       std::to_string(k) + " does not divide " + std::to_string(n));
  }
  Rational bid = make_rational(k, n);
  return Strategy{"steady", true,
                  [bid](const SequentialView& view, RngStream&) -> std::optional<Rational> {
                    if (view.budget() >= bid) return bid;
                    return std::nullopt;
                  }};
}

Strategy scheduled_strategy(std::vector<Rational> schedule, std::string name) {
  return Strategy{std::move(name), true,
                  [schedule = std::move(schedule)](const SequentialView& view,
                                                   RngStream&) -> std::optional<Rational> {
                    const std::size_t r = static_cast<std::size_t>(view.round - 1);
                    if (r >= schedule.size() || sgn(schedule[r]) <= 0) return std::nullopt;
                    if (sgn(view.budget()) <= 0) return std::nullopt;
                    return std::min(schedule[r], view.budget());
                  }};
}

Strategy random_strategy(int n, int k) {
  if (k < 2 || n < k) throw AuctionError(ErrorCode::kDomainError, "need n >= k >= 2");
  Rational steady = make_rational(k, n);
  return Strategy{"random", false,
                  [steady](const SequentialView& view, RngStream& rng) -> std::optional<Rational> {
                    const Rational& budget = view.budget();
                    if (sgn(budget) <= 0) return std::nullopt;
                    switch (rng.below(4)) {
                      case 0: return std::nullopt;
                      case 1: return budget;
                      case 2: return std::min(steady, budget);
                      default:
                        return budget * make_rational(static_cast<long>(1 + rng.below(8)), 8);
                    }
                  }};
}

SequentialResult run_sequential(std::span<const Strategy> strategies, int n, std::uint64_t seed) {
  require_strategies(strategies, n);
  const bool all_deterministic = std::all_of(strategies.begin(), strategies.end(),
                                             [](const Strategy& s) { return s.deterministic; });
  RngStream rng(seed, 0);
  if (!all_deterministic) return run_sequential_sampled(strategies, n, rng);

  const std::size_t k = strategies.size();
  std::vector<Branch> frontier{initial_state(k)};
  for (int round = 1; round <= n; ++round) {
    std::vector<Branch> next;
    next.reserve(frontier.size());
    for (Branch& state : frontier) {
      const auto bids = collect_bids(strategies, state, round, n, rng);
      const auto top = top_bidders(bids);
      if (top.empty()) {
        state.history.push_back(RoundRecord{std::nullopt, Rational(0)});
        next.push_back(std::move(state));
        continue;
      }
      const Rational share = state.probability / static_cast<long>(top.size());
      for (std::size_t w : top) {
        Branch b = state;
        b.probability = share;
        award(b, w, *bids[w]);
        next.push_back(std::move(b));
      }
    }
    frontier = std::move(next);
  }

  SequentialResult result;
  result.exact = true;
  result.wins.assign(k, Rational(0));
  result.payments.assign(k, Rational(0));
  for (const Branch& b : frontier) {
    for (std::size_t j = 0; j < k; ++j) {
      result.wins[j] += b.probability * b.wins[j];
      result.payments[j] += b.probability * b.paid[j];
    }
  }
  return result;
}

SequentialResult run_sequential_sampled(std::span<const Strategy> strategies, int n,
                                        RngStream& rng) {
  require_strategies(strategies, n);
  const std::size_t k = strategies.size();
  Branch state = initial_state(k);
  for (int round = 1; round <= n; ++round) {
    const auto bids = collect_bids(strategies, state, round, n, rng);
    const auto top = top_bidders(bids);
    if (top.empty()) {
      state.history.push_back(RoundRecord{std::nullopt, Rational(0)});
      continue;
    }
    const std::size_t w = top.size() == 1 ? top.front() : top[rng.below(top.size())];
    award(state, w, *bids[w]);
  }
  SequentialResult result;
  result.exact = false;
  for (std::size_t j = 0; j < k; ++j) {
    result.wins.emplace_back(state.wins[j]);
    result.payments.push_back(state.paid[j]);
  }
  return result;
}

}  // namespace auctionlab
