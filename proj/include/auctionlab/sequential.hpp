#pragma once

// Sequential first-price auctions: objects are sold one at a time and only the
// round winner pays, out of the same unit budget.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "auctionlab/rational.hpp"
#include "auctionlab/rng.hpp"

namespace auctionlab {

struct RoundRecord {
  std::optional<std::size_t> winner;  // empty when every bidder passed
  Rational price;
};

// What a bidder sees before bidding in a round. History is public.
struct SequentialView {
  int round = 1;  // 1..n
  int n = 0;
  int k = 0;
  std::size_t self = 0;
  std::span<const Rational> budgets;  // remaining, per bidder
  std::span<const int> wins;          // objects won so far, per bidder
  std::span<const RoundRecord> history;

  const Rational& budget() const { return budgets[self]; }
};

// A pass is std::nullopt; a bid must be positive and at most the remaining
// budget. Deterministic strategies ignore the RNG.
struct Strategy {
  std::string name;
  bool deterministic = true;
  std::function<std::optional<Rational>(const SequentialView&, RngStream&)> decide;
};

// Bids k/n every round while the remaining budget covers it, then passes.
// Throws NotMultiple unless k divides n.
Strategy steady_strategy(int n, int k);

// Bids schedule[r] in round r + 1, clipped to the remaining budget; passes on
// non-positive entries, exhausted budget, or past the end of the schedule.
Strategy scheduled_strategy(std::vector<Rational> schedule, std::string name = "schedule");

// Randomized opponent for stress runs: each round it passes, bids its whole
// budget, bids k/n (or everything left if less), or bids a uniformly chosen
// multiple of 1/8 of its remaining budget, with equal probability.
Strategy random_strategy(int n, int k);

struct SequentialResult {
  std::vector<Rational> wins;      // expected (exact mode) or realized wins
  std::vector<Rational> payments;  // expected or realized total payments
  bool exact = true;
};

// Runs n rounds among k = strategies.size() bidders. When every strategy is
// deterministic, ties branch the state and the result is the exact
// expectation; otherwise one sampled run is returned with ties broken
// uniformly by RngStream(seed, 0). Throws StrategyViolation on an invalid bid.
SequentialResult run_sequential(std::span<const Strategy> strategies, int n,
                                std::uint64_t seed = 0);

// Single sampled run using the given stream (for Monte Carlo over many runs).
SequentialResult run_sequential_sampled(std::span<const Strategy> strategies, int n,
                                        RngStream& rng);

}  // namespace auctionlab
