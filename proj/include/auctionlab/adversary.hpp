#pragma once

// What an informed adversary earns against bidders whose per-object marginal
// is F_k. Against k-1 independent F_k opponents, a bid a on one object wins
// with probability F_k(a)^(k-1) = min(1, (n/k) a), so the adversary's value is
// linear in its budget and capped at n/k.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "auctionlab/marginals.hpp"
#include "auctionlab/rational.hpp"

namespace auctionlab {

// Exact, for rational adversary bids. Throws OverBudget when sum > 1 and
// DomainError for negative bids.
Rational wins_vs_marginal(const MarginalSpec& spec, std::span<const Rational> bids);

// Floating-point variant; budget checked with a relative tolerance of 1e-12.
double wins_vs_marginal(const MarginalSpec& spec, std::span<const double> bids);

// Objects split into m groups of (real) sizes n_1..n_m; the winner of a group
// takes all of its objects.
struct GroupAuction {
  std::vector<double> sizes;
  int k = 2;

  double total() const;
};

// Expected objects won by an adversary bidding sizes[i] * bids[i] on group i.
// Throws OverBudget when sum sizes[i] * bids[i] > 1.
double group_wins(const GroupAuction& auction, std::span<const double> bids);

// Exact variant over rational group sizes and bids.
Rational group_wins(std::span<const Rational> sizes, int k, std::span<const Rational> bids);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

// Monte Carlo value of the copycat adversary: it draws from the same optimal
// sampler as the k-1 disadvantaged bidders. Expectation n/k.
McEstimate copycat_value(const MarginalSpec& spec, std::size_t samples, std::uint64_t seed);

}  // namespace auctionlab
