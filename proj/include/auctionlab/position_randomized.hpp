#pragma once

// Position-randomized bidding: a deterministic initial bid list followed by a
// random permutation onto the objects. Everything here is exact.

#include <cstdint>
#include <span>
#include <vector>

#include "auctionlab/engine.hpp"
#include "auctionlab/rational.hpp"

namespace auctionlab {

// c_i = i^(k-1) / beta with beta = sum_{i=1..n} i^(k-1).
struct CSequence {
  int n = 0;
  int k = 0;
  std::int64_t beta = 0;
  std::vector<Rational> c;  // c[0] is c_1

  BidSequence as_bids() const { return bids_from_rationals(c); }
};

CSequence c_sequence(int n, int k);

// Expected wins of an adversary bid equal to c_p against k-1 bidders that
// each place a uniformly random element of the c-sequence on its object:
//   sum_{i=0}^{k-1} 1/(i+1) C(k-1,i) (1/n)^i ((p-1)/n)^(k-1-i).
Rational sharp_p(int n, int k, int p);

// Doubly stochastic n x n matrix; entry (q, r) is the probability that the
// q-th initial bid is placed on object r.
class PermutationMarginals {
 public:
  // Throws NotDoublyStochastic unless square with nonnegative entries and all
  // row and column sums exactly 1.
  explicit PermutationMarginals(std::vector<std::vector<Rational>> entries);

  static PermutationMarginals identity(int n);
  static PermutationMarginals uniform(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  const Rational& operator()(int q, int r) const {
    return entries_[static_cast<std::size_t>(q)][static_cast<std::size_t>(r)];
  }

 private:
  std::vector<std::vector<Rational>> entries_;
};

// Adversary's exact expected wins when it places a_init by Q and each of the
// k-1 disadvantaged bidders independently places b_init by P. Objects are
// scored independently, so only the marginals matter.
Rational expected_wins_perm(int k, std::span<const Bid> a_init, std::span<const Bid> b_init,
                            const PermutationMarginals& Q, const PermutationMarginals& P);

struct BestResponse {
  Rational value;
  // n bids from {eps, c_2 + eps, ..., c_n + eps}, ascending.
  BidSequence witness;
  // witness_index[j] = i when witness[j] = c_i + eps, 0 for a bare eps.
  std::vector<int> witness_index;
};

// Exact optimum of the adversary against the uniformly permuted c-sequence,
// by dynamic programming over integer cost units of 1/beta.
BestResponse best_response(int n, int k);

// (b_1 - (n-1) eps, b_2 + eps, ..., b_n + eps) for an ascending feasible
// sequence summing to 1. Throws Infeasible if the first bid would not stay
// positive and DomainError if the input is not ascending or does not sum to 1.
BidSequence undercut_strategy(std::span<const Bid> b_sorted);

}  // namespace auctionlab
