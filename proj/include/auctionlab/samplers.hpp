#pragma once

// Random bid generators whose per-object marginals are the optimal F_k.
//
// Floating-point bid lists are plain std::vector<double>; bids_from_doubles()
// embeds them exactly into the engine's BidSequence when exact resolution is
// needed.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "auctionlab/rng.hpp"

namespace auctionlab {

using Triple = std::array<double, 3>;

// Largest tolerated |sum - 1| of a drawn bid list before renormalization.
inline constexpr double kSumTolerance = 1e-12;

// Range of an h-distributed triple from a uniform u in [0,1]: the range has
// CDF 27 d^3 on [0, 1/3], so d = u^(1/3) / 3.
double triple_range_from_uniform(double u);

// Builds the triple from its decomposition: range d, minimum
// m = u_min * (1/3 - d), middle = m + u_mid * d, and one of the 6 orderings of
// (minimum, middle, maximum) selected by `permutation` in [0, 6).
Triple triple_from_parts(double range, double u_min, double u_mid, int permutation);

// Exact draw from the density h on [0,1/3]^3.
Triple draw_triple(RngStream& rng);

// Deterministic core of the two-bidder construction. For odd n the triple is
// mapped to the three bids (3/n)(x - y + 1/3), (3/n)(y - z + 1/3),
// (3/n)(z - x + 1/3); it is ignored for even n.
std::vector<double> two_bidder_from(int n, double b1, const Triple& triple);

// Two-bidder optimal bids: every coordinate ~ Uniform[0, 2/n], sum 1.
std::vector<double> draw_two_bidder(int n, RngStream& rng);

// Point on the open simplex with density g (Dirichlet(1/(k-1), ..., 1/(k-1))).
std::vector<double> draw_simplex_k(int k, RngStream& rng);

// Replicates one simplex draw over n/k groups and scales by k/n.
// Throws NotMultiple when k does not divide n.
std::vector<double> k_bidder_from(int n, std::span<const double> group_draw);

std::vector<double> draw_k_bidder(int n, int k, RngStream& rng);

// The optimal disadvantaged strategy for (n, k): the two-bidder construction
// for k == 2, otherwise the k-bidder construction (requires k | n).
std::vector<double> draw_disadvantaged(int n, int k, RngStream& rng);

// Throws unless k == 2 or k divides n.
void require_sampler_support(int n, int k);

}  // namespace auctionlab
