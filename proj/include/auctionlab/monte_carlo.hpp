#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "auctionlab/adversary.hpp"
#include "auctionlab/rng.hpp"

namespace auctionlab {

// Integer tallies of per-draw wins measured in units of 1/unit. Sums of
// integers are order independent, so parallel and serial runs agree exactly.
struct AuctionTally {
  std::int64_t unit = 1;
  std::size_t samples = 0;
  std::vector<std::int64_t> sum;      // per bidder
  std::vector<std::int64_t> sum_sq;   // per bidder, of per-draw units squared
  std::size_t zero_sum_violations = 0;

  McEstimate estimate(std::size_t bidder) const;
  // sum[bidder] / (unit * samples) as an exact rational.
  Rational exact_mean(std::size_t bidder) const;
};

// Called once per draw with a chunk-owned RNG stream; must add each bidder's
// wins for this draw (in units of 1/unit) into `units`, which arrives zeroed.
using DrawScorer =
    std::function<void(std::size_t draw, RngStream& rng, std::span<std::int64_t> units)>;

// Runs `samples` draws in chunks of kDefaultChunkSize (chunk c uses stream
// (seed, c)). Each draw's units must total `units_per_draw`; mismatches are
// counted in zero_sum_violations (a negative value disables the check).
AuctionTally tally_auctions(std::size_t bidders, std::int64_t unit,
                            std::int64_t units_per_draw, std::size_t samples,
                            std::uint64_t seed, const DrawScorer& scorer,
                            unsigned threads = 0);

}  // namespace auctionlab
