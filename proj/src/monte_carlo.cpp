#include "auctionlab/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace auctionlab {

McEstimate AuctionTally::estimate(std::size_t bidder) const {
  McEstimate e;
  e.samples = samples;
  if (samples == 0) return e;
  const double n = static_cast<double>(samples);
  const double u = static_cast<double>(unit);
  e.mean = static_cast<double>(sum[bidder]) / (u * n);
  if (samples > 1) {
    const double mean_sq = static_cast<double>(sum_sq[bidder]) / (u * u * n);
    const double var = std::max(0.0, (mean_sq - e.mean * e.mean) * n / (n - 1.0));
    e.std_error = std::sqrt(var / n);
  }
  return e;
}

Rational AuctionTally::exact_mean(std::size_t bidder) const {
  Rational r(mpz_class(static_cast<long>(sum[bidder])),
             mpz_class(static_cast<long>(unit)) * mpz_class(static_cast<unsigned long>(samples)));
  r.canonicalize();
  return r;
}

AuctionTally tally_auctions(std::size_t bidders, std::int64_t unit,
                            std::int64_t units_per_draw, std::size_t samples,
                            std::uint64_t seed, const DrawScorer& scorer, unsigned threads) {
  const std::size_t chunks = (samples + kDefaultChunkSize - 1) / kDefaultChunkSize;
  std::vector<AuctionTally> partial(chunks);

  for_each_chunk(
      samples, kDefaultChunkSize,
      [&](const ChunkRange& range) {
        AuctionTally& t = partial[range.index];
        t.sum.assign(bidders, 0);
        t.sum_sq.assign(bidders, 0);
        RngStream rng(seed, range.index);
        std::vector<std::int64_t> units(bidders);
        for (std::size_t d = range.begin; d < range.end; ++d) {
          std::fill(units.begin(), units.end(), 0);
          scorer(d, rng, units);
          std::int64_t total = 0;
          for (std::size_t j = 0; j < bidders; ++j) {
            t.sum[j] += units[j];
            t.sum_sq[j] += units[j] * units[j];
            total += units[j];
          }
          if (units_per_draw >= 0 && total != units_per_draw) ++t.zero_sum_violations;
        }
      },
      threads);

  AuctionTally out;
  out.unit = unit;
  out.samples = samples;
  out.sum.assign(bidders, 0);
  out.sum_sq.assign(bidders, 0);
  for (const auto& t : partial) {
    for (std::size_t j = 0; j < bidders; ++j) {
      out.sum[j] += t.sum[j];
      out.sum_sq[j] += t.sum_sq[j];
    }
    out.zero_sum_violations += t.zero_sum_violations;
  }
  return out;
}

}  // namespace auctionlab
