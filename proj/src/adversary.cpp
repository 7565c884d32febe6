#include "auctionlab/adversary.hpp"

#include <algorithm>
#include <cmath>

#include "auctionlab/engine.hpp"
#include "auctionlab/error.hpp"
#include "auctionlab/monte_carlo.hpp"
#include "auctionlab/samplers.hpp"

namespace auctionlab {

namespace {

constexpr double kBudgetTolerance = 1e-12;

}  // namespace

Rational wins_vs_marginal(const MarginalSpec& spec, std::span<const Rational> bids) {
  const Rational slope = make_rational(spec.n(), spec.k());
  Rational spent(0);
  Rational wins(0);
  for (const Rational& a : bids) {
    if (sgn(a) < 0) throw AuctionError(ErrorCode::kDomainError, "negative bid");
    spent += a;
    // At or above the cap the adversary wins outright.
    const Rational p = slope * a;
    wins += (p >= 1) ? Rational(1) : p;
  }
  if (spent > 1) throw AuctionError(ErrorCode::kOverBudget, "bids exceed the unit budget");
  return wins;
}

double wins_vs_marginal(const MarginalSpec& spec, std::span<const double> bids) {
  const double slope = static_cast<double>(spec.n()) / spec.k();
  double spent = 0.0;
  double wins = 0.0;
  for (double a : bids) {
    if (!(a >= 0.0)) throw AuctionError(ErrorCode::kDomainError, "negative bid");
    spent += a;
    wins += std::min(1.0, slope * a);
  }
  if (spent > 1.0 + kBudgetTolerance) {
    throw AuctionError(ErrorCode::kOverBudget, "bids exceed the unit budget");
  }
  return wins;
}

double GroupAuction::total() const {
  double n = 0.0;
  for (double s : sizes) n += s;
  return n;
}

double group_wins(const GroupAuction& auction, std::span<const double> bids) {
  if (bids.size() != auction.sizes.size()) {
    throw AuctionError(ErrorCode::kLengthMismatch, "one bid per group required");
  }
  if (auction.k < 2) throw AuctionError(ErrorCode::kDomainError, "need k >= 2");
  const double n = auction.total();
  if (!(n > 0.0)) throw AuctionError(ErrorCode::kDomainError, "group sizes must be positive");
  const double slope = n / auction.k;
  double spent = 0.0;
  double wins = 0.0;
  for (std::size_t i = 0; i < bids.size(); ++i) {
    const double size = auction.sizes[i];
    if (!(size > 0.0)) throw AuctionError(ErrorCode::kDomainError, "group sizes must be positive");
    if (!(bids[i] >= 0.0)) throw AuctionError(ErrorCode::kDomainError, "negative bid");
    spent += size * bids[i];
    wins += size * std::min(1.0, slope * bids[i]);
  }
  if (spent > 1.0 + kBudgetTolerance) {
    throw AuctionError(ErrorCode::kOverBudget, "group bids exceed the unit budget");
  }
  return wins;
}

Rational group_wins(std::span<const Rational> sizes, int k, std::span<const Rational> bids) {
  if (bids.size() != sizes.size()) {
    throw AuctionError(ErrorCode::kLengthMismatch, "one bid per group required");
  }
  if (k < 2) throw AuctionError(ErrorCode::kDomainError, "need k >= 2");
  Rational n(0);
  for (const Rational& s : sizes) {
    if (sgn(s) <= 0) throw AuctionError(ErrorCode::kDomainError, "group sizes must be positive");
    n += s;
  }
  const Rational slope = n / k;
  Rational spent(0);
  Rational wins(0);
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (sgn(bids[i]) < 0) throw AuctionError(ErrorCode::kDomainError, "negative bid");
    spent += sizes[i] * bids[i];
    const Rational p = slope * bids[i];
    wins += sizes[i] * ((p >= 1) ? Rational(1) : p);
  }
  if (spent > 1) throw AuctionError(ErrorCode::kOverBudget, "group bids exceed the unit budget");
  return wins;
}

McEstimate copycat_value(const MarginalSpec& spec, std::size_t samples, std::uint64_t seed) {
  const int n = spec.n();
  const int k = spec.k();
  require_sampler_support(n, k);
  const std::size_t bidders = static_cast<std::size_t>(k);
  const std::int64_t unit = tie_unit(bidders);
  const AuctionTally tally = tally_auctions(
      bidders, unit, unit * n, samples, seed,
      [&](std::size_t, RngStream& rng, std::span<std::int64_t> units) {
        std::vector<std::vector<double>> draws;
        draws.reserve(bidders);
        for (std::size_t j = 0; j < bidders; ++j) draws.push_back(draw_disadvantaged(n, k, rng));
        std::vector<std::span<const double>> views(draws.begin(), draws.end());
        resolve_units(views, units);
      });
  return tally.estimate(0);
}

}  // namespace auctionlab
