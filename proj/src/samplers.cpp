#include "auctionlab/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "auctionlab/error.hpp"

namespace auctionlab {

namespace {

constexpr double kThird = 1.0 / 3.0;

// Orderings of (minimum, middle, maximum) onto (x, y, z).
constexpr std::array<std::array<int, 3>, 6> kOrderings{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

bool all_positive(const std::vector<double>& bids) {
  return std::all_of(bids.begin(), bids.end(), [](double b) { return b > 0.0; });
}

// Divides by the sum after checking it is within kSumTolerance of 1.
void renormalize(std::vector<double>& bids) {
  const double sum = std::accumulate(bids.begin(), bids.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::logic_error("sampled bids sum to " + std::to_string(sum));
  }
  for (double& b : bids) b /= sum;
}

}  // namespace

void require_sampler_support(int n, int k) {
  if (k < 2 || n < k) {
    throw AuctionError(ErrorCode::kDomainError, "need n >= k >= 2");
  }
  if (k != 2 && n % k != 0) {
    throw AuctionError(ErrorCode::kNotMultiple,
                       std::to_string(k) + " does not divide " + std::to_string(n));
  }
}

double triple_range_from_uniform(double u) { return kThird * std::cbrt(u); }

Triple triple_from_parts(double range, double u_min, double u_mid, int permutation) {
  const double lo = u_min * (kThird - range);
  const std::array<double, 3> sorted{lo, lo + u_mid * range, lo + range};
  const auto& order = kOrderings.at(static_cast<std::size_t>(permutation));
  return {sorted[order[0]], sorted[order[1]], sorted[order[2]]};
}

Triple draw_triple(RngStream& rng) {
  const double range = triple_range_from_uniform(rng.uniform());
  const double u_min = rng.uniform();
  const double u_mid = rng.uniform();
  const int perm = static_cast<int>(rng.below(6));
  return triple_from_parts(range, u_min, u_mid, perm);
}

std::vector<double> two_bidder_from(int n, double b1, const Triple& triple) {
  if (n < 2) throw AuctionError(ErrorCode::kDomainError, "two-bidder bids need n >= 2");
  const double cap = 2.0 / n;
  std::vector<double> bids;
  bids.reserve(static_cast<std::size_t>(n));
  const int m = n / 2;
  if (n % 2 == 0) {
    bids.insert(bids.end(), static_cast<std::size_t>(m), b1);
    bids.insert(bids.end(), static_cast<std::size_t>(m), cap - b1);
    return bids;
  }
  // n = 2m + 1: (m - 1) pairs, then the triple. For n = 3 only the triple.
  bids.insert(bids.end(), static_cast<std::size_t>(m - 1), b1);
  bids.insert(bids.end(), static_cast<std::size_t>(m - 1), cap - b1);
  const auto [x, y, z] = triple;
  const double scale = 3.0 / n;
  bids.push_back(scale * (x - y + kThird));
  bids.push_back(scale * (y - z + kThird));
  bids.push_back(scale * (z - x + kThird));
  return bids;
}

std::vector<double> draw_two_bidder(int n, RngStream& rng) {
  if (n < 2) throw AuctionError(ErrorCode::kDomainError, "two-bidder bids need n >= 2");
  const double cap = 2.0 / n;
  for (;;) {
    const double b1 = cap * rng.uniform();
    const Triple triple = (n % 2 == 1) ? draw_triple(rng) : Triple{};
    std::vector<double> bids = two_bidder_from(n, b1, triple);
    renormalize(bids);
    if (all_positive(bids)) return bids;
  }
}

std::vector<double> draw_simplex_k(int k, RngStream& rng) {
  if (k < 2) throw AuctionError(ErrorCode::kDomainError, "simplex needs k >= 2");
  const double shape = 1.0 / (k - 1);
  std::vector<double> point(static_cast<std::size_t>(k));
  for (;;) {
    double sum = 0.0;
    for (double& v : point) {
      v = rng.gamma(shape);
      sum += v;
    }
    if (!(sum > 0.0) || !std::isfinite(sum)) continue;
    for (double& v : point) v /= sum;
    renormalize(point);
    if (all_positive(point)) return point;
  }
}

std::vector<double> k_bidder_from(int n, std::span<const double> group_draw) {
  const int k = static_cast<int>(group_draw.size());
  require_sampler_support(n, k);
  if (n % k != 0) {
    throw AuctionError(ErrorCode::kNotMultiple,
                       std::to_string(k) + " does not divide " + std::to_string(n));
  }
  const int groups = n / k;
  std::vector<double> bids;
  bids.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < groups; ++g) {
    for (double v : group_draw) bids.push_back(v / groups);
  }
  return bids;
}

std::vector<double> draw_k_bidder(int n, int k, RngStream& rng) {
  require_sampler_support(n, k);
  if (n % k != 0) {
    throw AuctionError(ErrorCode::kNotMultiple,
                       std::to_string(k) + " does not divide " + std::to_string(n));
  }
  for (;;) {
    std::vector<double> bids = k_bidder_from(n, draw_simplex_k(k, rng));
    renormalize(bids);
    if (all_positive(bids)) return bids;
  }
}

std::vector<double> draw_disadvantaged(int n, int k, RngStream& rng) {
  require_sampler_support(n, k);
  return k == 2 ? draw_two_bidder(n, rng) : draw_k_bidder(n, k, rng);
}

}  // namespace auctionlab
