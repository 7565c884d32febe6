#include "auctionlab/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "auctionlab/error.hpp"

namespace auctionlab {

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kSimplexTolerance = 1e-9;

void require_in_cube(double v) {
  if (!(v >= 0.0 && v <= kThird)) {
    throw AuctionError(ErrorCode::kDomainError,
                       "coordinate " + std::to_string(v) + " outside [0, 1/3]");
  }
}

}  // namespace

MarginalSpec::MarginalSpec(int n, int k) : n_(n), k_(k) {
  if (k < 2 || n < k) {
    throw AuctionError(ErrorCode::kDomainError,
                       "need n >= k >= 2, got n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
  }
}

double cdf_F(const MarginalSpec& spec, double b) {
  if (!(b >= 0.0 && b <= 1.0)) {
    throw AuctionError(ErrorCode::kDomainError, "bid outside [0, 1]");
  }
  const double scaled = b * spec.n() / spec.k();
  if (scaled >= 1.0) return 1.0;
  if (spec.k() == 2) return scaled;
  return std::pow(scaled, 1.0 / (spec.k() - 1));
}

double pdf_f(const MarginalSpec& spec, double b) {
  if (!(b >= 0.0 && b <= 1.0)) {
    throw AuctionError(ErrorCode::kDomainError, "bid outside [0, 1]");
  }
  const double scale = static_cast<double>(spec.n()) / spec.k();
  const double scaled = b * scale;
  if (scaled >= 1.0) return 0.0;
  const double a = 1.0 / (spec.k() - 1);
  if (spec.k() == 2) return scale;
  if (b == 0.0) return std::numeric_limits<double>::infinity();
  return a * scale * std::pow(scaled, a - 1.0);
}

double density_s(double v) {
  if (!(v >= 0.0 && v < 2.0 / 3.0)) {
    throw AuctionError(ErrorCode::kDomainError, "s(v) requires 0 <= v < 2/3");
  }
  return 40.5 * v / (2.0 - 3.0 * v);
}

double density_h(double x, double y, double z) {
  require_in_cube(x);
  require_in_cube(y);
  require_in_cube(z);
  const double range = std::max({x, y, z}) - std::min({x, y, z});
  const double v = 2.0 * range;
  if (2.0 - 3.0 * v <= 0.0) return std::numeric_limits<double>::infinity();
  return density_s(v);
}

double r_closed(double x, double y) {
  if (!(x > 0.0 && x < kThird && y > 0.0 && y < kThird)) {
    throw AuctionError(ErrorCode::kDomainError, "r(x, y) requires 0 < x, y < 1/3");
  }
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  const double d = hi - lo;
  return 4.5 * (2.0 * std::log(1.0 - 3.0 * d) - std::log(3.0 * lo * (1.0 - 3.0 * hi)) -
                (1.0 - 6.0 * d) / (1.0 - 3.0 * d));
}

double simplex_normalizer(int k) {
  if (k < 2) throw AuctionError(ErrorCode::kDomainError, "simplex needs k >= 2");
  const double a = 1.0 / (k - 1);
  return std::exp(k * std::lgamma(a) - std::lgamma(k * a));
}

double density_g(std::span<const double> b) {
  const int k = static_cast<int>(b.size());
  if (k < 2) throw AuctionError(ErrorCode::kDomainError, "simplex needs k >= 2");
  double sum = 0.0;
  double log_prod = 0.0;
  for (double v : b) {
    if (!(v > 0.0)) {
      throw AuctionError(ErrorCode::kDomainError, "simplex coordinate not positive");
    }
    sum += v;
    log_prod += std::log(v);
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw AuctionError(ErrorCode::kDomainError, "coordinates do not sum to 1");
  }
  const double exponent = 1.0 / (k - 1) - 1.0;
  return std::exp(exponent * log_prod) / simplex_normalizer(k);
}

}  // namespace auctionlab
