#pragma once

// Independent numeric oracles for the closed forms in marginals. These use
// only the raw density h (not r_closed or the sampler decomposition).

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <vector>

#include "auctionlab/marginals.hpp"

namespace auctionlab::oracle {

inline constexpr double kThird = 1.0 / 3.0;

// Adaptive Gauss-Kronrod over [a, b], split at the given interior kinks.
template <class F>
double integrate_pieces(F f, double a, double b, std::vector<double> kinks,
                        double tol = 1e-12, unsigned depth = 15) {
  kinks.push_back(a);
  kinks.push_back(b);
  std::sort(kinks.begin(), kinks.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < kinks.size(); ++i) {
    const double lo = std::max(a, kinks[i]);
    const double hi = std::min(b, kinks[i + 1]);
    if (hi <= lo) continue;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, depth, tol);
  }
  return total;
}

// Integral of h(x, y, z) over z in [0, 1/3].
inline double r_quadrature(double x, double y) {
  return integrate_pieces([&](double z) { return density_h(x, y, z); }, 0.0, kThird, {x, y});
}

// Integral of h over the part of the cube where max - min <= d < 1/3: six
// times the integral over the ordered region x <= y <= z with z - x <= d.
inline double range_cdf_quadrature(double d, double tol = 1e-10) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  auto over_z = [&](double x) {
    return GK::integrate(
        [&](double z) { return GK::integrate([&](double y) { return density_h(x, y, z); }, x, z, 5, tol); },
        x, std::min(kThird, x + d), 10, tol);
  };
  return 6.0 * integrate_pieces(over_z, 0.0, kThird, {kThird - d}, tol, 10);
}

// Integral of h over the whole cube: six times the integral over the ordered
// region x <= y <= z. tanh-sinh copes with the log singularity at the corner
// x = 0, z = 1/3.
inline double cube_integral_h(double tol = 1e-8) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto over_z = [&](double x) {
    return ts.integrate(
        [&](double z) {
          return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
              [&](double y) { return density_h(x, y, z); }, x, z, 5, tol);
        },
        x, kThird, tol);
  };
  return 6.0 * ts.integrate(over_z, 0.0, kThird, tol);
}

}  // namespace auctionlab::oracle
