#include <gtest/gtest.h>

#include <array>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "auctionlab/error.hpp"
#include "auctionlab/marginals.hpp"
#include "quadrature_oracle.hpp"

namespace auctionlab {
namespace {

TEST(CdfF, TwoBidderIsLinear) {
  EXPECT_DOUBLE_EQ(cdf_F(MarginalSpec(4, 2), 0.25), 0.5);
  EXPECT_DOUBLE_EQ(cdf_F(MarginalSpec(4, 2), 0.6), 1.0);
}

TEST(CdfF, ThreeBidderIsSquareRoot) {
  EXPECT_NEAR(cdf_F(MarginalSpec(3, 3), 0.25), 0.5, 1e-15);
}

TEST(CdfF, DomainErrors) {
  EXPECT_THROW(cdf_F(MarginalSpec(4, 2), -0.1), AuctionError);
  EXPECT_THROW(cdf_F(MarginalSpec(4, 2), 1.1), AuctionError);
  EXPECT_THROW(MarginalSpec(2, 3), AuctionError);
  EXPECT_THROW(MarginalSpec(5, 1), AuctionError);
}

TEST(CdfF, MonotoneAndPinnedAtEnds) {
  for (auto [n, k] : std::array<std::pair<int, int>, 5>{{{4, 2}, {5, 2}, {3, 3}, {6, 3}, {7, 4}}}) {
    const MarginalSpec spec(n, k);
    EXPECT_EQ(cdf_F(spec, 0.0), 0.0);
    EXPECT_EQ(cdf_F(spec, spec.cap()), 1.0);
    EXPECT_EQ(cdf_F(spec, 1.0), 1.0);
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double v = cdf_F(spec, i / 1000.0);
      EXPECT_GE(v, prev);
      prev = v;
    }
    // Continuity at the cap.
    EXPECT_NEAR(cdf_F(spec, spec.cap() - 1e-12), 1.0, 1e-9);
  }
}

TEST(DensityS, Values) {
  EXPECT_EQ(density_s(0.0), 0.0);
  EXPECT_NEAR(density_s(1.0 / 3.0), 13.5, 1e-12);
  EXPECT_NEAR(density_s(0.5), 40.5, 1e-12);
  EXPECT_THROW(density_s(2.0 / 3.0), AuctionError);
  EXPECT_THROW(density_s(-0.01), AuctionError);
}

TEST(DensityH, Values) {
  EXPECT_EQ(density_h(0, 0, 0), 0.0);
  EXPECT_NEAR(density_h(1.0 / 6.0, 0, 0), 13.5, 1e-12);
  EXPECT_EQ(density_h(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0), 0.0);
  EXPECT_EQ(density_h(0, 1.0 / 3.0, 0.1), std::numeric_limits<double>::infinity());
  EXPECT_THROW(density_h(0.4, 0, 0), AuctionError);
  EXPECT_THROW(density_h(0, -0.1, 0), AuctionError);
}

TEST(RClosed, CenterValue) {
  // Frozen from quadrature of h over z: (9/2)(ln 4 - 1).
  EXPECT_NEAR(r_closed(1.0 / 6.0, 1.0 / 6.0), 4.5 * (std::log(4.0) - 1.0), 1e-12);
  EXPECT_NEAR(r_closed(1.0 / 6.0, 1.0 / 6.0), 1.7383246250395077, 1e-12);
}

TEST(RClosed, SymmetricAndMatchesQuadrature) {
  EXPECT_DOUBLE_EQ(r_closed(0.25, 0.10), r_closed(0.10, 0.25));
  EXPECT_NEAR(r_closed(0.25, 0.10), oracle::r_quadrature(0.25, 0.10), 1e-9);
  EXPECT_NEAR(r_closed(0.25, 0.10), 5.457487419523816, 1e-9);
}

TEST(RClosed, GridAgreesWithQuadrature) {
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const double x = i / 33.0;
      const double y = j / 33.0 - 0.005;
      EXPECT_NEAR(r_closed(x, y), oracle::r_quadrature(x, y), 1e-9) << x << "," << y;
    }
  }
}

TEST(RClosed, BoundaryIsDomainError) {
  EXPECT_THROW(r_closed(0.0, 0.1), AuctionError);
  EXPECT_THROW(r_closed(0.1, 1.0 / 3.0), AuctionError);
}

TEST(DensityH, IntegratesToOne) {
  EXPECT_NEAR(oracle::cube_integral_h(), 1.0, 1e-3);
}

TEST(DensityG, Values) {
  const std::array<double, 2> two{0.3, 0.7};
  EXPECT_NEAR(density_g(two), 1.0, 1e-14);
  const std::array<double, 3> center{1.0 / 3, 1.0 / 3, 1.0 / 3};
  EXPECT_NEAR(density_g(center), std::sqrt(27.0) / (2 * std::numbers::pi), 1e-12);
  EXPECT_NEAR(density_g(center), 0.8270, 1e-4);
  const std::array<double, 3> skew{0.5, 0.25, 0.25};
  EXPECT_NEAR(density_g(skew), 1.0 / (2 * std::numbers::pi * std::sqrt(1.0 / 32)), 1e-12);
}

TEST(DensityG, OffSimplexIsDomainError) {
  const std::array<double, 3> off{0.5, 0.5, 0.5};
  EXPECT_THROW(density_g(off), AuctionError);
  const std::array<double, 3> zero{0.0, 0.5, 0.5};
  EXPECT_THROW(density_g(zero), AuctionError);
}

TEST(SimplexNormalizer, MatchesKnownValues) {
  EXPECT_NEAR(simplex_normalizer(2), 1.0, 1e-14);
  EXPECT_NEAR(simplex_normalizer(3), 2 * std::numbers::pi, 1e-12);
}

// Numeric integration of g over the simplex, coordinates b_1..b_{k-1}. The
// integrable corner singularities are cut off at kCut, which loses far less
// mass than the tolerance below.
constexpr double kCut = 1e-18;

double integrate_g(int k) {
  boost::math::quadrature::tanh_sinh<double> ts;
  if (k == 2) {
    return ts.integrate([](double b) { return density_g(std::array<double, 2>{b, 1 - b}); }, 0.0, 1.0);
  }
  if (k == 3) {
    return ts.integrate(
        [&](double b1) {
          const double rest = 1 - b1;
          return ts.integrate(
              [&](double b2) {
                const double b3 = rest - b2;
                if (!(b1 > 0 && b2 > 0 && b3 > 0)) return 0.0;
                return density_g(std::array<double, 3>{b1, b2, b3});
              },
              kCut, rest - kCut, 1e-8);
        },
        kCut, 1.0 - kCut, 1e-6);
  }
  return ts.integrate(
      [&](double b1) {
        const double r1 = 1 - b1;
        return ts.integrate(
            [&](double b2) {
              const double r2 = r1 - b2;
              return ts.integrate(
                  [&](double b3) {
                    const double b4 = r2 - b3;
                    if (!(b1 > 0 && b2 > 0 && b3 > 0 && b4 > 0)) return 0.0;
                    return density_g(std::array<double, 4>{b1, b2, b3, b4});
                  },
                  kCut, r2 - kCut, 1e-6);
            },
            kCut, r1 - kCut, 1e-5);
      },
      kCut, 1.0 - kCut, 1e-4);
}

TEST(DensityG, IntegratesToOne) {
  for (int k : {2, 3, 4}) EXPECT_NEAR(integrate_g(k), 1.0, 1e-3) << "k=" << k;
}

}  // namespace
}  // namespace auctionlab
