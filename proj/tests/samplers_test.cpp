#include <gtest/gtest.h>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numeric>

#include "auctionlab/engine.hpp"
#include "auctionlab/error.hpp"
#include "auctionlab/harness.hpp"
#include "auctionlab/marginals.hpp"
#include "auctionlab/samplers.hpp"
#include "quadrature_oracle.hpp"

namespace auctionlab {
namespace {

constexpr double kThird = 1.0 / 3.0;

double sum_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double uniform_ks(std::vector<double> xs, double hi) {
  std::sort(xs.begin(), xs.end());
  return ks_distance(xs, [hi](double x) { return std::clamp(x / hi, 0.0, 1.0); });
}

TEST(TripleRange, InverseCdfBoundaries) {
  EXPECT_DOUBLE_EQ(triple_range_from_uniform(1.0), kThird);
  EXPECT_DOUBLE_EQ(triple_range_from_uniform(1.0 / 8.0), 1.0 / 6.0);
  EXPECT_EQ(triple_range_from_uniform(0.0), 0.0);
}

// The decomposition rests on two facts about h: its range has CDF 27 d^3, and
// h is constant on each level set of the range.
TEST(TripleRange, QuadratureOracleGivesCubicCdf) {
  // Frozen from oracle::range_cdf_quadrature: 27 d^3 at d = 1/12, 1/6, 1/4.
  for (double d : {1.0 / 12.0, 1.0 / 6.0, 0.25}) {
    EXPECT_NEAR(oracle::range_cdf_quadrature(d), 27.0 * d * d * d, 1e-6) << d;
  }
}

TEST(TripleRange, DensityDependsOnlyOnRange) {
  RngStream rng(5, 0);
  for (int i = 0; i < 1000; ++i) {
    const double d = 0.3 * rng.uniform();
    const double lo1 = (kThird - d) * rng.uniform();
    const double lo2 = (kThird - d) * rng.uniform();
    const double h1 = density_h(lo1, lo1 + d, lo1 + d * rng.uniform());
    const double h2 = density_h(lo2 + d * rng.uniform(), lo2 + d, lo2);
    EXPECT_NEAR(h1, h2, 1e-9 * std::max(1.0, h1));
  }
}

TEST(TripleFromParts, PlacesMinimumMiddleMaximum) {
  const Triple t = triple_from_parts(1.0 / 6.0, 0.5, 0.5, 0);
  EXPECT_NEAR(t[0], 1.0 / 12.0, 1e-15);
  EXPECT_NEAR(t[1], 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(t[2], 0.25, 1e-15);
  const Triple u = triple_from_parts(1.0 / 6.0, 0.5, 0.5, 5);
  EXPECT_NEAR(u[0], 0.25, 1e-15);
  EXPECT_NEAR(u[2], 1.0 / 12.0, 1e-15);
}

// The coordinates themselves are not uniform; the shifted cyclic differences
// x - y + 1/3, y - z + 1/3, z - x + 1/3 are, on [0, 2/3].
TEST(DrawTriple, CyclicDifferencesAreUniform) {
  RngStream rng(42, 1);
  const std::size_t n = 1'000'000;
  std::vector<std::vector<double>> diffs(3, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Triple t = draw_triple(rng);
    for (double v : t) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, kThird);
    }
    for (std::size_t c = 0; c < 3; ++c) diffs[c][i] = t[c] - t[(c + 1) % 3] + kThird;
  }
  for (auto& d : diffs) EXPECT_LE(uniform_ks(d, 2.0 / 3.0), ks_threshold(n));
}

TEST(DrawTriple, PairDensityMatchesRClosed) {
  constexpr int kBins = 6;
  const double width = kThird / kBins;
  RngStream rng(43, 0);
  const std::size_t n = 1'000'000;
  std::vector<double> counts(kBins * kBins, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Triple t = draw_triple(rng);
    const int bx = std::min(kBins - 1, static_cast<int>(t[0] / width));
    const int by = std::min(kBins - 1, static_cast<int>(t[1] / width));
    counts[static_cast<std::size_t>(bx * kBins + by)] += 1.0;
  }
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double chi2 = 0.0;
  double total_p = 0.0;
  for (int bx = 0; bx < kBins; ++bx) {
    for (int by = 0; by < kBins; ++by) {
      const double x0 = bx * width;
      const double y0 = by * width;
      const double p = GK::integrate(
          [&](double x) {
            return GK::integrate([&](double y) { return r_closed(x, y); }, y0, y0 + width, 8, 1e-10);
          },
          x0, x0 + width, 8, 1e-9);
      total_p += p;
      const double expected = p * static_cast<double>(n);
      const double diff = counts[static_cast<std::size_t>(bx * kBins + by)] - expected;
      chi2 += diff * diff / expected;
    }
  }
  EXPECT_NEAR(total_p, 1.0, 1e-4);
  // 35 degrees of freedom; mean 35, sd ~8.4.
  EXPECT_LT(chi2, 35.0 + 5.0 * std::sqrt(70.0));
}

TEST(TwoBidderFrom, EvenCase) {
  const auto b = two_bidder_from(4, 0.1, {});
  ASSERT_EQ(b.size(), 4u);
  EXPECT_DOUBLE_EQ(b[0], 0.1);
  EXPECT_DOUBLE_EQ(b[1], 0.1);
  EXPECT_DOUBLE_EQ(b[2], 0.4);
  EXPECT_DOUBLE_EQ(b[3], 0.4);
}

TEST(TwoBidderFrom, OddCaseWithSymmetricTriple) {
  const auto b = two_bidder_from(5, 0.1, {kThird, kThird, kThird});
  const std::vector<double> expected{0.1, 0.3, 0.2, 0.2, 0.2};
  ASSERT_EQ(b.size(), expected.size());
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_NEAR(b[i], expected[i], 1e-15);
}

TEST(TwoBidderFrom, ThreeObjectsUseOnlyTheTriple) {
  const auto b = two_bidder_from(3, 0.5, {0.0, 0.1, 0.3});
  ASSERT_EQ(b.size(), 3u);
  EXPECT_NEAR(sum_of(b), 1.0, 1e-15);
  EXPECT_NEAR(b[0], 0.0 - 0.1 + kThird, 1e-15);
}

TEST(DrawTwoBidder, ThreeObjectsUniformMarginals) {
  RngStream rng(7, 0);
  const std::size_t n = 400'000;
  std::vector<std::vector<double>> coords(3, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = draw_two_bidder(3, rng);
    ASSERT_NEAR(sum_of(b), 1.0, 1e-12);
    for (std::size_t c = 0; c < 3; ++c) {
      ASSERT_GT(b[c], 0.0);
      coords[c][i] = b[c];
    }
  }
  for (auto& c : coords) EXPECT_LE(uniform_ks(c, 2.0 / 3.0), ks_threshold(n));
}

TEST(DrawTwoBidder, EverySequenceFeasible) {
  RngStream rng(8, 0);
  for (int n : {2, 3, 4, 5, 8, 9}) {
    for (int i = 0; i < 2000; ++i) {
      const auto b = draw_two_bidder(n, rng);
      ASSERT_EQ(b.size(), static_cast<std::size_t>(n));
      ASSERT_NEAR(sum_of(b), 1.0, kSumTolerance);
      for (double v : b) {
        ASSERT_GT(v, 0.0);
        ASSERT_LE(v, 2.0 / n + 1e-15);
      }
    }
  }
}

TEST(DrawSimplexK, TwoIsUniform) {
  RngStream rng(9, 0);
  const std::size_t n = 200'000;
  std::vector<double> xs(n);
  for (auto& x : xs) x = draw_simplex_k(2, rng)[0];
  EXPECT_LE(uniform_ks(xs, 1.0), ks_threshold(n));
}

TEST(DrawSimplexK, ThreeHasSquareRootMarginal) {
  RngStream rng(10, 0);
  const std::size_t n = 200'000;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = draw_simplex_k(3, rng);
    ASSERT_NEAR(sum_of(b), 1.0, 1e-12);
    if (b[0] <= 0.25) ++hits;
  }
  const double p = static_cast<double>(hits) / n;
  EXPECT_NEAR(p, 0.5, 3.0 * std::sqrt(0.25 / n));
}

TEST(DrawSimplexK, PositiveAndNormalized) {
  RngStream rng(11, 0);
  for (int k : {2, 3, 4, 5, 8}) {
    for (int i = 0; i < 2000; ++i) {
      const auto b = draw_simplex_k(k, rng);
      ASSERT_EQ(b.size(), static_cast<std::size_t>(k));
      ASSERT_NEAR(sum_of(b), 1.0, 1e-12);
      for (double v : b) ASSERT_GT(v, 0.0);
    }
  }
}

TEST(KBidderFrom, ReplicatesAndScales) {
  const std::vector<double> group{0.2, 0.3, 0.5};
  const auto b = k_bidder_from(6, group);
  const std::vector<double> expected{0.1, 0.15, 0.25, 0.1, 0.15, 0.25};
  ASSERT_EQ(b.size(), expected.size());
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_DOUBLE_EQ(b[i], expected[i]);
}

TEST(DrawKBidder, SingleGroupIsTheSimplexDraw) {
  RngStream a(12, 3);
  RngStream b(12, 3);
  const auto x = draw_k_bidder(3, 3, a);
  const auto y = draw_simplex_k(3, b);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(x[i], y[i], 1e-15);
}

TEST(DrawKBidder, MarginalAtHalfProbability) {
  RngStream rng(13, 0);
  const std::size_t n = 200'000;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = draw_k_bidder(6, 3, rng);
    ASSERT_NEAR(sum_of(b), 1.0, 1e-12);
    if (b[0] <= 0.125) ++hits;
  }
  EXPECT_NEAR(static_cast<double>(hits) / n, 0.5, 3.0 * std::sqrt(0.25 / n));
}

TEST(DrawKBidder, NotMultiple) {
  RngStream rng(14, 0);
  try {
    draw_k_bidder(5, 3, rng);
    FAIL();
  } catch (const AuctionError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMultiple);
  }
  EXPECT_THROW(draw_disadvantaged(7, 3, rng), AuctionError);
  EXPECT_NO_THROW(draw_disadvantaged(7, 2, rng));
}

TEST(RngStream, Deterministic) {
  RngStream a(99, 4);
  RngStream b(99, 4);
  RngStream c(99, 5);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = draw_two_bidder(5, a);
    const auto y = draw_two_bidder(5, b);
    const auto z = draw_two_bidder(5, c);
    ASSERT_EQ(x, y);
    differs = differs || x != z;
  }
  EXPECT_TRUE(differs);
}

}  // namespace
}  // namespace auctionlab
