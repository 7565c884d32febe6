#pragma once

// Scenario orchestration: Monte Carlo estimation of expected wins, exact
// reference values where closed forms exist, and empirical-CDF checks.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "auctionlab/adversary.hpp"
#include "auctionlab/rational.hpp"

namespace auctionlab {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::size_t kDefaultSamples = 1'000'000;

enum class Mode { kTwoBidder, kKBidder, kPositionRandomized, kSequential, kGroup };
enum class AdversaryKind { kFixed, kCopycat, kUndercut, kDpOptimal };

std::string_view to_string(Mode mode);
std::string_view to_string(AdversaryKind kind);
Mode parse_mode(std::string_view text);
AdversaryKind parse_adversary(std::string_view text);

struct Scenario {
  Mode mode = Mode::kTwoBidder;
  int n = 2;
  int k = 2;
  AdversaryKind adversary = AdversaryKind::kCopycat;
  // Fixed adversary bids: one per object (two-bidder, k-bidder,
  // position-randomized), the opponents' round schedule (sequential), or one
  // bid per group (group).
  std::vector<Rational> fixed_bids;
  std::vector<Rational> group_sizes;  // group mode only
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency; never affects results
};

// Throws AuctionError(kInvalidScenario) describing the first violated rule.
void validate(const Scenario& scenario);

struct KsEntry {
  int coordinate = 0;  // 1-based object index
  double statistic = 0.0;
  double threshold = 0.0;
  bool passed() const { return statistic <= threshold; }
};

struct Report {
  Scenario scenario;
  // Bidder 0 is always the adversary (or the steady bidder in sequential mode).
  std::vector<std::string> bidders;
  std::vector<McEstimate> estimates;
  std::vector<std::optional<Rational>> exact;
  std::vector<KsEntry> ks;  // coordinates of the first disadvantaged bidder
  std::size_t zero_sum_violations = 0;
  double max_sum_deviation = 0.0;  // max |sum of drawn bids - 1|
  struct Meta {
    std::uint64_t seed = 0;
    std::string version{kVersion};
    std::size_t samples = 0;
    double elapsed_ms = 0.0;
  } meta;
};

Report estimate(const Scenario& scenario);

// Sup-norm distance between the empirical CDF of `sorted_sample` and `cdf`.
// Left limits of `cdf` are taken at the previous representable double, so
// step-function CDFs are handled. Throws EmptySample.
double ks_distance(std::span<const double> sorted_sample,
                   const std::function<double(double)>& cdf);

// 1.95 / sqrt(N): asymptotic KS critical value at significance ~0.001.
double ks_threshold(std::size_t samples);

}  // namespace auctionlab
