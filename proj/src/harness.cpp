#include "auctionlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "auctionlab/engine.hpp"
#include "auctionlab/error.hpp"
#include "auctionlab/marginals.hpp"
#include "auctionlab/monte_carlo.hpp"
#include "auctionlab/position_randomized.hpp"
#include "auctionlab/samplers.hpp"
#include "auctionlab/sequential.hpp"

namespace auctionlab {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kTwoBidder: return "two-bidder";
    case Mode::kKBidder: return "k-bidder";
    case Mode::kPositionRandomized: return "position-randomized";
    case Mode::kSequential: return "sequential";
    case Mode::kGroup: return "group";
  }
  return "unknown";
}

std::string_view to_string(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::kFixed: return "fixed";
    case AdversaryKind::kCopycat: return "copycat";
    case AdversaryKind::kUndercut: return "undercut";
    case AdversaryKind::kDpOptimal: return "dp-optimal";
  }
  return "unknown";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::kTwoBidder, Mode::kKBidder, Mode::kPositionRandomized,
                 Mode::kSequential, Mode::kGroup}) {
    if (to_string(m) == text) return m;
  }
  throw AuctionError(ErrorCode::kInvalidScenario, "unknown mode '" + std::string(text) + "'");
}

AdversaryKind parse_adversary(std::string_view text) {
  for (AdversaryKind a : {AdversaryKind::kFixed, AdversaryKind::kCopycat,
                          AdversaryKind::kUndercut, AdversaryKind::kDpOptimal}) {
    if (to_string(a) == text) return a;
  }
  throw AuctionError(ErrorCode::kInvalidScenario,
                     "unknown adversary '" + std::string(text) + "'");
}

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw AuctionError(ErrorCode::kInvalidScenario, what);
}

void require_adversary(const Scenario& s, std::initializer_list<AdversaryKind> allowed) {
  if (std::find(allowed.begin(), allowed.end(), s.adversary) == allowed.end()) {
    invalid("adversary '" + std::string(to_string(s.adversary)) + "' is not available in " +
            std::string(to_string(s.mode)) + " mode");
  }
}

void require_fixed_budget(const Scenario& s, std::size_t expected_len) {
  if (s.fixed_bids.size() != expected_len) {
    invalid("fixed adversary needs " + std::to_string(expected_len) + " bids, got " +
            std::to_string(s.fixed_bids.size()));
  }
  Rational sum(0);
  for (const Rational& b : s.fixed_bids) {
    if (sgn(b) < 0) invalid("fixed bids must be nonnegative");
    sum += b;
  }
  if (sum > 1) invalid("fixed bids exceed the unit budget");
}

std::vector<double> to_doubles(std::span<const Rational> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(to_double(v));
  return out;
}

std::vector<std::string> standard_labels(int k) {
  std::vector<std::string> labels{"A"};
  if (k == 2) {
    labels.emplace_back("B");
  } else {
    for (int j = 1; j < k; ++j) labels.push_back("B" + std::to_string(j));
  }
  return labels;
}

// Exact adversary value v0: the disadvantaged bidders split n - v0 equally.
std::vector<std::optional<Rational>> split_exact(int n, int k, const Rational& adversary) {
  std::vector<std::optional<Rational>> exact{adversary};
  const Rational rest = (Rational(n) - adversary) / (k - 1);
  for (int j = 1; j < k; ++j) exact.emplace_back(rest);
  return exact;
}

void fill_estimates(Report& report, const AuctionTally& tally) {
  report.zero_sum_violations = tally.zero_sum_violations;
  for (std::size_t j = 0; j < report.bidders.size(); ++j) {
    report.estimates.push_back(tally.estimate(j));
  }
}

// Two-bidder and k-bidder modes: the disadvantaged bidders use the optimal
// F_k sampler; the adversary plays fixed bids or copies them.
void run_marginal_mode(const Scenario& s, Report& report) {
  const int n = s.n;
  const int k = s.k;
  const std::size_t bidders = static_cast<std::size_t>(k);
  const MarginalSpec spec(n, k);
  report.bidders = standard_labels(k);

  const bool copycat = s.adversary == AdversaryKind::kCopycat;
  const std::vector<double> fixed = to_doubles(s.fixed_bids);
  if (copycat) {
    report.exact = split_exact(n, k, make_rational(n, k));
  } else {
    report.exact = split_exact(n, k, wins_vs_marginal(spec, std::span<const Rational>(s.fixed_bids)));
  }

  std::vector<std::vector<double>> coords(static_cast<std::size_t>(n),
                                          std::vector<double>(s.samples));
  const std::size_t chunks = (s.samples + kDefaultChunkSize - 1) / kDefaultChunkSize;
  std::vector<double> chunk_deviation(chunks, 0.0);

  const std::int64_t unit = tie_unit(bidders);
  const AuctionTally tally = tally_auctions(
      bidders, unit, unit * n, s.samples, s.seed,
      [&](std::size_t draw, RngStream& rng, std::span<std::int64_t> units) {
        std::vector<std::vector<double>> profiles;
        profiles.reserve(bidders);
        profiles.push_back(copycat ? draw_disadvantaged(n, k, rng) : fixed);
        for (int j = 1; j < k; ++j) profiles.push_back(draw_disadvantaged(n, k, rng));

        double& dev = chunk_deviation[draw / kDefaultChunkSize];
        for (std::size_t j = copycat ? 0 : 1; j < bidders; ++j) {
          const double sum = std::accumulate(profiles[j].begin(), profiles[j].end(), 0.0);
          dev = std::max(dev, std::abs(sum - 1.0));
        }
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i][draw] = profiles[1][i];

        std::vector<std::span<const double>> views(profiles.begin(), profiles.end());
        resolve_units(views, units);
      },
      s.threads);
  fill_estimates(report, tally);
  report.max_sum_deviation = *std::max_element(chunk_deviation.begin(), chunk_deviation.end());

  const double threshold = ks_threshold(s.samples);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::sort(coords[i].begin(), coords[i].end());
    const double d = ks_distance(
        coords[i], [&](double b) { return b < 0.0 ? 0.0 : cdf_F(spec, b); });
    report.ks.push_back(KsEntry{static_cast<int>(i + 1), d, threshold});
  }
}

void shuffle_indices(std::vector<std::size_t>& idx, RngStream& rng) {
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = idx.size(); i > 1; --i) {
    std::swap(idx[i - 1], idx[rng.below(i)]);
  }
}

// Disadvantaged bidders permute the c-sequence uniformly at random.
void run_position_mode(const Scenario& s, Report& report) {
  const int n = s.n;
  const int k = s.k;
  const std::size_t bidders = static_cast<std::size_t>(k);
  const CSequence seq = c_sequence(n, k);
  const BidSequence c_bids = seq.as_bids();
  report.bidders = standard_labels(k);

  BidSequence adversary;
  bool adversary_permutes = false;
  switch (s.adversary) {
    case AdversaryKind::kFixed:
      adversary = bids_from_rationals(s.fixed_bids);
      break;
    case AdversaryKind::kCopycat:
      adversary = c_bids;
      adversary_permutes = true;
      break;
    case AdversaryKind::kUndercut:
      adversary = undercut_strategy(c_bids);
      break;
    case AdversaryKind::kDpOptimal:
      adversary = best_response(n, k).witness;
      break;
  }
  const auto uniform = PermutationMarginals::uniform(n);
  const auto placement = adversary_permutes ? uniform : PermutationMarginals::identity(n);
  report.exact = split_exact(n, k, expected_wins_perm(k, adversary, c_bids, placement, uniform));

  const std::int64_t unit = tie_unit(bidders);
  const AuctionTally tally = tally_auctions(
      bidders, unit, unit * n, s.samples, s.seed,
      [&](std::size_t, RngStream& rng, std::span<std::int64_t> units) {
        std::vector<std::vector<std::size_t>> placed(bidders, std::vector<std::size_t>(c_bids.size()));
        if (adversary_permutes) {
          shuffle_indices(placed[0], rng);
        } else {
          std::iota(placed[0].begin(), placed[0].end(), std::size_t{0});
        }
        for (std::size_t j = 1; j < bidders; ++j) shuffle_indices(placed[j], rng);
        for (std::size_t obj = 0; obj < c_bids.size(); ++obj) {
          score_object(
              bidders,
              [&](std::size_t j) -> const Bid& {
                return j == 0 ? adversary[placed[0][obj]] : c_bids[placed[j][obj]];
              },
              [](std::size_t) { return false; }, unit, units);
        }
      },
      s.threads);
  fill_estimates(report, tally);
}

std::vector<Strategy> sequential_lineup(const Scenario& s) {
  std::vector<Strategy> lineup{steady_strategy(s.n, s.k)};
  for (int j = 1; j < s.k; ++j) {
    lineup.push_back(s.adversary == AdversaryKind::kCopycat
                         ? steady_strategy(s.n, s.k)
                         : scheduled_strategy(s.fixed_bids, "opponent" + std::to_string(j)));
  }
  return lineup;
}

// Bidder 0 plays the steady k/n strategy; the others copy it or follow the
// fixed schedule. Sampled runs break ties at random.
void run_sequential_mode(const Scenario& s, Report& report) {
  const std::vector<Strategy> lineup = sequential_lineup(s);
  report.bidders.emplace_back("steady");
  for (int j = 1; j < s.k; ++j) report.bidders.push_back("opponent" + std::to_string(j));

  const SequentialResult exact = run_sequential(lineup, s.n, s.seed);
  for (const Rational& w : exact.wins) report.exact.emplace_back(w);

  const std::size_t bidders = lineup.size();
  const AuctionTally tally = tally_auctions(
      bidders, 1, -1, s.samples, s.seed,
      [&](std::size_t, RngStream& rng, std::span<std::int64_t> units) {
        const SequentialResult run = run_sequential_sampled(lineup, s.n, rng);
        for (std::size_t j = 0; j < bidders; ++j) {
          units[j] = static_cast<std::int64_t>(run.wins[j].get_num().get_si());
        }
      },
      s.threads);
  fill_estimates(report, tally);
}

void run_group_mode(const Scenario& s, Report& report) {
  report.bidders = {"A"};
  const Rational value = group_wins(s.group_sizes, s.k, s.fixed_bids);
  report.exact = {value};
  report.estimates = {McEstimate{to_double(value), 0.0, 0}};
}

}  // namespace

void validate(const Scenario& s) {
  if (s.k < 2) invalid("k must be at least 2");
  if (s.mode != Mode::kGroup) {
    if (s.n < s.k) invalid("n must be at least k");
    if (s.samples == 0) invalid("samples must be positive");
  }
  switch (s.mode) {
    case Mode::kTwoBidder:
      if (s.k != 2) invalid("two-bidder mode requires k = 2");
      require_adversary(s, {AdversaryKind::kFixed, AdversaryKind::kCopycat});
      if (s.adversary == AdversaryKind::kFixed) require_fixed_budget(s, static_cast<std::size_t>(s.n));
      break;
    case Mode::kKBidder:
      if (s.n % s.k != 0) invalid("k-bidder mode requires k to divide n");
      require_adversary(s, {AdversaryKind::kFixed, AdversaryKind::kCopycat});
      if (s.adversary == AdversaryKind::kFixed) require_fixed_budget(s, static_cast<std::size_t>(s.n));
      break;
    case Mode::kPositionRandomized:
      if (s.adversary == AdversaryKind::kFixed) {
        require_fixed_budget(s, static_cast<std::size_t>(s.n));
        if (!validate_sequence(bids_from_rationals(s.fixed_bids)).ok()) {
          invalid("fixed bids must be positive and within budget");
        }
      }
      break;
    case Mode::kSequential:
      if (s.n % s.k != 0) invalid("sequential mode requires k to divide n");
      require_adversary(s, {AdversaryKind::kFixed, AdversaryKind::kCopycat});
      if (s.adversary == AdversaryKind::kFixed) {
        if (s.fixed_bids.empty()) invalid("fixed opponents need a bid schedule");
        for (const Rational& b : s.fixed_bids) {
          if (sgn(b) < 0) invalid("schedule bids must be nonnegative");
        }
      }
      break;
    case Mode::kGroup:
      require_adversary(s, {AdversaryKind::kFixed});
      if (s.group_sizes.empty()) invalid("group mode needs group sizes");
      for (const Rational& g : s.group_sizes) {
        if (sgn(g) <= 0) invalid("group sizes must be positive");
      }
      if (s.fixed_bids.size() != s.group_sizes.size()) invalid("one fixed bid per group required");
      {
        Rational spent(0);
        for (std::size_t i = 0; i < s.fixed_bids.size(); ++i) {
          if (sgn(s.fixed_bids[i]) < 0) invalid("group bids must be nonnegative");
          spent += s.group_sizes[i] * s.fixed_bids[i];
        }
        if (spent > 1) invalid("group bids exceed the unit budget");
      }
      break;
  }
}

Report estimate(const Scenario& scenario) {
  validate(scenario);
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.scenario = scenario;
  report.meta.seed = scenario.seed;
  report.meta.samples = scenario.mode == Mode::kGroup ? 0 : scenario.samples;

  switch (scenario.mode) {
    case Mode::kTwoBidder:
    case Mode::kKBidder:
      run_marginal_mode(scenario, report);
      break;
    case Mode::kPositionRandomized:
      run_position_mode(scenario, report);
      break;
    case Mode::kSequential:
      run_sequential_mode(scenario, report);
      break;
    case Mode::kGroup:
      run_group_mode(scenario, report);
      break;
  }
  report.meta.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

double ks_distance(std::span<const double> sorted_sample,
                   const std::function<double(double)>& cdf) {
  if (sorted_sample.empty()) throw AuctionError(ErrorCode::kEmptySample, "empty sample");
  const double n = static_cast<double>(sorted_sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
    const double x = sorted_sample[i];
    const double above = static_cast<double>(i + 1) / n - cdf(x);
    const double left = cdf(std::nextafter(x, -std::numeric_limits<double>::infinity()));
    const double below = left - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  return d;
}

double ks_threshold(std::size_t samples) {
  return 1.95 / std::sqrt(static_cast<double>(samples));
}

}  // namespace auctionlab
