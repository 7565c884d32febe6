#pragma once

// One-shot sealed-bid multi-object auction resolution.
//
// Every bidder has budget 1 and submits one bid per object. Each object goes
// to the highest bid; m tied maxima each score 1/m. Bids carry an integer
// coefficient on a symbolic positive infinitesimal so that "just above b" and
// "just below b" can be expressed without spending real budget.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "auctionlab/error.hpp"
#include "auctionlab/rational.hpp"

namespace auctionlab {

struct Bid {
  Rational base;
  std::int64_t eps = 0;

  Bid() = default;
  Bid(Rational b, std::int64_t e = 0) : base(std::move(b)), eps(e) {}

  static Bid from_double(double b, std::int64_t e = 0) {
    return Bid(rational_from_double(b), e);
  }

  // base > 0, or base == 0 with a positive infinitesimal part.
  bool is_positive() const { return sgn(base) > 0 || (sgn(base) == 0 && eps > 0); }

  std::string to_string() const;
};

std::strong_ordering compare_bids(const Bid& a, const Bid& b);

inline std::strong_ordering operator<=>(const Bid& a, const Bid& b) {
  return compare_bids(a, b);
}
inline bool operator==(const Bid& a, const Bid& b) {
  return compare_bids(a, b) == std::strong_ordering::equal;
}

using BidSequence = std::vector<Bid>;

BidSequence bids_from_doubles(std::span<const double> values);
BidSequence bids_from_rationals(std::span<const Rational> values);

enum class Feasibility { kFeasible, kZeroBid, kOverBudget };

struct Verdict {
  Feasibility status = Feasibility::kFeasible;
  std::optional<std::size_t> offending_index;  // set for kZeroBid

  bool ok() const { return status == Feasibility::kFeasible; }
};

// Sum of bases < 1, or == 1 with non-positive net infinitesimal. Zero bids are
// reported before budget violations.
Verdict validate_sequence(std::span<const Bid> bids);

// Throws AuctionError(kZeroBid / kOverBudget) unless feasible.
void require_feasible(std::span<const Bid> bids);

struct Outcome {
  std::vector<Rational> expected_wins;  // per bidder; sums to n
};

// Resolves k bid profiles of equal length n.
Outcome resolve(std::span<const BidSequence> profiles);

// lcm(1..k): every per-object share 1/m with m <= k is an integer multiple of
// 1/tie_unit(k).
std::int64_t tie_unit(std::size_t k);

// Scores one object in integer units of 1/tie_unit(k): the owners of the
// maximal bid each receive unit/m. `bid_of(j)` returns bidder j's bid (any
// totally ordered type); `skip(j)` marks bidders absent on this object.
template <class BidOf, class Skip>
void score_object(std::size_t k, BidOf bid_of, Skip skip, std::int64_t unit,
                  std::span<std::int64_t> units_out) {
  std::size_t ties = 0;
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < k; ++j) {
    if (skip(j)) continue;
    if (!best) {
      best = j;
      ties = 1;
      continue;
    }
    const auto c = bid_of(j) <=> bid_of(*best);
    if (c > 0) {
      best = j;
      ties = 1;
    } else if (c == 0) {
      ++ties;
    }
  }
  if (!best) return;
  const std::int64_t share = unit / static_cast<std::int64_t>(ties);
  for (std::size_t j = *best; j < k; ++j) {
    if (!skip(j) && (bid_of(j) <=> bid_of(*best)) == 0) units_out[j] += share;
  }
}

// Floating-point fast path used by the Monte Carlo harness: resolves profiles
// of doubles (compared exactly, as their dyadic values) and adds each bidder's
// wins, in units of 1/tie_unit(k), to `units_out`.
void resolve_units(std::span<const std::span<const double>> profiles,
                   std::span<std::int64_t> units_out);

}  // namespace auctionlab
