#include "auctionlab/engine.hpp"

#include <sstream>

namespace auctionlab {

std::string Bid::to_string() const {
  std::ostringstream os;
  os << base.get_str();
  if (eps > 0) os << "+" << eps << "eps";
  if (eps < 0) os << eps << "eps";
  return os.str();
}

std::strong_ordering compare_bids(const Bid& a, const Bid& b) {
  const int c = cmp(a.base, b.base);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return a.eps <=> b.eps;
}

BidSequence bids_from_doubles(std::span<const double> values) {
  BidSequence out;
  out.reserve(values.size());
  for (double v : values) out.push_back(Bid::from_double(v));
  return out;
}

BidSequence bids_from_rationals(std::span<const Rational> values) {
  return BidSequence(values.begin(), values.end());
}

Verdict validate_sequence(std::span<const Bid> bids) {
  Rational base_sum(0);
  std::int64_t eps_sum = 0;
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (!bids[i].is_positive()) return {Feasibility::kZeroBid, i};
    base_sum += bids[i].base;
    eps_sum += bids[i].eps;
  }
  const int c = cmp(base_sum, 1);
  if (c < 0 || (c == 0 && eps_sum <= 0)) return {};
  return {Feasibility::kOverBudget, std::nullopt};
}

void require_feasible(std::span<const Bid> bids) {
  const Verdict v = validate_sequence(bids);
  switch (v.status) {
    case Feasibility::kFeasible:
      return;
    case Feasibility::kZeroBid:
      throw AuctionError(ErrorCode::kZeroBid,
                         "bid " + std::to_string(*v.offending_index) + " is not positive");
    case Feasibility::kOverBudget:
      throw AuctionError(ErrorCode::kOverBudget, "bids exceed the unit budget");
  }
}

std::int64_t tie_unit(std::size_t k) {
  std::int64_t l = 1;
  for (std::size_t m = 2; m <= k; ++m) l = std::lcm(l, static_cast<std::int64_t>(m));
  return l;
}

Outcome resolve(std::span<const BidSequence> profiles) {
  const std::size_t k = profiles.size();
  if (k == 0) return {};
  const std::size_t n = profiles.front().size();
  for (const auto& p : profiles) {
    if (p.size() != n) {
      throw AuctionError(ErrorCode::kLengthMismatch, "bid sequences differ in length");
    }
  }
  const std::int64_t unit = tie_unit(k);
  std::vector<std::int64_t> units(k, 0);
  for (std::size_t obj = 0; obj < n; ++obj) {
    score_object(
        k, [&](std::size_t j) -> const Bid& { return profiles[j][obj]; },
        [](std::size_t) { return false; }, unit, units);
  }
  Outcome out;
  out.expected_wins.reserve(k);
  for (std::int64_t u : units) out.expected_wins.push_back(make_rational(u, unit));
  return out;
}

void resolve_units(std::span<const std::span<const double>> profiles,
                   std::span<std::int64_t> units_out) {
  const std::size_t k = profiles.size();
  if (k == 0) return;
  const std::size_t n = profiles.front().size();
  for (const auto& p : profiles) {
    if (p.size() != n) {
      throw AuctionError(ErrorCode::kLengthMismatch, "bid sequences differ in length");
    }
  }
  const std::int64_t unit = tie_unit(k);
  for (std::size_t obj = 0; obj < n; ++obj) {
    score_object(
        k, [&](std::size_t j) { return profiles[j][obj]; },
        [](std::size_t) { return false; }, unit, units_out);
  }
}

}  // namespace auctionlab
