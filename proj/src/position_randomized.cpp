#include "auctionlab/position_randomized.hpp"

#include <algorithm>
#include <string>

#include "auctionlab/error.hpp"

namespace auctionlab {

namespace {

std::int64_t ipow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

mpz_class binomial(unsigned n, unsigned r) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

void require_nk(int n, int k) {
  if (k < 2 || n < k) {
    throw AuctionError(ErrorCode::kDomainError,
                       "need n >= k >= 2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

}  // namespace

CSequence c_sequence(int n, int k) {
  require_nk(n, k);
  CSequence seq;
  seq.n = n;
  seq.k = k;
  for (int i = 1; i <= n; ++i) seq.beta += ipow(i, k - 1);
  seq.c.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) seq.c.push_back(make_rational(ipow(i, k - 1), seq.beta));
  return seq;
}

Rational sharp_p(int n, int k, int p) {
  require_nk(n, k);
  if (p < 1 || p > n) throw AuctionError(ErrorCode::kDomainError, "p must lie in 1..n");
  const Rational tie = make_rational(1, n);
  const Rational below = make_rational(p - 1, n);
  Rational total(0);
  for (int i = 0; i <= k - 1; ++i) {
    Rational term = make_rational(1, i + 1) * Rational(binomial(k - 1, i));
    term *= rational_pow(tie, static_cast<unsigned>(i));
    term *= rational_pow(below, static_cast<unsigned>(k - 1 - i));
    total += term;
  }
  return total;
}

PermutationMarginals::PermutationMarginals(std::vector<std::vector<Rational>> entries)
    : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  std::vector<Rational> col(n, Rational(0));
  for (const auto& row : entries_) {
    if (row.size() != n) {
      throw AuctionError(ErrorCode::kNotDoublyStochastic, "matrix is not square");
    }
    Rational row_sum(0);
    for (std::size_t r = 0; r < n; ++r) {
      if (sgn(row[r]) < 0) {
        throw AuctionError(ErrorCode::kNotDoublyStochastic, "negative entry");
      }
      row_sum += row[r];
      col[r] += row[r];
    }
    if (row_sum != 1) throw AuctionError(ErrorCode::kNotDoublyStochastic, "row sum is not 1");
  }
  for (const Rational& c : col) {
    if (c != 1) throw AuctionError(ErrorCode::kNotDoublyStochastic, "column sum is not 1");
  }
}

PermutationMarginals PermutationMarginals::identity(int n) {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
  return PermutationMarginals(std::move(m));
}

PermutationMarginals PermutationMarginals::uniform(int n) {
  return PermutationMarginals(std::vector<std::vector<Rational>>(
      static_cast<std::size_t>(n),
      std::vector<Rational>(static_cast<std::size_t>(n), make_rational(1, n))));
}

Rational expected_wins_perm(int k, std::span<const Bid> a_init, std::span<const Bid> b_init,
                            const PermutationMarginals& Q, const PermutationMarginals& P) {
  if (k < 2) throw AuctionError(ErrorCode::kDomainError, "need k >= 2");
  const int n = static_cast<int>(a_init.size());
  if (static_cast<int>(b_init.size()) != n || Q.size() != n || P.size() != n) {
    throw AuctionError(ErrorCode::kLengthMismatch, "sequences and matrices must share n");
  }
  std::vector<mpz_class> binom;
  for (int i = 0; i < k; ++i) binom.push_back(binomial(static_cast<unsigned>(k - 1), i));

  Rational total(0);
  for (int r = 0; r < n; ++r) {
    for (int q = 0; q < n; ++q) {
      const Rational& placed = Q(q, r);
      if (sgn(placed) == 0) continue;
      const Bid& a = a_init[static_cast<std::size_t>(q)];
      // One opponent's bid on object r: below a with prob `lose`, equal with `tie`.
      Rational lose(0);
      Rational tie(0);
      for (int s = 0; s < n; ++s) {
        const auto c = compare_bids(b_init[static_cast<std::size_t>(s)], a);
        if (c < 0) lose += P(s, r);
        if (c == 0) tie += P(s, r);
      }
      Rational win(0);
      for (int i = 0; i <= k - 1; ++i) {
        win += Rational(binom[static_cast<std::size_t>(i)]) / (i + 1) *
               rational_pow(tie, static_cast<unsigned>(i)) *
               rational_pow(lose, static_cast<unsigned>(k - 1 - i));
      }
      total += placed * win;
    }
  }
  return total;
}

BestResponse best_response(int n, int k) {
  const CSequence seq = c_sequence(n, k);
  const std::int64_t capacity = seq.beta - 1;
  const std::size_t width = static_cast<std::size_t>(capacity) + 1;

  // parent[picks][sum] = item index i (2..n) used last, 1 for the empty
  // start state, 0 for unreachable.
  std::vector<std::vector<std::uint8_t>> parent(
      static_cast<std::size_t>(n) + 1, std::vector<std::uint8_t>(width, 0));
  parent[0][0] = 1;
  for (int picks = 1; picks <= n; ++picks) {
    const auto& prev = parent[static_cast<std::size_t>(picks - 1)];
    auto& cur = parent[static_cast<std::size_t>(picks)];
    for (int i = 2; i <= n; ++i) {
      const std::int64_t w = ipow(i, k - 1);
      for (std::int64_t s = w; s <= capacity; ++s) {
        if (cur[static_cast<std::size_t>(s)] == 0 && prev[static_cast<std::size_t>(s - w)] != 0) {
          cur[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(i);
        }
      }
    }
  }

  std::int64_t best_sum = 0;
  int best_picks = 0;
  for (int picks = 0; picks <= n; ++picks) {
    for (std::int64_t s = capacity; s > best_sum; --s) {
      if (parent[static_cast<std::size_t>(picks)][static_cast<std::size_t>(s)] != 0) {
        best_sum = s;
        best_picks = picks;
        break;
      }
    }
  }

  BestResponse out;
  std::int64_t s = best_sum;
  for (int picks = best_picks; picks > 0; --picks) {
    const int i = parent[static_cast<std::size_t>(picks)][static_cast<std::size_t>(s)];
    out.witness_index.push_back(i);
    s -= ipow(i, k - 1);
  }
  out.witness_index.resize(static_cast<std::size_t>(n), 0);
  std::sort(out.witness_index.begin(), out.witness_index.end());
  for (int i : out.witness_index) {
    out.witness.push_back(i == 0 ? Bid(Rational(0), 1)
                                 : Bid(seq.c[static_cast<std::size_t>(i - 1)], 1));
  }
  // Each c_i + eps wins (i/n)^(k-1) = i^(k-1) / n^(k-1).
  out.value = make_rational(best_sum, ipow(n, k - 1));
  return out;
}

BidSequence undercut_strategy(std::span<const Bid> b_sorted) {
  const std::size_t n = b_sorted.size();
  if (n == 0) throw AuctionError(ErrorCode::kDomainError, "empty bid sequence");
  Rational sum(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && compare_bids(b_sorted[i - 1], b_sorted[i]) > 0) {
      throw AuctionError(ErrorCode::kDomainError, "bids must be ascending");
    }
    sum += b_sorted[i].base;
  }
  if (sum != 1) throw AuctionError(ErrorCode::kDomainError, "bids must sum to 1");
  require_feasible(b_sorted);

  BidSequence out(b_sorted.begin(), b_sorted.end());
  out[0].eps -= static_cast<std::int64_t>(n - 1);
  for (std::size_t i = 1; i < n; ++i) out[i].eps += 1;
  if (!out[0].is_positive()) {
    throw AuctionError(ErrorCode::kInfeasible, "undercutting the smallest bid leaves it non-positive");
  }
  return out;
}

}  // namespace auctionlab
