#pragma once

// Brute-force references for the position-randomized closed forms: direct
// enumeration of opponent placements and of joint permutation draws, scored
// by the engine.

#include <algorithm>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "auctionlab/engine.hpp"
#include "auctionlab/position_randomized.hpp"

namespace auctionlab::oracle {

inline long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Enumerates every placement of the k-1 opponents' uniformly chosen c-indices
// on one object and splits ties 1/(ties+1).
inline Rational sharp_p_brute_force(int n, int k, int p) {
  const int opponents = k - 1;
  Rational total(0);
  std::vector<int> idx(static_cast<std::size_t>(opponents), 1);
  for (;;) {
    int ties = 0;
    bool beaten = false;
    for (int v : idx) {
      if (v == p) ++ties;
      if (v > p) beaten = true;
    }
    if (!beaten) total += make_rational(1, ties + 1);
    int pos = 0;
    while (pos < opponents && idx[static_cast<std::size_t>(pos)] == n) {
      idx[static_cast<std::size_t>(pos)] = 1;
      ++pos;
    }
    if (pos == opponents) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
  return total / ipow(n, opponents);
}

// A distribution over permutations given as (weight, permutation) pairs.
struct PermMixture {
  std::vector<Rational> weights;
  std::vector<std::vector<int>> perms;  // perms[m][q] = object of bid q

  PermutationMarginals marginals(int n) const {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (int qi = 0; qi < n; ++qi) {
        m[static_cast<std::size_t>(qi)][static_cast<std::size_t>(perms[i][static_cast<std::size_t>(qi)])] += weights[i];
      }
    }
    return PermutationMarginals(std::move(m));
  }
};

inline PermMixture random_mixture(std::mt19937_64& gen, int n, int parts) {
  PermMixture mix;
  long total = 0;
  std::vector<long> raw;
  for (int i = 0; i < parts; ++i) {
    raw.push_back(1 + static_cast<long>(gen() % 5));
    total += raw.back();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), gen);
    mix.perms.push_back(p);
  }
  for (long r : raw) mix.weights.push_back(make_rational(r, total));
  return mix;
}

inline BidSequence place(std::span<const Bid> init, const std::vector<int>& perm) {
  BidSequence out(init.size());
  for (std::size_t qi = 0; qi < init.size(); ++qi) out[static_cast<std::size_t>(perm[qi])] = init[qi];
  return out;
}

// Full joint enumeration of the adversary's and every opponent's permutation.
inline Rational joint_enumeration(int k, std::span<const Bid> a, std::span<const Bid> b,
                           const PermMixture& qa, const PermMixture& pb) {
  Rational total(0);
  const int opponents = k - 1;
  std::vector<std::size_t> choice(static_cast<std::size_t>(opponents), 0);
  for (std::size_t ia = 0; ia < qa.perms.size(); ++ia) {
    std::fill(choice.begin(), choice.end(), 0);
    for (;;) {
      Rational w = qa.weights[ia];
      std::vector<BidSequence> profiles{place(a, qa.perms[ia])};
      for (std::size_t c : choice) {
        w *= pb.weights[c];
        profiles.push_back(place(b, pb.perms[c]));
      }
      total += w * resolve(profiles).expected_wins[0];
      std::size_t pos = 0;
      while (pos < choice.size() && choice[pos] + 1 == pb.perms.size()) choice[pos++] = 0;
      if (pos == choice.size()) break;
      ++choice[pos];
    }
  }
  return total;
}

}  // namespace auctionlab::oracle
