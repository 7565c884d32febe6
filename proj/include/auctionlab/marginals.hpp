#pragma once

// Closed-form distribution functions and densities behind the optimal
// randomized bidding algorithms.

#include <cstddef>
#include <span>

namespace auctionlab {

// n objects, k bidders, 2 <= k <= n. Every optimal marginal lives on [0, k/n].
class MarginalSpec {
 public:
  MarginalSpec(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  double cap() const { return static_cast<double>(k_) / n_; }

 private:
  int n_;
  int k_;
};

// ((n/k) b)^(1/(k-1)) on [0, k/n], 1 above. Throws DomainError outside [0,1].
double cdf_F(const MarginalSpec& spec, double b);

// Density of F_k: zero above the cap, +infinity at b = 0 when k > 2.
double pdf_f(const MarginalSpec& spec, double b);

// s(v) = (81/2) v / (2 - 3v) on [0, 2/3).
double density_s(double v);

// s(|x-y| + |y-z| + |z-x|) on the cube [0,1/3]^3. Returns +infinity on the
// measure-zero pole max - min == 1/3.
double density_h(double x, double y, double z);

// Closed form of the integral of density_h over z, for 0 < x, y < 1/3.
double r_closed(double x, double y);

// Dirichlet normalizer Gamma(a)^k / Gamma(k a), a = 1/(k-1): the integral of
// (b_1 ... b_k)^(a-1) over the unit simplex.
double simplex_normalizer(int k);

// (prod b_i)^(1/(k-1) - 1) / simplex_normalizer(k) on the open simplex.
// Throws DomainError if b is not strictly positive or does not sum to 1.
double density_g(std::span<const double> b);

}  // namespace auctionlab
