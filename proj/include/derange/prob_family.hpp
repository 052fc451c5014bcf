#pragma once

#include <vector>

#include "derange/moments.hpp"
#include "derange/rational.hpp"
#include "derange/series.hpp"

namespace derange {

/// Ambient data for the probabilistic degenerate families: one random
/// variable Y, one degeneracy parameter lambda, and a maximal index n_max.
/// Construction precomputes every lambda/Y-dependent table the family
/// operations need (factorial moments, the moment series and its powers, the
/// probabilistic Stirling triangle, Euler numbers), after which the context
/// is immutable and freely shareable across threads.
class ProbContext {
 public:
  ProbContext(MomentProfile Y, Rational lambda, int n_max);

  const MomentProfile& profile() const { return Y_; }
  const Rational& lambda() const { return lambda_; }
  int n_max() const { return n_max_; }
  /// Truncation order used for every series in this context (n_max + 1).
  int order() const { return n_max_ + 1; }

  const Series& mgf_plus() const { return mgf_plus_; }
  const Series& mgf_minus() const { return mgf_minus_; }

  /// E[(Y)_{n,lam}] and E[<Y>_{n,lam}] for n <= order().
  const Rational& falling_moment(int n) const { return mu_[static_cast<size_t>(n)]; }
  const Rational& rising_moment(int n) const { return rho_[static_cast<size_t>(n)]; }

 private:
  friend Rational stirling2_prob(const ProbContext&, int, int);
  friend Rational euler_prob(const ProbContext&, int);

  MomentProfile Y_;
  Rational lambda_;
  int n_max_;
  std::vector<Rational> mu_;   // falling factorial moments, 0..order()
  std::vector<Rational> rho_;  // rising factorial moments, 0..order()
  Series mgf_plus_;
  Series mgf_minus_;
  std::vector<std::vector<Rational>> stirling_;  // {n brace k}_{Y,lam}, k <= n <= n_max
  std::vector<Rational> euler_;                  // E^Y_{n,lam}, 0..n_max
};

/// Probabilistic degenerate Stirling numbers of the second kind
/// {n brace k}_{Y,lam} = (1/k!) sum_j binom(k,j) (-1)^{k-j} E[(S_j)_{n,lam}].
Rational stirling2_prob(const ProbContext& ctx, int n, int k);

/// Probabilistic degenerate Bell polynomial: sum_k {n brace k}_{Y,lam} x^k.
Rational bell_prob(const ProbContext& ctx, int n, const Rational& x);

/// Probabilistic degenerate Fubini polynomial: sum_k {n brace k}_{Y,lam} k! x^k.
Rational fubini_prob(const ProbContext& ctx, int n, const Rational& x);

/// Probabilistic degenerate Euler numbers, defined by
/// 2/(E[e_lam^Y(t)] + 1); computed by the triangular recurrence that
/// definition induces on the factorial moments.
Rational euler_prob(const ProbContext& ctx, int n);

/// Probabilistic degenerate derangement polynomial
/// d^Y_{n,lam}(x) = n! sum_{k<=n} E[(x-Y)_{k,lam}]/k!.
Rational derange_prob(const ProbContext& ctx, int n, const Rational& x);

/// Probabilistic degenerate r-derangement numbers: 0 for n < r, otherwise
/// n! sum_{k=r}^{n} binom(k,r) (-1)^{n-k} E[<Y>_{n-k,lam}]/(n-k)!.
Rational derange_prob_r(const ProbContext& ctx, int r, int n);

/// Probabilistic degenerate derangement polynomial of the second kind
/// D^Y_{n,lam}(x) = n! sum_{k<=n} ((-1)^k/k!) E[<Y>_{k,lam}] x^{n-k}.
Rational derange2_prob(const ProbContext& ctx, int n, const Rational& x);

}  // namespace derange
