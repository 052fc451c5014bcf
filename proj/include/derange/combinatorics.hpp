#pragma once

#include <memory>

#include "derange/rational.hpp"
#include "derange/series.hpp"

namespace derange {

/// Degenerate falling factorial x(x-lambda)(x-2*lambda)...(x-(n-1)lambda);
/// 1 for n = 0.
Rational falling_deg(const Rational& x, int n, const Rational& lambda);

/// Degenerate rising factorial x(x+lambda)...(x+(n-1)lambda); 1 for n = 0.
/// Satisfies rising_deg(x,n,lambda) = (-1)^n falling_deg(-x,n,lambda).
Rational rising_deg(const Rational& x, int n, const Rational& lambda);

/// Signed Stirling numbers of the first kind: (x)_n = sum_k S1(n,k) x^k.
/// Integer-valued; indices must satisfy 0 <= k <= n.
Rational stirling1(int n, int k);

/// Degenerate Stirling numbers of the second kind: the coefficients
/// converting degenerate falling factorials into ordinary falling factorials,
/// computed by solving that triangular basis-change system exactly.
Rational stirling2_deg(int n, int k, const Rational& lambda);

/// Unsigned degenerate Stirling numbers of the first kind: j!/l! times the
/// t^j coefficient of (-log_lambda(1-t))^l / ... i.e. of (1-(1-t)^lambda)^l
/// normalized by lambda^l l!. At lambda = 0 these are the classical unsigned
/// Stirling numbers of the first kind.
Rational stirling1_deg_unsigned(int j, int l, const Rational& lambda);

/// Derangement polynomial d_n(x) = n! sum_{k<=n} (x-1)^k / k!; d_n(0) is the
/// n-th derangement number.
Rational derangement_poly(int n, const Rational& x);

/// Degenerate derangement polynomial d_{n,lam}(x) = n! sum_{k<=n} (x-1)_{k,lam}/k!.
Rational derangement_deg_poly(int n, const Rational& x, const Rational& lambda);

/// Degenerate derangement polynomial of the second kind
/// D_{n,lam}(x) = n! sum_{k<=n} ((-1)_{k,lam}/k!) x^{n-k}; D_{n,lam}(1) equals
/// the degenerate derangement number d_{n,lam}.
Rational derangement2_deg_poly(int n, const Rational& x, const Rational& lambda);

/// Degenerate Fubini polynomial F_{n,lam}(x) = sum_k {n brace k}_lam k! x^k.
Rational fubini_deg(int n, const Rational& x, const Rational& lambda);

enum class TriangleKind { stirling1, stirling2_degenerate, stirling1_unsigned_degenerate };

/// One fully built triangular table of special numbers, indexed (n, k) with
/// 0 <= k <= n <= n_max; entries above the diagonal read as zero. Immutable
/// after construction, safe to share across threads.
class TriangleCache {
 public:
  TriangleCache(TriangleKind kind, const Rational& lambda, int n_max);

  const Rational& at(int n, int k) const;
  TriangleKind kind() const { return kind_; }
  const Rational& lambda() const { return lambda_; }
  int n_max() const { return n_max_; }

 private:
  void build_stirling1();
  void build_stirling2_degenerate();
  void build_stirling1_unsigned_degenerate();

  TriangleKind kind_;
  Rational lambda_;
  int n_max_;
  std::vector<std::vector<Rational>> rows_;
};

/// Process-wide memo of triangles keyed by (kind, lambda); tables grow as
/// larger n_max values are requested. Construction happens once per key under
/// a lock, lookups hand out shared snapshots.
std::shared_ptr<const TriangleCache> shared_triangle(TriangleKind kind, const Rational& lambda,
                                                     int n_max);

}  // namespace derange
