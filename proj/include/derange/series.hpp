#pragma once

#include <vector>

#include "derange/rational.hpp"

namespace derange {

/// Truncated formal power series over Rational. A Series of order N carries
/// exactly the coefficients of t^0..t^N; everything past t^N is unknown, so
/// binary operations truncate to the minimum order of their operands and two
/// series are meaningfully comparable only up to that minimum.
///
/// Coefficients follow the ordinary (plain) convention: entry n is the t^n
/// coefficient as-is. Exponential-generating-function extraction (the n!
/// factor) happens at named call sites, never inside this type.
class Series {
 public:
  explicit Series(int order) : coeffs_(check_order(order) + 1) {}
  explicit Series(std::vector<Rational> coeffs);

  static Series constant(const Rational& c, int order);
  /// The identity series t (0, 1, 0, ...).
  static Series identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient-wise equality on t^0..t^min(order, other.order).
  bool agrees_with(const Series& other) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  static int check_order(int order);
  std::vector<Rational> coeffs_;
};

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_neg(const Series& a);
Series series_scale(const Series& a, const Rational& c);

/// Cauchy product truncated at min(order(a), order(b)). Parallelizes across
/// output coefficients when the order is large; exact arithmetic makes the
/// result identical to series_mul_serial either way.
Series series_mul(const Series& a, const Series& b);

/// Plain double-loop reference for series_mul, kept for tests and benchmarks.
Series series_mul_serial(const Series& a, const Series& b);

/// a / b by triangular back-substitution. The divisor must have a nonzero
/// constant term; otherwise throws std::domain_error ("non-invertible series").
Series series_div(const Series& a, const Series& b);

/// outer(inner(t)) by Horner evaluation. inner must have zero constant term
/// (formal composition is undefined otherwise); throws std::domain_error.
Series series_compose(const Series& outer, const Series& inner);

/// a^m by repeated squaring (m >= 0).
Series series_pow(const Series& a, int m);

/// t^r * a, truncated at order(a); top r coefficients fall off.
Series series_shift(const Series& a, int r);

inline Series operator+(const Series& a, const Series& b) { return series_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return series_sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

/// (1+s)^q: coefficient k is the generalized binomial binom(q, k).
Series binomial_pow(const Rational& q, int order);

/// Degenerate exponential (1 + lambda*t)^{x/lambda}: coefficient k is the
/// degenerate falling factorial x(x-lambda)...(x-(k-1)lambda) over k!.
/// lambda must be nonzero; the classical limit lives in exp_series.
Series deg_exp_series(const Rational& x, const Rational& lambda, int order);

/// Series of ((1+s)^lambda - 1)/lambda, the compositional inverse of the
/// degenerate exponential minus one. lambda must be nonzero.
Series deg_log_series(const Rational& lambda, int order);

/// Classical e^{xt}.
Series exp_series(const Rational& x, int order);

/// Classical log(1+t).
Series log1p_series(int order);

/// 1/(1-t): all coefficients 1.
Series geometric_series(int order);

}  // namespace derange
