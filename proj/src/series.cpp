#include "derange/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace derange {

namespace {
// Below this order the OpenMP fork/join overhead dwarfs the convolution work.
constexpr int kParallelMinOrder = 48;
}  // namespace

int Series::check_order(int order) {
  if (order < 0) throw std::invalid_argument("Series: negative truncation order");
  return order;
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("Series: empty coefficient list");
}

Series Series::constant(const Rational& c, int order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::identity(int order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = Rational(1);
  return s;
}

bool Series::agrees_with(const Series& other) const {
  int n = std::min(order(), other.order());
  for (int k = 0; k <= n; ++k)
    if (coeffs_[static_cast<size_t>(k)] != other.coeffs_[static_cast<size_t>(k)]) return false;
  return true;
}

Series series_add(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a[k] + b[k];
  return Series(std::move(c));
}

Series series_sub(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a[k] - b[k];
  return Series(std::move(c));
}

Series series_neg(const Series& a) {
  std::vector<Rational> c(static_cast<size_t>(a.order()) + 1);
  for (int k = 0; k <= a.order(); ++k) c[static_cast<size_t>(k)] = -a[k];
  return Series(std::move(c));
}

Series series_scale(const Series& a, const Rational& c) {
  std::vector<Rational> out(static_cast<size_t>(a.order()) + 1);
  for (int k = 0; k <= a.order(); ++k) out[static_cast<size_t>(k)] = a[k] * c;
  return Series(std::move(out));
}

Series series_mul_serial(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Rational acc;
    for (int j = 0; j <= i; ++j) acc += a[j] * b[i - j];
    c[static_cast<size_t>(i)] = std::move(acc);
  }
  return Series(std::move(c));
}

Series series_mul(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  // Each output coefficient is an independent convolution sum; exact rational
  // arithmetic keeps the parallel result bit-identical to the serial one.
#pragma omp parallel for schedule(dynamic, 8) if (n >= kParallelMinOrder)
  for (int i = 0; i <= n; ++i) {
    Rational acc;
    for (int j = 0; j <= i; ++j) acc += a[j] * b[i - j];
    c[static_cast<size_t>(i)] = std::move(acc);
  }
  return Series(std::move(c));
}

Series series_div(const Series& a, const Series& b) {
  if (b[0].is_zero())
    throw std::domain_error("non-invertible series: divisor has zero constant term");
  int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Rational acc = a[i];
    for (int j = 1; j <= i; ++j) acc -= b[j] * c[static_cast<size_t>(i - j)];
    c[static_cast<size_t>(i)] = acc / b[0];
  }
  return Series(std::move(c));
}

Series series_compose(const Series& outer, const Series& inner) {
  if (!inner[0].is_zero())
    throw std::domain_error("series_compose: inner series has nonzero constant term");
  int n = std::min(outer.order(), inner.order());
  Series acc = Series::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = series_mul(acc, inner);
    acc = series_add(acc, Series::constant(outer[k], n));
  }
  return acc;
}

Series series_pow(const Series& a, int m) {
  if (m < 0) throw std::invalid_argument("series_pow: negative exponent");
  Series result = Series::constant(Rational(1), a.order());
  Series base = a;
  while (m > 0) {
    if (m & 1) result = series_mul(result, base);
    m >>= 1;
    if (m) base = series_mul(base, base);
  }
  return result;
}

Series series_shift(const Series& a, int r) {
  if (r < 0) throw std::invalid_argument("series_shift: negative shift");
  std::vector<Rational> c(static_cast<size_t>(a.order()) + 1);
  for (int k = r; k <= a.order(); ++k) c[static_cast<size_t>(k)] = a[k - r];
  return Series(std::move(c));
}

Series binomial_pow(const Rational& q, int order) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  c[0] = Rational(1);
  for (int k = 1; k <= order; ++k)
    c[static_cast<size_t>(k)] = c[static_cast<size_t>(k - 1)] * (q - Rational(k - 1)) / Rational(k);
  return Series(std::move(c));
}

Series deg_exp_series(const Rational& x, const Rational& lambda, int order) {
  if (lambda.is_zero())
    throw std::invalid_argument(
        "deg_exp_series: lambda must be nonzero (use exp_series for the classical limit)");
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  c[0] = Rational(1);
  for (int k = 1; k <= order; ++k)
    c[static_cast<size_t>(k)] =
        c[static_cast<size_t>(k - 1)] * (x - Rational(k - 1) * lambda) / Rational(k);
  return Series(std::move(c));
}

Series deg_log_series(const Rational& lambda, int order) {
  if (lambda.is_zero())
    throw std::invalid_argument(
        "deg_log_series: lambda must be nonzero (use log1p_series for the classical limit)");
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  Rational binom(1);  // binom(lambda, k), built incrementally
  for (int k = 1; k <= order; ++k) {
    binom *= (lambda - Rational(k - 1));
    binom /= Rational(k);
    c[static_cast<size_t>(k)] = binom / lambda;
  }
  return Series(std::move(c));
}

Series exp_series(const Rational& x, int order) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  c[0] = Rational(1);
  for (int k = 1; k <= order; ++k)
    c[static_cast<size_t>(k)] = c[static_cast<size_t>(k - 1)] * x / Rational(k);
  return Series(std::move(c));
}

Series log1p_series(int order) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  for (int k = 1; k <= order; ++k)
    c[static_cast<size_t>(k)] = Rational(k % 2 == 1 ? 1 : -1, k);
  return Series(std::move(c));
}

Series geometric_series(int order) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(1));
  return Series(std::move(c));
}

}  // namespace derange
