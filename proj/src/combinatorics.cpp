#include "derange/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace derange {

Rational falling_deg(const Rational& x, int n, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("falling_deg: negative n");
  Rational p(1);
  for (int i = 0; i < n; ++i) p *= (x - Rational(i) * lambda);
  return p;
}

Rational rising_deg(const Rational& x, int n, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("rising_deg: negative n");
  Rational p(1);
  for (int i = 0; i < n; ++i) p *= (x + Rational(i) * lambda);
  return p;
}

TriangleCache::TriangleCache(TriangleKind kind, const Rational& lambda, int n_max)
    : kind_(kind), lambda_(lambda), n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("TriangleCache: negative n_max");
  rows_.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) rows_[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
  switch (kind) {
    case TriangleKind::stirling1: build_stirling1(); break;
    case TriangleKind::stirling2_degenerate: build_stirling2_degenerate(); break;
    case TriangleKind::stirling1_unsigned_degenerate: build_stirling1_unsigned_degenerate(); break;
  }
}

const Rational& TriangleCache::at(int n, int k) const {
  static const Rational zero(0);
  if (n < 0 || k < 0 || n > n_max_) throw std::out_of_range("TriangleCache::at: index violation");
  if (k > n) return zero;
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

void TriangleCache::build_stirling1() {
  // S1(n+1, k) = S1(n, k-1) - n * S1(n, k), S1(0,0) = 1
  rows_[0][0] = Rational(1);
  for (int n = 1; n <= n_max_; ++n) {
    auto& row = rows_[static_cast<size_t>(n)];
    const auto& prev = rows_[static_cast<size_t>(n - 1)];
    for (int k = 0; k <= n; ++k) {
      Rational v = (k >= 1) ? prev[static_cast<size_t>(k - 1)] : Rational(0);
      if (k <= n - 1) v -= Rational(n - 1) * prev[static_cast<size_t>(k)];
      row[static_cast<size_t>(k)] = std::move(v);
    }
  }
}

void TriangleCache::build_stirling2_degenerate() {
  // Solve (x)_{n,lam} = sum_k c_k (x)_k exactly: evaluate the left side at
  // x = 0..n and back-substitute through the triangular system whose (j,i)
  // entry is the ordinary falling factorial (j)_i.
  std::vector<std::vector<Rational>> ff(static_cast<size_t>(n_max_) + 1);
  for (int j = 0; j <= n_max_; ++j) {
    ff[static_cast<size_t>(j)].resize(static_cast<size_t>(j) + 1);
    ff[static_cast<size_t>(j)][0] = Rational(1);
    for (int i = 1; i <= j; ++i)
      ff[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          ff[static_cast<size_t>(j)][static_cast<size_t>(i - 1)] * Rational(j - i + 1);
  }
  // Rows are independent once the falling-factorial table exists.
#pragma omp parallel for schedule(dynamic) if (n_max_ >= 64)
  for (int n = 0; n <= n_max_; ++n) {
    auto& c = rows_[static_cast<size_t>(n)];
    for (int j = 0; j <= n; ++j) {
      Rational acc = falling_deg(Rational(j), n, lambda_);
      for (int i = 0; i < j; ++i)
        acc -= c[static_cast<size_t>(i)] * ff[static_cast<size_t>(j)][static_cast<size_t>(i)];
      c[static_cast<size_t>(j)] = acc / ff[static_cast<size_t>(j)][static_cast<size_t>(j)];
    }
  }
}

void TriangleCache::build_stirling1_unsigned_degenerate() {
  // Entry (j, l) is j!/l! times the t^j coefficient of (-log_lam(1-t))^l.
  // At lambda = 0 the generating series degenerates to -log(1-t).
  Series neglog(n_max_);
  if (lambda_.is_zero()) {
    std::vector<Rational> c(static_cast<size_t>(n_max_) + 1);
    for (int k = 1; k <= n_max_; ++k) c[static_cast<size_t>(k)] = Rational(1, k);
    neglog = Series(std::move(c));
  } else {
    // (1 - (1-t)^lambda)/lambda; coefficient k of (1-t)^lambda is
    // binom(lambda,k)(-1)^k.
    std::vector<Rational> c(static_cast<size_t>(n_max_) + 1);
    Rational binom(1);
    for (int k = 1; k <= n_max_; ++k) {
      binom *= (lambda_ - Rational(k - 1));
      binom /= Rational(k);
      Rational coeff = binom;  // (-1)^k * binom(lambda,k) * (-1)^k / lambda
      if (k % 2 == 1) coeff = -coeff;
      c[static_cast<size_t>(k)] = -coeff / lambda_;
    }
    neglog = Series(std::move(c));
  }
  Series pw = Series::constant(Rational(1), n_max_);
  Rational fact_l(1);
  std::vector<Rational> fact(static_cast<size_t>(n_max_) + 1);
  fact[0] = Rational(1);
  for (int j = 1; j <= n_max_; ++j) fact[static_cast<size_t>(j)] = fact[static_cast<size_t>(j - 1)] * Rational(j);
  for (int l = 0; l <= n_max_; ++l) {
    if (l > 0) {
      pw = series_mul(pw, neglog);
      fact_l *= Rational(l);
    }
    for (int j = l; j <= n_max_; ++j)
      rows_[static_cast<size_t>(j)][static_cast<size_t>(l)] = pw[j] * fact[static_cast<size_t>(j)] / fact_l;
  }
}

namespace {

std::shared_ptr<const TriangleCache> lookup_triangle(TriangleKind kind, const Rational& lambda,
                                                     int n_max) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, std::shared_ptr<const TriangleCache>> cache;
  std::pair<int, std::string> key{static_cast<int>(kind),
                                  kind == TriangleKind::stirling1 ? std::string() : lambda.to_string()};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end() && it->second->n_max() >= n_max) return it->second;
  int target = n_max;
  if (it != cache.end()) target = std::max(target, 2 * it->second->n_max());
  target = std::max(target, 16);
  auto built = std::make_shared<const TriangleCache>(kind, lambda, target);
  cache[key] = built;
  return built;
}

void check_indices(int n, int k, const char* what) {
  if (k < 0 || n < 0 || k > n)
    throw std::invalid_argument(std::string(what) + ": index violation (need 0 <= k <= n)");
}

}  // namespace

std::shared_ptr<const TriangleCache> shared_triangle(TriangleKind kind, const Rational& lambda,
                                                     int n_max) {
  return lookup_triangle(kind, lambda, n_max);
}

Rational stirling1(int n, int k) {
  check_indices(n, k, "stirling1");
  return shared_triangle(TriangleKind::stirling1, Rational(0), n)->at(n, k);
}

Rational stirling2_deg(int n, int k, const Rational& lambda) {
  check_indices(n, k, "stirling2_deg");
  return shared_triangle(TriangleKind::stirling2_degenerate, lambda, n)->at(n, k);
}

Rational stirling1_deg_unsigned(int j, int l, const Rational& lambda) {
  check_indices(j, l, "stirling1_deg_unsigned");
  return shared_triangle(TriangleKind::stirling1_unsigned_degenerate, lambda, j)->at(j, l);
}

Rational derangement_poly(int n, const Rational& x) {
  if (n < 0) throw std::invalid_argument("derangement_poly: negative n");
  Rational sum(0);
  Rational term(1);  // (x-1)^k / k!
  for (int k = 0; k <= n; ++k) {
    if (k > 0) term = term * (x - Rational(1)) / Rational(k);
    sum += term;
  }
  return sum * factorial(n);
}

Rational derangement_deg_poly(int n, const Rational& x, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("derangement_deg_poly: negative n");
  Rational sum(0);
  Rational term(1);  // (x-1)_{k,lam} / k!
  for (int k = 0; k <= n; ++k) {
    if (k > 0) term = term * (x - Rational(1) - Rational(k - 1) * lambda) / Rational(k);
    sum += term;
  }
  return sum * factorial(n);
}

Rational derangement2_deg_poly(int n, const Rational& x, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("derangement2_deg_poly: negative n");
  Rational sum(0);
  Rational term(1);  // (-1)_{k,lam} / k!
  for (int k = 0; k <= n; ++k) {
    if (k > 0) term = term * (Rational(-1) - Rational(k - 1) * lambda) / Rational(k);
    sum += term * pow(x, n - k);
  }
  return sum * factorial(n);
}

Rational fubini_deg(int n, const Rational& x, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("fubini_deg: negative n");
  auto tri = shared_triangle(TriangleKind::stirling2_degenerate, lambda, n);
  Rational sum(0);
  Rational kfact_xk(1);  // k! x^k
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfact_xk *= Rational(k) * x;
    sum += tri->at(n, k) * kfact_xk;
  }
  return sum;
}

}  // namespace derange
