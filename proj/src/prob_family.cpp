#include "derange/prob_family.hpp"

#include <stdexcept>
#include <utility>

#include "derange/combinatorics.hpp"

namespace derange {

ProbContext::ProbContext(MomentProfile Y, Rational lambda, int n_max)
    : Y_(std::move(Y)), lambda_(std::move(lambda)), n_max_(n_max), mgf_plus_(0), mgf_minus_(0) {
  if (n_max <= 0) throw std::invalid_argument("ProbContext: n_max must be positive");
  const int N = order();
  mu_.reserve(static_cast<size_t>(N) + 1);
  rho_.reserve(static_cast<size_t>(N) + 1);
  for (int m = 0; m <= N; ++m) {
    mu_.push_back(deg_falling_moment(Y_, m, lambda_));
    rho_.push_back(deg_rising_moment(Y_, m, lambda_));
  }
  {
    std::vector<Rational> plus(static_cast<size_t>(N) + 1), minus(static_cast<size_t>(N) + 1);
    Rational kfact(1);
    for (int k = 0; k <= N; ++k) {
      if (k > 0) kfact *= Rational(k);
      plus[static_cast<size_t>(k)] = mu_[static_cast<size_t>(k)] / kfact;
      minus[static_cast<size_t>(k)] =
          (k % 2 == 1) ? -rho_[static_cast<size_t>(k)] / kfact : rho_[static_cast<size_t>(k)] / kfact;
    }
    mgf_plus_ = Series(std::move(plus));
    mgf_minus_ = Series(std::move(minus));
  }

  // {n brace k}_{Y,lam} from the alternating sum over powers of the moment
  // series: E[(S_j)_{n,lam}] = n! [t^n] (E[e_lam^Y(t)])^j.
  std::vector<Series> powers;
  powers.reserve(static_cast<size_t>(n_max_) + 1);
  powers.push_back(Series::constant(Rational(1), N));
  for (int j = 1; j <= n_max_; ++j) powers.push_back(series_mul(powers.back(), mgf_plus_));
  std::vector<Rational> fact(static_cast<size_t>(n_max_) + 1);
  fact[0] = Rational(1);
  for (int i = 1; i <= n_max_; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * Rational(i);
  stirling_.resize(static_cast<size_t>(n_max_) + 1);
  for (int n = 0; n <= n_max_; ++n) {
    stirling_[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      Rational acc(0);
      for (int j = 0; j <= k; ++j) {
        Rational term = binomial(k, j) * powers[static_cast<size_t>(j)][n];
        if ((k - j) % 2 == 1) term = -term;
        acc += term;
      }
      stirling_[static_cast<size_t>(n)][static_cast<size_t>(k)] =
          acc * fact[static_cast<size_t>(n)] / fact[static_cast<size_t>(k)];
    }
  }

  // Euler numbers from (E[e_lam^Y(t)] + 1) * sum E_n t^n/n! = 2.
  euler_.resize(static_cast<size_t>(n_max_) + 1);
  euler_[0] = Rational(1);
  for (int n = 1; n <= n_max_; ++n) {
    Rational acc(0);
    for (int k = 0; k < n; ++k) acc += binomial(n, k) * mu_[static_cast<size_t>(n - k)] * euler_[static_cast<size_t>(k)];
    euler_[static_cast<size_t>(n)] = -acc / Rational(2);
  }
}

namespace {
void check_n(const ProbContext& ctx, int n, const char* what) {
  if (n < 0 || n > ctx.n_max())
    throw std::invalid_argument(std::string(what) + ": n outside [0, n_max]");
}
}  // namespace

Rational stirling2_prob(const ProbContext& ctx, int n, int k) {
  check_n(ctx, n, "stirling2_prob");
  if (k < 0 || k > n) throw std::invalid_argument("stirling2_prob: index violation (need 0 <= k <= n)");
  return ctx.stirling_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Rational bell_prob(const ProbContext& ctx, int n, const Rational& x) {
  check_n(ctx, n, "bell_prob");
  Rational sum(0);
  Rational xpow(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) xpow *= x;
    sum += stirling2_prob(ctx, n, k) * xpow;
  }
  return sum;
}

Rational fubini_prob(const ProbContext& ctx, int n, const Rational& x) {
  check_n(ctx, n, "fubini_prob");
  Rational sum(0);
  Rational kfact_xpow(1);  // k! x^k
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfact_xpow *= Rational(k) * x;
    sum += stirling2_prob(ctx, n, k) * kfact_xpow;
  }
  return sum;
}

Rational euler_prob(const ProbContext& ctx, int n) {
  check_n(ctx, n, "euler_prob");
  return ctx.euler_[static_cast<size_t>(n)];
}

Rational derange_prob(const ProbContext& ctx, int n, const Rational& x) {
  check_n(ctx, n, "derange_prob");
  // E[(x-Y)_{k,lam}] via the Vandermonde expansion, with the rising moments
  // taken from the context cache.
  std::vector<Rational> fall(static_cast<size_t>(n) + 1);
  fall[0] = Rational(1);
  for (int j = 1; j <= n; ++j)
    fall[static_cast<size_t>(j)] = fall[static_cast<size_t>(j - 1)] * (x - Rational(j - 1) * ctx.lambda());
  Rational sum(0);
  Rational kfact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfact *= Rational(k);
    Rational shifted(0);
    for (int j = 0; j <= k; ++j) {
      Rational term = binomial(k, j) * fall[static_cast<size_t>(j)] * ctx.rising_moment(k - j);
      if ((k - j) % 2 == 1) term = -term;
      shifted += term;
    }
    sum += shifted / kfact;
  }
  return sum * factorial(n);
}

Rational derange_prob_r(const ProbContext& ctx, int r, int n) {
  check_n(ctx, n, "derange_prob_r");
  if (r < 0) throw std::invalid_argument("derange_prob_r: negative r");
  if (n < r) return Rational(0);
  Rational sum(0);
  for (int k = r; k <= n; ++k) {
    Rational term = binomial(k, r) * ctx.rising_moment(n - k) / factorial(n - k);
    if ((n - k) % 2 == 1) term = -term;
    sum += term;
  }
  return sum * factorial(n);
}

Rational derange2_prob(const ProbContext& ctx, int n, const Rational& x) {
  check_n(ctx, n, "derange2_prob");
  Rational sum(0);
  Rational kfact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfact *= Rational(k);
    Rational term = ctx.rising_moment(k) / kfact * pow(x, n - k);
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return sum * factorial(n);
}

}  // namespace derange
