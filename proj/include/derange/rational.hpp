#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmp.h>

namespace derange {

/// Arbitrary-precision rational number, always canonical: lowest terms,
/// positive denominator. Every arithmetic operation is exact; there is no
/// rounding anywhere in this type. Backed by GMP's mpq layer.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(int n) : Rational(static_cast<long>(n)) {}
  Rational(long n) {
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(long num, long den);

  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  /// Parses "num", "-num" or "num/den" (base 10). Throws std::invalid_argument
  /// on malformed input or a zero denominator.
  static Rational from_string(std::string_view s);

  /// "num/den" in lowest terms, or just "num" when the denominator is 1.
  /// from_string(to_string()) round-trips to the identical value.
  std::string to_string() const;

  bool is_zero() const { return mpq_sgn(v_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
  int sign() const { return mpq_sgn(v_); }
  double to_double() const { return mpq_get_d(v_); }

  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) <=> 0;
  }

  mpq_srcptr raw() const { return v_; }

 private:
  friend Rational factorial(int n);
  friend Rational binomial(int n, int k);
  mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// q^e for any integer e; throws std::domain_error for e < 0 when q is zero.
Rational pow(const Rational& q, long e);

/// n! as an exact Rational (n >= 0).
Rational factorial(int n);

/// Integer binomial coefficient, 0 for k < 0 or k > n (n >= 0).
Rational binomial(int n, int k);

/// Generalized binomial coefficient binom(q, k) = q(q-1)...(q-k+1)/k!.
Rational binomial(const Rational& q, int k);

}  // namespace derange
