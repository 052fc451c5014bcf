#pragma once

#include <string>

#include <mpfr.h>

#include "derange/rational.hpp"

namespace derange {

/// Arbitrary-precision binary float (MPFR, round-to-nearest). Only the Abel
/// summation path uses this type; everything identity-checking stays in
/// Rational. Precision is per-value and propagates as the max across
/// operands.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(long n, mpfr_prec_t prec);
  static BigFloat of(const Rational& q, mpfr_prec_t prec);
  /// Parses a decimal literal like "0.9995" at the given precision.
  static BigFloat of_decimal(const std::string& s, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  BigFloat abs() const;
  BigFloat exp() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific-notation rendering with the stated number of significant
  /// digits, e.g. "1.234500000e-07". Deterministic for fixed precision.
  std::string to_string(int significant_digits) const;

 private:
  void match_precision(const BigFloat& o);
  mpfr_t v_;
};

/// Working precision in bits for a decimal-digit request, with guard bits.
mpfr_prec_t precision_for_digits(int decimal_digits);

}  // namespace derange
