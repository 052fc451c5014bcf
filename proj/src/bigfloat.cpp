#include "derange/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace derange {

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat BigFloat::of(long n, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, n, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const Rational& q, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of_decimal(const std::string& s, mpfr_prec_t prec) {
  BigFloat r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigFloat: malformed decimal literal '" + s + "'");
  return r;
}

void BigFloat::match_precision(const BigFloat& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
    mpfr_t tmp;
    mpfr_init2(tmp, mpfr_get_prec(o.v_));
    mpfr_set(tmp, v_, MPFR_RNDN);
    mpfr_swap(v_, tmp);
    mpfr_clear(tmp);
  }
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  match_precision(o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  match_precision(o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  match_precision(o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  match_precision(o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(*this);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(precision());
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  std::vector<char> buf(static_cast<size_t>(significant_digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
  return std::string(buf.data());
}

mpfr_prec_t precision_for_digits(int decimal_digits) {
  decimal_digits = std::max(decimal_digits, 10);
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873626)) + 64;
}

}  // namespace derange
