#include "derange/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace derange {

Rational::Rational(long num, long den) {
  mpq_init(v_);
  if (den == 0) {
    mpq_clear(v_);
    throw std::invalid_argument("Rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(v_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(v_, v_, o.v_);
  return *this;
}

Rational Rational::from_string(std::string_view s) {
  // strict grammar: [+-]?digits(/digits)?
  auto bad = [&] {
    throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
  };
  if (s.empty()) bad();
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) bad();
  bool den_zero = true;  // only relevant if a '/' follows
  if (i < s.size()) {
    if (s[i] != '/') bad();
    size_t den_begin = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (s[i] != '0') den_zero = false;
      ++i;
    }
    if (i == den_begin || i != s.size()) bad();
    if (den_zero) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  }
  std::string buf(s[0] == '+' ? s.substr(1) : s);
  Rational r;
  if (mpq_set_str(r.v_, buf.c_str(), 10) != 0) bad();
  mpq_canonicalize(r.v_);
  return r;
}

std::string Rational::to_string() const {
  char* cs = mpq_get_str(nullptr, 10, v_);
  std::string out(cs);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(cs, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q.is_zero()) throw std::domain_error("pow: negative power of zero");
    return pow(Rational(1) / q, -e);
  }
  Rational base = q;
  Rational out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Rational r;
  mpz_fac_ui(mpq_numref(r.v_), static_cast<unsigned long>(n));
  return r;
}

Rational binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return Rational(0);
  Rational r;
  mpz_bin_uiui(mpq_numref(r.v_), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational binomial(const Rational& q, int k) {
  if (k < 0) return Rational(0);
  Rational out(1);
  for (int i = 0; i < k; ++i) {
    out *= (q - Rational(i));
    out /= Rational(i + 1);
  }
  return out;
}

}  // namespace derange
