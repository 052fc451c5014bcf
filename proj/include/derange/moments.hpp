#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derange/rational.hpp"
#include "derange/series.hpp"

namespace derange {

/// A random variable represented purely by its exact raw-moment sequence
/// E[Y^n]. Every member of the catalog has rational moments, so nothing here
/// samples, integrates, or rounds.
///
/// Descriptor grammar (all numbers "num/den" or plain integers):
///   constant:c | bernoulli:p | discrete:v1=p1,v2=p2,... | poisson:a |
///   gamma:a,b | uniform01
class MomentProfile {
 public:
  enum class Kind { constant, bernoulli, discrete, poisson, gamma, uniform01 };

  static MomentProfile constant(Rational c);
  static MomentProfile bernoulli(Rational p);
  static MomentProfile discrete(std::vector<std::pair<Rational, Rational>> atoms);
  static MomentProfile poisson(Rational alpha);
  static MomentProfile gamma(Rational alpha, Rational beta);
  static MomentProfile uniform01();

  /// Parses the descriptor grammar above; throws std::invalid_argument on
  /// unknown kinds, malformed numbers, or invalid parameters.
  static MomentProfile parse(std::string_view descriptor);

  /// Canonical descriptor string (parse round-trips).
  std::string descriptor() const;

  Kind kind() const { return kind_; }
  const std::vector<std::pair<Rational, Rational>>& atoms() const { return atoms_; }
  const Rational& param(int i) const { return params_[static_cast<size_t>(i)]; }

 private:
  MomentProfile(Kind kind, std::vector<Rational> params,
                std::vector<std::pair<Rational, Rational>> atoms)
      : kind_(kind), params_(std::move(params)), atoms_(std::move(atoms)) {}

  Kind kind_;
  std::vector<Rational> params_;
  std::vector<std::pair<Rational, Rational>> atoms_;
};

/// Exact raw moment E[Y^n], n >= 0.
Rational raw_moment(const MomentProfile& Y, int n);

/// E[(Y)_{n,lambda}], the degenerate falling factorial moment, via the
/// Stirling expansion (y)_{n,lam} = sum_k S1(n,k) lam^{n-k} y^k. Works for
/// lambda = 0 as well (only the k = n term survives).
Rational deg_falling_moment(const MomentProfile& Y, int n, const Rational& lambda);

/// E[<Y>_{n,lambda}], the degenerate rising factorial moment.
Rational deg_rising_moment(const MomentProfile& Y, int n, const Rational& lambda);

/// E[(x-Y)_{n,lambda}] by the degenerate Vandermonde expansion
/// sum_j binom(n,j) (x)_{j,lam} (-1)^{n-j} E[<Y>_{n-j,lam}].
Rational shifted_deg_moment(const Rational& x, const MomentProfile& Y, int n,
                            const Rational& lambda);

/// E[(S_m)_{n,lambda}] for S_m = Y_1 + ... + Y_m iid, read off the m-th power
/// of the moment series (repeated squaring).
Rational iid_sum_deg_moment(const MomentProfile& Y, int m, int n, const Rational& lambda);

/// Truncated series of E[e_lambda^{sign*Y}(t)]; coefficient n is the
/// degenerate falling (sign +1) or signed rising (sign -1) factorial moment
/// over n!. lambda = 0 yields the classical moment generating function.
Series mgf_series(const MomentProfile& Y, const Rational& lambda, int sign, int order);

}  // namespace derange
