#include "derange/moments.hpp"

#include <stdexcept>

#include "derange/combinatorics.hpp"

namespace derange {

namespace {

void check_probability(const Rational& p, const char* what) {
  if (p < Rational(0) || p > Rational(1))
    throw std::invalid_argument(std::string(what) + ": probability outside [0,1]");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

MomentProfile MomentProfile::constant(Rational c) {
  return MomentProfile(Kind::constant, {std::move(c)}, {});
}

MomentProfile MomentProfile::bernoulli(Rational p) {
  check_probability(p, "bernoulli");
  return MomentProfile(Kind::bernoulli, {std::move(p)}, {});
}

MomentProfile MomentProfile::discrete(std::vector<std::pair<Rational, Rational>> atoms) {
  if (atoms.empty()) throw std::invalid_argument("discrete: no atoms");
  Rational total(0);
  for (const auto& [v, p] : atoms) {
    check_probability(p, "discrete");
    total += p;
  }
  if (total != Rational(1)) throw std::invalid_argument("discrete: weights must sum to 1");
  return MomentProfile(Kind::discrete, {}, std::move(atoms));
}

MomentProfile MomentProfile::poisson(Rational alpha) {
  if (alpha < Rational(0)) throw std::invalid_argument("poisson: negative rate");
  return MomentProfile(Kind::poisson, {std::move(alpha)}, {});
}

MomentProfile MomentProfile::gamma(Rational alpha, Rational beta) {
  if (alpha <= Rational(0) || beta <= Rational(0))
    throw std::invalid_argument("gamma: parameters must be positive");
  return MomentProfile(Kind::gamma, {std::move(alpha), std::move(beta)}, {});
}

MomentProfile MomentProfile::uniform01() { return MomentProfile(Kind::uniform01, {}, {}); }

MomentProfile MomentProfile::parse(std::string_view descriptor) {
  size_t colon = descriptor.find(':');
  std::string_view kind = descriptor.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view() : descriptor.substr(colon + 1);
  if (kind == "uniform01") {
    if (!rest.empty()) throw std::invalid_argument("uniform01 takes no parameters");
    return uniform01();
  }
  if (kind == "constant") return constant(Rational::from_string(rest));
  if (kind == "bernoulli") return bernoulli(Rational::from_string(rest));
  if (kind == "poisson") return poisson(Rational::from_string(rest));
  if (kind == "gamma") {
    auto parts = split(rest, ',');
    if (parts.size() != 2) throw std::invalid_argument("gamma: expected gamma:a,b");
    return gamma(Rational::from_string(parts[0]), Rational::from_string(parts[1]));
  }
  if (kind == "discrete") {
    std::vector<std::pair<Rational, Rational>> atoms;
    for (auto part : split(rest, ',')) {
      size_t eq = part.find('=');
      if (eq == std::string_view::npos)
        throw std::invalid_argument("discrete: expected v=p pairs");
      atoms.emplace_back(Rational::from_string(part.substr(0, eq)),
                         Rational::from_string(part.substr(eq + 1)));
    }
    return discrete(std::move(atoms));
  }
  throw std::invalid_argument("unknown distribution descriptor '" + std::string(descriptor) + "'");
}

std::string MomentProfile::descriptor() const {
  switch (kind_) {
    case Kind::constant: return "constant:" + params_[0].to_string();
    case Kind::bernoulli: return "bernoulli:" + params_[0].to_string();
    case Kind::poisson: return "poisson:" + params_[0].to_string();
    case Kind::gamma: return "gamma:" + params_[0].to_string() + "," + params_[1].to_string();
    case Kind::uniform01: return "uniform01";
    case Kind::discrete: {
      std::string out = "discrete:";
      for (size_t i = 0; i < atoms_.size(); ++i) {
        if (i) out += ",";
        out += atoms_[i].first.to_string() + "=" + atoms_[i].second.to_string();
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Rational raw_moment(const MomentProfile& Y, int n) {
  if (n < 0) throw std::invalid_argument("raw_moment: negative order");
  if (n == 0) return Rational(1);
  switch (Y.kind()) {
    case MomentProfile::Kind::constant:
      return pow(Y.param(0), n);
    case MomentProfile::Kind::bernoulli:
      return Y.param(0);
    case MomentProfile::Kind::discrete: {
      Rational sum(0);
      for (const auto& [v, p] : Y.atoms()) sum += p * pow(v, n);
      return sum;
    }
    case MomentProfile::Kind::poisson: {
      // Touchard: E[Y^n] = sum_k {n brace k} alpha^k; stays rational.
      auto tri = shared_triangle(TriangleKind::stirling2_degenerate, Rational(0), n);
      Rational sum(0);
      Rational apow(1);
      for (int k = 0; k <= n; ++k) {
        if (k > 0) apow *= Y.param(0);
        sum += tri->at(n, k) * apow;
      }
      return sum;
    }
    case MomentProfile::Kind::gamma:
      // alpha(alpha+1)...(alpha+n-1) / beta^n
      return rising_deg(Y.param(0), n, Rational(1)) / pow(Y.param(1), n);
    case MomentProfile::Kind::uniform01:
      return Rational(1, n + 1);
  }
  throw std::logic_error("unreachable");
}

Rational deg_falling_moment(const MomentProfile& Y, int n, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("deg_falling_moment: negative order");
  auto tri = shared_triangle(TriangleKind::stirling1, Rational(0), n);
  // powers of lambda from lambda^n down to lambda^0
  std::vector<Rational> lpow(static_cast<size_t>(n) + 1);
  lpow[0] = Rational(1);
  for (int i = 1; i <= n; ++i) lpow[static_cast<size_t>(i)] = lpow[static_cast<size_t>(i - 1)] * lambda;
  Rational sum(0);
  for (int k = 0; k <= n; ++k) sum += tri->at(n, k) * lpow[static_cast<size_t>(n - k)] * raw_moment(Y, k);
  return sum;
}

Rational deg_rising_moment(const MomentProfile& Y, int n, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("deg_rising_moment: negative order");
  auto tri = shared_triangle(TriangleKind::stirling1, Rational(0), n);
  std::vector<Rational> lpow(static_cast<size_t>(n) + 1);
  lpow[0] = Rational(1);
  for (int i = 1; i <= n; ++i) lpow[static_cast<size_t>(i)] = lpow[static_cast<size_t>(i - 1)] * lambda;
  Rational sum(0);
  for (int k = 0; k <= n; ++k) {
    Rational term = tri->at(n, k) * lpow[static_cast<size_t>(n - k)] * raw_moment(Y, k);
    if ((n - k) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Rational shifted_deg_moment(const Rational& x, const MomentProfile& Y, int n,
                            const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("shifted_deg_moment: negative order");
  Rational sum(0);
  Rational fall(1);  // (x)_{j,lam}
  for (int j = 0; j <= n; ++j) {
    if (j > 0) fall *= (x - Rational(j - 1) * lambda);
    Rational term = binomial(n, j) * fall * deg_rising_moment(Y, n - j, lambda);
    if ((n - j) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Rational iid_sum_deg_moment(const MomentProfile& Y, int m, int n, const Rational& lambda) {
  if (m < 0 || n < 0) throw std::invalid_argument("iid_sum_deg_moment: negative argument");
  Series u = mgf_series(Y, lambda, +1, n);
  return series_pow(u, m)[n] * factorial(n);
}

Series mgf_series(const MomentProfile& Y, const Rational& lambda, int sign, int order) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("mgf_series: sign must be +1 or -1");
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  Rational kfact(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) kfact *= Rational(k);
    if (sign == 1) {
      c[static_cast<size_t>(k)] = deg_falling_moment(Y, k, lambda) / kfact;
    } else {
      Rational v = deg_rising_moment(Y, k, lambda) / kfact;
      if (k % 2 == 1) v = -v;
      c[static_cast<size_t>(k)] = v;
    }
  }
  return Series(std::move(c));
}

}  // namespace derange
