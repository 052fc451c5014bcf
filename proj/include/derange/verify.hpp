#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "derange/bigfloat.hpp"
#include "derange/moments.hpp"
#include "derange/prob_family.hpp"
#include "derange/rational.hpp"
#include "derange/series.hpp"

namespace derange {

/// One concrete sample at which an identity is checked: rational lambda and
/// x, a moment profile for Y, and (where a theorem needs it) the shift r.
struct EvalPoint {
  Rational lambda;
  Rational x;
  MomentProfile Y;
  int r = 0;
};

/// Outcome of checking one identity instance. Exact-mode rows carry rational
/// strings and a residual that is exactly "0" on pass; abel-mode rows carry
/// decimals rendered at explicit precision. `variant` names which printed
/// form of a disputed identity matched; `note` carries route annotations.
struct VerificationReport {
  std::string theorem_id;
  std::string dist;
  Rational lambda;
  Rational x;
  int r = 0;
  int n = 0;
  std::string mode;  // "exact" or "abel"
  std::string lhs;
  std::string rhs;
  std::string residual;
  bool pass = false;
  std::string variant;
  std::string note;
};

struct VerifyOptions {
  /// Certify polynomial identities on an (n_max+1) x (n_max+1) grid of
  /// distinct (x, lambda) values instead of the single sampled point.
  bool exhaustive = false;

  /// Abel-summation controls. The radii walk toward 1; partial sums are
  /// truncated once the damped tail drops below tail_eps, then Richardson
  /// extrapolation of the given order produces the r -> 1 limit.
  std::vector<std::string> radii = {"0.99", "0.995", "0.999", "0.9995"};
  int extrapolation_order = 3;
  int precision_digits = 50;
  std::string tolerance = "1e-6";
  std::string tail_eps = "1e-20";
  long max_terms = 2000000;
  /// The numeric Abel check stops at this n (the exact restatement still runs
  /// to n_max); each sum needs ~10^5 terms at the largest radius.
  int abel_n_cap = 6;
};

/// Thrown when a point violates a theorem's applicability conditions (for
/// example anything but Gamma(1,1) for theorem 2.13). A configuration
/// problem, not an identity failure.
class TheoremPreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All registered theorem ids, in suite order ("2.1" .. "2.13").
const std::vector<std::string>& theorem_ids();

/// Runs the registered verification routine for one theorem at one point,
/// producing one report per n (plus abel-mode rows for 2.6 and variant rows
/// where a printed statement is disputed). Throws std::invalid_argument for
/// unknown ids and TheoremPreconditionError for inapplicable points.
std::vector<VerificationReport> verify_theorem(const std::string& id, const EvalPoint& pt,
                                               int n_max, const VerifyOptions& opt = {});

/// The defining generating function of a named family, built purely from the
/// series kernel and mgf_series. Ids: d_prob, d_prob_r, D_prob, fubini_prob,
/// bell_prob, euler_prob, d_deg, D_deg, fubini_deg. Requires lambda != 0.
Series gf_oracle(const std::string& def_id, const EvalPoint& pt, int order);

/// Deterministic pseudo-random sample points: lambda in [-1,1]\{0} and x in
/// [-2,2] with denominators <= 64, distributions rotating through the
/// catalog, honoring per-theorem constraints (2.13 forces Gamma(1,1), the
/// r-theorems draw r from their admissible ranges).
std::vector<EvalPoint> sample_points(unsigned long long seed, int count,
                                     const std::string& theorem_id);

struct AbelResult {
  BigFloat value;
  BigFloat error_estimate;
  long terms = 0;
};

/// Abel summation lim_{r->1^-} sum_m term(m) r^m. `term` is called with
/// m = 0, 1, 2, ... in order (generators may keep incremental state). All
/// radii are accumulated in one pass; a radius retires once its damped tail
/// stays below tail_eps. Throws std::runtime_error ("non-summable at given
/// precision") if the largest radius fails to decay within max_terms.
AbelResult abel_sum(const std::function<BigFloat(long)>& term,
                    const std::vector<std::string>& radii, int extrapolation_order,
                    const std::string& tail_eps, long max_terms, int precision_digits);

/// Aggregates variant fields across a sweep theorem's reports: the printed
/// variant that matched at every row, "both" if the rows never separated the
/// two, "none" if no variant survived, "" for theorems without a sweep.
std::string canonical_variant(const std::string& theorem_id,
                              const std::vector<VerificationReport>& reports);

}  // namespace derange
