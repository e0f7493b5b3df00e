#pragma once

#include <functional>
#include <map>

#include "stirling/common.hpp"
#include "stirling/ratfunc.hpp"

namespace stirling {

/// Coefficient of 1/n^k in the expansion of (n + 1/2) ln(1 + 1/n) - 1:
/// (-1)^k (k-1) / (2k(k+1)). Requires k >= 2.
Rat stirling_coeff(long k);

/// Finite sum of c_k / n^k with all k >= 2 and nonzero c_k (the partial sums
/// of the log-Stirling series live here).
class LaurentSum {
 public:
  LaurentSum() = default;
  explicit LaurentSum(std::map<long, Rat> terms);  // drops zeros, checks k >= 2

  const std::map<long, Rat>& terms() const { return terms_; }
  Rat coeff(long k) const;
  Rat eval(const Rat& n) const;  // n != 0
  RatFunc to_ratfunc() const;    // over the common denominator n^max_k

 private:
  std::map<long, Rat> terms_;
};

/// Terms k = 2..m of the series. m >= 2.
LaurentSum partial_sum(long m);

/// Exact expansion of f in powers of 1/n: coefficient map k -> c_k for all
/// k <= order (keys may be <= 0 when deg num >= deg den). Long division of the
/// reversed-coefficient power series.
std::map<long, Rat> laurent_expand(const RatFunc& f, long order);

/// lambda_1..lambda_m (index 1-based via map) of the correction term whose
/// telescoped difference a_n - a_{n+1} reproduces stirling_coeff termwise.
/// These are the reference coefficients that tail constants are matched to.
std::map<long, Rat> correction_coeffs(long m);

/// Envelope test at one working precision: S_{2r-1}(n) <= f(n) <= S_{2r}(n)
/// with f(n) = (n + 1/2) ln(1 + 1/n) - 1 enclosed by intervals and the partial
/// sums exact.
Verdict envelope_check(long n, long r, mpfr_prec_t prec);

/// Same check with precision escalation; throws UndecidableError at the ceiling.
bool envelope_holds(long n, long r, mpfr_prec_t prec_ceiling = kDefaultPrecCeiling);

/// The unique rational c* for which family(c*) has the reference coefficient
/// at 1/n^target_order. The family must depend on c for the first time at that
/// order, and affinely there (every catalog tail template does); anything
/// else is rejected with std::domain_error.
Rat optimal_tail_constant(const std::function<RatFunc(const Rat&)>& family, long target_order);

}  // namespace stirling
