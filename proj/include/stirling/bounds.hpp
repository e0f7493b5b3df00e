#pragma once

#include "stirling/common.hpp"
#include "stirling/interval.hpp"
#include "stirling/ratfunc.hpp"

namespace stirling {

/// Enclosure of ln(sqrt(2 pi n) (n/e)^n e^{a(n)}) computed in log form:
/// (1/2) ln(2 pi n) + n ln n - n + a(n). a(n) enters as an exact rational,
/// rounded outward once. Throws std::domain_error at a pole of a.
Interval eval_log_bound(long n, const RatFunc& a, mpfr_prec_t prec);

/// Enclosure of the bound value itself, exp of the above.
Interval bound_value(long n, const RatFunc& a, mpfr_prec_t prec);

/// Enclosure of ln(n!), via the exact integer.
Interval log_factorial(unsigned long n, mpfr_prec_t prec);

struct CompareOutcome {
  Verdict verdict;
  mpfr_prec_t prec_used;
};

/// Strict decision of n! >= bound (lower) or n! <= bound (upper), comparing
/// ln(n!) against eval_log_bound and doubling the precision from 64 bits until
/// the enclosures are disjoint. Throws UndecidableError past the ceiling.
CompareOutcome strict_compare(long n, const RatFunc& a, Direction direction,
                              mpfr_prec_t prec_ceiling = kDefaultPrecCeiling);

/// Enclosure of n! e^n / n^(n+1/2).
Interval stirling_ratio(unsigned long n, mpfr_prec_t prec);

}  // namespace stirling
