#include "stirling/bounds.hpp"

#include <stdexcept>
#include <string>

#include "stirling/factorial.hpp"

namespace stirling {

Interval eval_log_bound(long n, const RatFunc& a, mpfr_prec_t prec) {
  if (n < 1) throw std::domain_error("eval_log_bound: n must be >= 1");
  Rat nq(n);
  if (!a.defined_at(nq))
    throw std::domain_error("eval_log_bound: pole of the correction term at n=" +
                            std::to_string(n));
  Interval pi = const_enclosure(NamedConst::pi, prec);
  Interval half_log_2pin =
      (pi.mul_long(2) * Interval::from_long(n, prec)).log() * Interval::from_rat(Rat(1, 2), prec);
  Interval log_n = Interval::from_long(n, prec).log();
  Interval an = Interval::from_rat(a.eval(nq), prec);
  return half_log_2pin + log_n.mul_long(n) - Interval::from_long(n, prec) + an;
}

Interval bound_value(long n, const RatFunc& a, mpfr_prec_t prec) {
  return eval_log_bound(n, a, prec).exp();
}

Interval log_factorial(unsigned long n, mpfr_prec_t prec) {
  return log_of_int(factorial(n), prec);
}

CompareOutcome strict_compare(long n, const RatFunc& a, Direction direction,
                              mpfr_prec_t prec_ceiling) {
  if (n < 1) throw std::domain_error("strict_compare: n must be >= 1");
  Int nf = factorial(static_cast<unsigned long>(n));
  for (mpfr_prec_t prec = kStartPrec;; prec *= 2) {
    if (prec > prec_ceiling)
      throw UndecidableError("strict_compare: enclosures still overlap at the precision ceiling (n=" +
                                 std::to_string(n) + ")",
                             n, prec_ceiling);
    Interval lhs = log_of_int(nf, prec);
    Interval rhs = eval_log_bound(n, a, prec);
    int c = lhs.cmp(rhs);
    if (c != 0) {
      bool ok = direction == Direction::lower ? c > 0 : c < 0;
      return {ok ? Verdict::holds : Verdict::violated, prec};
    }
  }
}

Interval stirling_ratio(unsigned long n, mpfr_prec_t prec) {
  if (n < 1) throw std::domain_error("stirling_ratio: n must be >= 1");
  // exp(ln n! + n - (n + 1/2) ln n), to stay clear of overflow for large n
  Interval log_ratio = log_of_int(factorial(n), prec) +
                       Interval::from_long(static_cast<long>(n), prec) -
                       Interval::from_long(static_cast<long>(n), prec).log() *
                           Interval::from_rat(Rat(2 * static_cast<long>(n) + 1, 2), prec);
  return log_ratio.exp();
}

}  // namespace stirling
