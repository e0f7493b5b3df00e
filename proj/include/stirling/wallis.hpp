#pragma once

#include <string>
#include <vector>

#include "stirling/common.hpp"
#include "stirling/interval.hpp"
#include "stirling/rat.hpp"

namespace stirling {

/// I_n = integral_0^{pi/2} sin^n x dx, kept symbolic as q * pi^pi_power so
/// that only comparisons ever spend precision. pi_power is 1 exactly for
/// even n.
struct WallisValue {
  Rat q;
  int pi_power = 0;
  bool operator==(const WallisValue&) const = default;
};

/// Exact I_n through the recursion I_n = (n-1)/n * I_{n-2} from I_0 = pi/2,
/// I_1 = 1; the closed forms (2n)! / (2^{2n} (n!)^2) * pi/2 and
/// 2^{2n} (n!)^2 / (2n+1)! are recomputed and asserted to agree.
WallisValue wallis_integral(unsigned long n);

/// I_n < I_{n-1}; mixes a rational with a pi multiple, so decided against a pi
/// enclosure with escalation.
Verdict wallis_monotone_check(unsigned long n, mpfr_prec_t prec_ceiling = kDefaultPrecCeiling);

/// sqrt(pi n) < 2^{2n} (n!)^2 / (2n)! < sqrt(pi (n + 1/2)), both strict. The
/// middle term is exact; the comparison is squared so only a pi enclosure is
/// needed.
Verdict wallis_sandwich_check(unsigned long n, mpfr_prec_t prec_ceiling = kDefaultPrecCeiling);

struct RatioRow {
  unsigned long n = 0;
  Interval ratio;        // n! e^n / n^(n+1/2)
  BigFloat gap;          // certified upper bound on |ratio - sqrt(2 pi)|
  bool envelope_ok = false;

  RatioRow() : ratio(Interval::from_long(0, kStartPrec)), gap(kStartPrec) {}
};

/// One row per n, each verified against the two-sided envelope
/// e^{-1/(2n)} sqrt(2 pi) <= ratio <= sqrt(1 + 1/(2n)) sqrt(2 pi).
std::vector<RatioRow> ratio_limit_table(const std::vector<unsigned long>& ns, mpfr_prec_t prec);

/// CSV with columns n, lo, hi, gap_to_sqrt2pi.
std::string ratio_table_csv(const std::vector<RatioRow>& rows, size_t digits = 20);

}  // namespace stirling
