#include "stirling/wallis.hpp"

#include <sstream>
#include <stdexcept>

#include "stirling/bounds.hpp"
#include "stirling/factorial.hpp"

namespace stirling {

namespace {

Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

WallisValue closed_form(unsigned long n) {
  if (n % 2 == 0) {
    unsigned long m = n / 2;
    Int sq = factorial(m);
    return {Rat(factorial(2 * m), pow2(2 * m) * sq * sq) * Rat(1, 2), 1};
  }
  unsigned long m = (n - 1) / 2;
  Int sq = factorial(m);
  return {Rat(pow2(2 * m) * sq * sq, factorial(2 * m + 1)), 0};
}

WallisValue recursion_value(unsigned long n) {
  WallisValue even{Rat(1, 2), 1};  // I_0
  WallisValue odd{Rat(1), 0};      // I_1
  for (unsigned long k = 2; k <= n; ++k) {
    WallisValue& v = k % 2 == 0 ? even : odd;
    v.q *= Rat(static_cast<long>(k) - 1, static_cast<long>(k));
  }
  return n % 2 == 0 ? even : odd;
}

}  // namespace

WallisValue wallis_integral(unsigned long n) {
  WallisValue rec = recursion_value(n);
  if (rec != closed_form(n))
    throw std::logic_error("wallis_integral: recursion and closed form disagree at n=" +
                           std::to_string(n));
  return rec;
}

namespace {

/// Certified q1 * pi^p1 < q2 * pi^p2 (exactly one side carries pi).
Verdict pi_mixed_less(const Rat& q1, int p1, const Rat& q2, int p2, mpfr_prec_t ceiling) {
  if (p1 == p2) return q1 < q2 ? Verdict::holds : Verdict::violated;
  // reduce to a comparison of pi against an exact rational
  for (mpfr_prec_t prec = kStartPrec; prec <= ceiling; prec *= 2) {
    Interval pi = const_enclosure(NamedConst::pi, prec);
    int c = p1 == 1 ? pi.cmp_rat(q2 / q1)   // q1 pi < q2  <=>  pi < q2/q1 (q1 > 0)
                    : -pi.cmp_rat(q1 / q2);  // q1 < q2 pi  <=>  pi > q1/q2
    if (c < 0) return Verdict::holds;
    if (c > 0) return Verdict::violated;
  }
  return Verdict::undecidable;
}

}  // namespace

Verdict wallis_monotone_check(unsigned long n, mpfr_prec_t prec_ceiling) {
  if (n < 1) throw std::domain_error("wallis_monotone_check: n must be >= 1");
  WallisValue cur = wallis_integral(n);
  WallisValue prev = wallis_integral(n - 1);
  Verdict v = pi_mixed_less(cur.q, cur.pi_power, prev.q, prev.pi_power, prec_ceiling);
  if (v == Verdict::undecidable)
    throw UndecidableError("wallis_monotone_check: undecidable at n=" + std::to_string(n),
                           static_cast<long>(n), prec_ceiling);
  return v;
}

Verdict wallis_sandwich_check(unsigned long n, mpfr_prec_t prec_ceiling) {
  if (n < 1) throw std::domain_error("wallis_sandwich_check: n must be >= 1");
  Int sq = factorial(n);
  Rat mid(pow2(2 * n) * sq * sq, factorial(2 * n));
  Rat mid2 = mid * mid;
  // pi n < mid^2 < pi (n + 1/2), i.e. pi < mid^2/n and pi > mid^2/(n + 1/2)
  Rat upper_target = mid2 / Rat(static_cast<long>(n));
  Rat lower_target = mid2 * Rat(2, 2 * static_cast<long>(n) + 1);
  for (mpfr_prec_t prec = kStartPrec; prec <= prec_ceiling; prec *= 2) {
    Interval pi = const_enclosure(NamedConst::pi, prec);
    int cu = pi.cmp_rat(upper_target);
    int cl = pi.cmp_rat(lower_target);
    if (cu > 0 || cl < 0) return Verdict::violated;
    if (cu < 0 && cl > 0) return Verdict::holds;
  }
  throw UndecidableError("wallis_sandwich_check: undecidable at n=" + std::to_string(n),
                         static_cast<long>(n), prec_ceiling);
}

std::vector<RatioRow> ratio_limit_table(const std::vector<unsigned long>& ns, mpfr_prec_t prec) {
  if (ns.empty()) throw std::domain_error("ratio_limit_table: empty n list");
  std::vector<RatioRow> rows;
  rows.reserve(ns.size());
  for (unsigned long n : ns) {
    if (n < 1) throw std::domain_error("ratio_limit_table: n must be >= 1");
    RatioRow row;
    row.n = n;
    row.ratio = stirling_ratio(n, prec);
    Interval s2pi = const_enclosure(NamedConst::sqrt_2pi, prec);
    row.gap = (row.ratio - s2pi).abs().hi();
    // envelope verification, escalating independently of the display precision
    row.envelope_ok = false;
    for (mpfr_prec_t p = prec; p <= std::max(prec, kDefaultPrecCeiling); p *= 2) {
      Interval ratio = stirling_ratio(n, p);
      Interval s = const_enclosure(NamedConst::sqrt_2pi, p);
      Interval lo_env = Interval::from_rat(Rat(-1, 2 * static_cast<long>(n)), p).exp() * s;
      Interval hi_env =
          (Interval::from_rat(Rat(2 * static_cast<long>(n) + 1, 2 * static_cast<long>(n)), p))
              .sqrt() *
          s;
      if (lo_env.cmp(ratio) < 0 && ratio.cmp(hi_env) < 0) {
        row.envelope_ok = true;
        break;
      }
      if (ratio.cmp(lo_env) < 0 || hi_env.cmp(ratio) < 0)
        throw std::logic_error("ratio_limit_table: envelope violated at n=" + std::to_string(n));
    }
    if (!row.envelope_ok)
      throw UndecidableError("ratio_limit_table: envelope undecidable at n=" + std::to_string(n),
                             static_cast<long>(n), kDefaultPrecCeiling);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ratio_table_csv(const std::vector<RatioRow>& rows, size_t digits) {
  std::ostringstream os;
  os << "n,lo,hi,gap_to_sqrt2pi\n";
  for (const auto& row : rows)
    os << row.n << "," << row.ratio.lo().str(digits, MPFR_RNDD) << ","
       << row.ratio.hi().str(digits, MPFR_RNDU) << "," << row.gap.str(digits, MPFR_RNDU) << "\n";
  return os.str();
}

}  // namespace stirling
