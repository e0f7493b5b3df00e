#include "stirling/series.hpp"

#include <stdexcept>

#include "stirling/interval.hpp"

namespace stirling {

Rat stirling_coeff(long k) {
  if (k < 2) throw std::domain_error("stirling_coeff: k must be >= 2");
  Rat c(k - 1, 2 * k * (k + 1));
  return k % 2 == 0 ? c : -c;
}

LaurentSum::LaurentSum(std::map<long, Rat> terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < 2) throw std::domain_error("LaurentSum: exponent below 2");
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

Rat LaurentSum::coeff(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat LaurentSum::eval(const Rat& n) const {
  if (n.is_zero()) throw std::domain_error("LaurentSum::eval at 0");
  Rat r;
  for (const auto& [k, c] : terms_) r += c / n.pow(static_cast<unsigned long>(k));
  return r;
}

RatFunc LaurentSum::to_ratfunc() const {
  if (terms_.empty()) return RatFunc();
  long m = terms_.rbegin()->first;
  std::vector<Rat> num(static_cast<size_t>(m - 1));  // degree m - 2 at most
  for (const auto& [k, c] : terms_) num[static_cast<size_t>(m - k)] = c;
  std::vector<Rat> den(static_cast<size_t>(m) + 1);
  den.back() = 1;
  return RatFunc(Poly(std::move(num)), Poly(std::move(den)));
}

LaurentSum partial_sum(long m) {
  if (m < 2) throw std::domain_error("partial_sum: m must be >= 2");
  std::map<long, Rat> t;
  for (long k = 2; k <= m; ++k) t.emplace(k, stirling_coeff(k));
  return LaurentSum(std::move(t));
}

std::map<long, Rat> laurent_expand(const RatFunc& f, long order) {
  std::map<long, Rat> out;
  if (f.is_zero()) return out;
  const Poly& p = f.num();
  const Poly& q = f.den();
  long dp = p.degree(), dq = q.degree();
  long shift = dq - dp;  // lowest possible exponent of 1/n
  if (order < shift) return out;
  long terms = order - shift + 1;
  // reversed coefficients: A(t) = sum p[dp-s] t^s, B(t) = sum q[dq-s] t^s, B(0) != 0
  std::vector<Rat> c(static_cast<size_t>(terms));
  Rat b0_inv = q.coeff(static_cast<size_t>(dq)).inv();
  for (long s = 0; s < terms; ++s) {
    Rat acc = dp - s >= 0 ? p.coeff(static_cast<size_t>(dp - s)) : Rat(0);
    for (long j = 1; j <= s; ++j) {
      Rat bj = dq - j >= 0 ? q.coeff(static_cast<size_t>(dq - j)) : Rat(0);
      acc -= bj * c[static_cast<size_t>(s - j)];
    }
    c[static_cast<size_t>(s)] = acc * b0_inv;
  }
  for (long s = 0; s < terms; ++s)
    if (!c[static_cast<size_t>(s)].is_zero()) out.emplace(shift + s, c[static_cast<size_t>(s)]);
  return out;
}

std::map<long, Rat> correction_coeffs(long m) {
  if (m < 1) throw std::domain_error("correction_coeffs: m must be >= 1");
  std::map<long, Rat> lam;
  for (long k = 2; k <= m + 1; ++k) {
    // sum_{i=1}^{k-1} lambda_i (-1)^(k-i+1) C(k-1, k-i) = stirling_coeff(k),
    // solved forward: the i = k-1 term has coefficient k-1.
    Rat s;
    for (long i = 1; i <= k - 2; ++i) {
      Int bin;
      mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(k - 1),
                   static_cast<unsigned long>(k - i));
      Rat term = lam[i] * Rat(bin);
      s += (k - i + 1) % 2 == 0 ? term : -term;
    }
    lam[k - 1] = (stirling_coeff(k) - s) / Rat(k - 1);
  }
  return lam;
}

namespace {

/// Enclosure of (n + 1/2) ln(1 + 1/n) - 1.
Interval log_term(long n, mpfr_prec_t prec) {
  Interval one_over_n = Interval::from_rat(Rat(1, n), prec);
  Interval factor = Interval::from_rat(Rat(2 * n + 1, 2), prec);
  return factor * one_over_n.log1p() - Interval::from_long(1, prec);
}

}  // namespace

Verdict envelope_check(long n, long r, mpfr_prec_t prec) {
  if (n < 1) throw std::domain_error("envelope_check: n must be >= 1");
  if (r < 2) throw std::domain_error("envelope_check: r must be >= 2");
  Rat s_odd = partial_sum(2 * r - 1).eval(Rat(n));
  Rat s_even = partial_sum(2 * r).eval(Rat(n));
  Interval f = log_term(n, prec);
  int lo_side = f.cmp_rat(s_odd);   // want f > s_odd
  int hi_side = f.cmp_rat(s_even);  // want f < s_even
  if (lo_side < 0 || hi_side > 0) return Verdict::violated;
  if (lo_side > 0 && hi_side < 0) return Verdict::holds;
  return Verdict::undecidable;
}

bool envelope_holds(long n, long r, mpfr_prec_t prec_ceiling) {
  for (mpfr_prec_t prec = kStartPrec; prec <= prec_ceiling; prec *= 2) {
    Verdict v = envelope_check(n, r, prec);
    if (v != Verdict::undecidable) return v == Verdict::holds;
  }
  throw UndecidableError("envelope_holds: undecidable at the precision ceiling (n=" +
                             std::to_string(n) + ", r=" + std::to_string(r) + ")",
                         n, prec_ceiling);
}

Rat optimal_tail_constant(const std::function<RatFunc(const Rat&)>& family, long target_order) {
  auto expand_at = [&](long c) { return laurent_expand(family(Rat(c)), target_order); };
  long base = 0;
  std::map<long, Rat> e0, e1, e2;
  try {
    e0 = expand_at(base);
  } catch (const std::domain_error&) {
    base = 1;  // some templates are singular at c = 0
    e0 = expand_at(base);
  }
  e1 = expand_at(base + 1);
  e2 = expand_at(base + 2);
  auto coeff_of = [](const std::map<long, Rat>& e, long k) {
    auto it = e.find(k);
    return it == e.end() ? Rat(0) : it->second;
  };
  long low = std::min(e0.empty() ? target_order : e0.begin()->first,
                      std::min(e1.empty() ? target_order : e1.begin()->first,
                               e2.empty() ? target_order : e2.begin()->first));
  for (long k = low; k < target_order; ++k) {
    if (coeff_of(e0, k) != coeff_of(e1, k) || coeff_of(e1, k) != coeff_of(e2, k))
      throw std::domain_error(
          "optimal_tail_constant: family depends on c before the target order");
  }
  Rat f0 = coeff_of(e0, target_order);
  Rat f1 = coeff_of(e1, target_order);
  Rat f2 = coeff_of(e2, target_order);
  if (f0 == f1) throw std::domain_error("optimal_tail_constant: no dependence on c at the target order");
  if (f2 - f1 != f1 - f0)
    throw std::domain_error("optimal_tail_constant: dependence on c is not affine at the target order");
  Rat lambda = correction_coeffs(target_order)[target_order];
  // f(c) = f0 + (f1 - f0)(c - base); solve f(c*) = lambda
  Rat cstar = Rat(base) + (lambda - f0) / (f1 - f0);
  Rat check = coeff_of(laurent_expand(family(cstar), target_order), target_order);
  if (check != lambda)
    throw std::domain_error("optimal_tail_constant: solution failed verification");
  return cstar;
}

}  // namespace stirling
