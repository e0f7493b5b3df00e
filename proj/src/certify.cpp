#include "stirling/certify.hpp"

#include <algorithm>

#include "stirling/roots.hpp"
#include "stirling/scan.hpp"
#include "stirling/series.hpp"

namespace stirling {

namespace {

using Stage = CertifyError::Stage;

std::string at_n(long n) { return " at n=" + std::to_string(n); }

/// Largest integer in [from, to_inclusive] violating the sign, if any.
std::optional<long> last_sign_violation(const Poly& p, Sign required, long from,
                                        long to_inclusive) {
  if (to_inclusive < from) return std::nullopt;
  auto signs = integer_sign_scan(p, from, to_inclusive + 1);
  for (long i = to_inclusive - from; i >= 0; --i) {
    int s = signs[static_cast<size_t>(i)];
    bool ok = required == Sign::geq_zero ? s >= 0 : s <= 0;
    if (!ok) return from + i;
  }
  return std::nullopt;
}

}  // namespace

void validate_spec(const BoundSpec& spec) {
  if (spec.claim_from < 1)
    throw CertifyError(Stage::spec, "claim_from must be >= 1");
  if (spec.r && *spec.r < 2) throw CertifyError(Stage::spec, "truncation parameter r must be >= 2");
  const RatFunc& a = spec.a;
  if (a.is_zero()) throw CertifyError(Stage::spec, "correction term is identically zero");
  if (a.num().degree() >= a.den().degree())
    throw CertifyError(Stage::spec,
                       "correction term does not vanish at infinity (deg num >= deg den)");
  // eventual positivity: canonical den has positive leading coefficient
  if (a.num().leading().sign() <= 0)
    throw CertifyError(Stage::spec, "correction term is eventually nonpositive");
  long scan_to = spec.claim_from;  // exclusive
  if (a.num().degree() >= 1) {
    Int b = real_root_bound(a.num());
    if (b > scan_to) scan_to = b.get_si();
  }
  if (a.den().degree() >= 1) {
    Int b = real_root_bound(a.den());
    if (b > scan_to) scan_to = b.get_si();
  }
  auto den_signs = integer_sign_scan(a.den(), spec.claim_from, scan_to);
  auto num_signs = integer_sign_scan(a.num(), spec.claim_from, scan_to);
  for (size_t i = 0; i < den_signs.size(); ++i) {
    long n = spec.claim_from + static_cast<long>(i);
    if (den_signs[i] == 0)
      throw CertifyError(Stage::spec, "denominator of the correction term vanishes" + at_n(n));
    if (num_signs[i] * den_signs[i] <= 0)
      throw CertifyError(Stage::spec, "correction term is not positive" + at_n(n));
  }
}

Derivation derive_difference(const BoundSpec& spec) {
  validate_spec(spec);
  if (!spec.r)
    throw CertifyError(Stage::derivation, "truncation parameter r required for a derivation");
  long m = spec.direction == Direction::lower ? 2 * *spec.r - 1 : 2 * *spec.r;
  RatFunc s = partial_sum(m).to_ratfunc();
  RatFunc diff = spec.a - spec.a.shifted(1);
  RatFunc d = s - diff;
  // canonical form guarantees a positive leading denominator coefficient, so
  // the eventual sign is +1; it must also hold at every claimed integer before
  // num(D) may stand in for D.
  const Poly& den = d.den();
  long scan_to = spec.claim_from;
  if (den.degree() >= 1) {
    Int b = real_root_bound(den);
    if (b > scan_to) scan_to = b.get_si();
  }
  auto signs = integer_sign_scan(den, spec.claim_from, scan_to);
  for (size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == 0)
      throw CertifyError(Stage::derivation, "denominator of the difference vanishes" +
                                                at_n(spec.claim_from + static_cast<long>(i)));
    if (signs[i] < 0)
      throw CertifyError(Stage::derivation,
                         "denominator of the difference is not of constant sign" +
                             at_n(spec.claim_from + static_cast<long>(i)));
  }
  Sign required = spec.direction == Direction::lower ? Sign::geq_zero : Sign::leq_zero;
  return Derivation{d, PendingClaim{d.num().primitive(), required}, /*den_sign=*/1};
}

long eventual_sign_threshold(const PendingClaim& claim, long scan_from, long scan_ceiling) {
  if (scan_from < 1)
    throw CertifyError(Stage::threshold, "scan_from must be >= 1");
  const Poly& p = claim.p;
  if (p.is_zero()) return scan_from;  // either sign holds everywhere
  int lead = p.leading().sign();
  bool compatible = claim.required == Sign::geq_zero ? lead > 0 : lead < 0;
  if (!compatible)
    throw CertifyError(Stage::threshold,
                       "bound cannot hold eventually: leading coefficient has the wrong sign");
  long scan_hi = scan_from;  // inclusive
  if (p.degree() >= 1) {
    Int b = real_root_bound(p);
    if (!b.fits_slong_p() || b.get_si() - scan_from > scan_ceiling)
      throw CertifyError(Stage::threshold, "threshold search ceiling exceeded");
    scan_hi = std::max(scan_from, b.get_si());
  }
  auto bad = last_sign_violation(p, claim.required, scan_from, scan_hi);
  long threshold = bad ? *bad + 1 : scan_from;
  // independent cross-check: no real roots, hence no sign changes, above N*
  if (roots_above(p, Rat(threshold)) != 0)
    throw CertifyError(Stage::threshold,
                       "Sturm cross-check found a root beyond the computed threshold");
  return threshold;
}

std::vector<BaseCase> verify_base_cases(const BoundSpec& spec, long from, long to_exclusive,
                                        mpfr_prec_t prec_ceiling) {
  if (from < 1) throw CertifyError(Stage::base_case, "base cases must start at n >= 1");
  return scan::map_range<BaseCase>(from, to_exclusive, [&](long n) {
    auto out = strict_compare(n, spec.a, spec.direction, prec_ceiling);
    return BaseCase{n, out.verdict, out.prec_used};
  });
}

Certificate certify_bound(const BoundSpec& spec, mpfr_prec_t prec_ceiling) {
  Derivation deriv = derive_difference(spec);
  long threshold = eventual_sign_threshold(deriv.claim, spec.claim_from);
  auto base = verify_base_cases(spec, spec.claim_from, threshold, prec_ceiling);
  for (const auto& bc : base)
    if (bc.verdict != Verdict::holds)
      throw CertifyError(Stage::base_case, "bound refuted" + at_n(bc.n), bc.n);
  return Certificate{spec,
                     SignClaim{deriv.claim.p, deriv.claim.required, threshold},
                     std::move(base),
                     spec.claim_from,
                     deriv.difference};
}

Verdict ratio_monotone_check(const RatFunc& a, Direction direction, long from, long to,
                             mpfr_prec_t prec_ceiling) {
  if (from < 1 || to < from)
    throw std::domain_error("ratio_monotone_check: bad range");
  // per adjacent pair: certified comparison of T_n and T_{n+1}
  auto pair_verdict = [&](long n) -> Verdict {
    for (mpfr_prec_t prec = kStartPrec; prec <= prec_ceiling; prec *= 2) {
      auto t = [&](long k) {
        return stirling_ratio(static_cast<unsigned long>(k), prec) *
               Interval::from_rat(-a.eval(Rat(k)), prec).exp();
      };
      int c = t(n).cmp(t(n + 1));
      if (c != 0) {
        bool ok = direction == Direction::lower ? c > 0 : c < 0;
        return ok ? Verdict::holds : Verdict::violated;
      }
    }
    throw UndecidableError("ratio_monotone_check: undecidable" + at_n(n), n, prec_ceiling);
  };
  auto verdicts = scan::map_range<Verdict>(from, to, pair_verdict);
  for (Verdict v : verdicts)
    if (v == Verdict::violated) return Verdict::violated;
  return Verdict::holds;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

nlohmann::ordered_json poly_json(const Poly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  std::vector<Rat> coeffs;
  for (const auto& c : j) coeffs.push_back(Rat::parse(c.get<std::string>()));
  return Poly(std::move(coeffs));
}

}  // namespace

nlohmann::ordered_json ratfunc_json(const RatFunc& f) {
  return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

nlohmann::ordered_json to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["spec"] = {{"name", cert.spec.name},
               {"direction", to_string(cert.spec.direction)},
               {"a", ratfunc_json(cert.spec.a)},
               {"claim_from", cert.spec.claim_from}};
  if (cert.spec.r) j["spec"]["r"] = *cert.spec.r;
  j["claim"] = {{"poly", poly_json(cert.claim.p)},
                {"required_sign", to_string(cert.claim.required)},
                {"threshold", cert.claim.threshold}};
  auto bases = nlohmann::ordered_json::array();
  for (const auto& bc : cert.base_cases)
    bases.push_back({{"n", bc.n},
                     {"verdict", to_string(bc.verdict)},
                     {"prec_bits", static_cast<long>(bc.prec_bits)}});
  j["base_cases"] = std::move(bases);
  j["valid_from"] = cert.valid_from;
  j["derivation"] = ratfunc_json(cert.derivation);
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != 1)
    throw std::runtime_error("certificate: unsupported schema version");
  Certificate cert;
  const auto& s = j.at("spec");
  cert.spec.name = s.at("name").get<std::string>();
  cert.spec.direction =
      s.at("direction").get<std::string>() == "lower" ? Direction::lower : Direction::upper;
  cert.spec.a = ratfunc_from_json(s.at("a"));
  if (s.contains("r")) cert.spec.r = s.at("r").get<long>();
  cert.spec.claim_from = s.at("claim_from").get<long>();
  const auto& c = j.at("claim");
  cert.claim.p = poly_from_json(c.at("poly"));
  cert.claim.required = c.at("required_sign").get<std::string>() == ">=0" ? Sign::geq_zero
                                                                          : Sign::leq_zero;
  cert.claim.threshold = c.at("threshold").get<long>();
  for (const auto& b : j.at("base_cases")) {
    BaseCase bc;
    bc.n = b.at("n").get<long>();
    std::string v = b.at("verdict").get<std::string>();
    bc.verdict = v == "holds" ? Verdict::holds
                              : (v == "violated" ? Verdict::violated : Verdict::undecidable);
    bc.prec_bits = b.at("prec_bits").get<long>();
    cert.base_cases.push_back(bc);
  }
  cert.valid_from = j.at("valid_from").get<long>();
  cert.derivation = ratfunc_from_json(j.at("derivation"));
  return cert;
}

}  // namespace stirling
