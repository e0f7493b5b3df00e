#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stirling/bounds.hpp"
#include "stirling/common.hpp"
#include "stirling/ratfunc.hpp"

namespace stirling {

/// One candidate bound: direction, correction term a (a rational function of n
/// with a(n) -> 0 and a(n) > 0 on the claimed range), truncation parameter r,
/// and the first n for which the bound is claimed. Robbins/Maria-style catalog
/// entries that the source states without a derivation carry no r.
struct BoundSpec {
  std::string name;
  Direction direction = Direction::lower;
  RatFunc a;
  std::optional<long> r;
  long claim_from = 1;
};

/// Primitive integer polynomial certified to keep required_sign at every
/// integer >= threshold.
struct SignClaim {
  Poly p;
  Sign required = Sign::geq_zero;
  long threshold = 1;
};

struct PendingClaim {
  Poly p;
  Sign required = Sign::geq_zero;
};

struct Derivation {
  RatFunc difference;  // D(n) = S_m(n) - (a(n) - a(n+1)), exact
  PendingClaim claim;  // primitive numerator with the direction's required sign
  int den_sign = 1;    // certified constant sign of den(D) on the claimed range
};

struct BaseCase {
  long n = 0;
  Verdict verdict = Verdict::undecidable;
  mpfr_prec_t prec_bits = 0;
};

/// Complete, replayable proof object for one bound.
struct Certificate {
  BoundSpec spec;
  SignClaim claim;
  std::vector<BaseCase> base_cases;  // every integer in [valid_from, threshold)
  long valid_from = 1;
  RatFunc derivation;  // the exact difference D(n) before clearing denominators
};

class CertifyError : public std::runtime_error {
 public:
  enum class Stage { spec, derivation, threshold, base_case };
  CertifyError(Stage stage, const std::string& what, std::optional<long> counterexample = {})
      : std::runtime_error(what), stage_(stage), counterexample_(counterexample) {}
  Stage stage() const { return stage_; }
  std::optional<long> counterexample() const { return counterexample_; }

 private:
  Stage stage_;
  std::optional<long> counterexample_;
};

/// Checks the BoundSpec invariants: deg num < deg den, den(a) nonzero and
/// a(n) > 0 at every integer >= claim_from (eventual sign plus exact scan).
void validate_spec(const BoundSpec& spec);

/// Lemma step: D(n) = S_m(n) - (a(n) - a(n+1)) with m = 2r-1 (lower) or 2r
/// (upper); den(D) is certified positive at every integer >= claim_from before
/// the numerator is allowed to stand in for the inequality.
Derivation derive_difference(const BoundSpec& spec);

/// Minimal N* >= scan_from with required_sign at every integer >= N*:
/// root upper bound, exact integer sign scan up to it, leading-coefficient
/// argument beyond, and an independent Sturm count of roots above N* that must
/// come back zero.
long eventual_sign_threshold(const PendingClaim& claim, long scan_from,
                             long scan_ceiling = 1'000'000);

/// Adaptive interval comparison of n! against the bound for every n in
/// [from, to); ordered deterministically, parallel inside.
std::vector<BaseCase> verify_base_cases(const BoundSpec& spec, long from, long to_exclusive,
                                        mpfr_prec_t prec_ceiling = kDefaultPrecCeiling);

/// Full pipeline; throws CertifyError with the failing stage (a refuted base
/// case carries its counterexample n).
Certificate certify_bound(const BoundSpec& spec, mpfr_prec_t prec_ceiling = kDefaultPrecCeiling);

/// Interval confirmation that T_n = n! e^n / n^(n+1/2) e^{-a(n)} is monotone
/// nonincreasing (lower) or nondecreasing (upper) across [from, to].
Verdict ratio_monotone_check(const RatFunc& a, Direction direction, long from, long to,
                             mpfr_prec_t prec_ceiling = kDefaultPrecCeiling);

// Serialization: exact integers/rationals as decimal strings, never floats.
nlohmann::ordered_json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::ordered_json ratfunc_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace stirling
