// Command-line front end: certify bounds, evaluate and sandwich factorials,
// run the reproduction report, the Wallis checks, and print the series.
//
// Exit codes: 0 success, 1 usage/parse error, 2 refuted (counterexample),
// 3 undecidable at the precision ceiling, 4 internal error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stirling/catalog.hpp"
#include "stirling/expr.hpp"
#include "stirling/factorial.hpp"
#include "stirling/scan.hpp"
#include "stirling/series.hpp"
#include "stirling/wallis.hpp"

using namespace stirling;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitUndecidable = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::string format = "text";
  long prec_ceiling = 0;  // 0: env or default
  bool timing = false;
};

mpfr_prec_t resolve_ceiling(const Options& opt) {
  long bits = opt.prec_ceiling;
  if (bits == 0) {
    if (const char* env = std::getenv("STIRLING_PREC_CEILING")) bits = std::atol(env);
  }
  if (bits == 0) bits = kDefaultPrecCeiling;
  if (bits < 64) throw CLI::ValidationError("precision ceiling must be at least 64 bits");
  return static_cast<mpfr_prec_t>(bits);
}

bool json_mode(const Options& opt) { return opt.format == "json"; }

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

/// A bound argument is either a catalog name or an expression in the --an
/// grammar. Names imply their certified valid_from and stored parameters.
struct ResolvedBound {
  BoundSpec spec;
  bool from_catalog = false;
};

ResolvedBound resolve_bound(const std::string& text) {
  if (const CatalogEntry* entry = catalog_find(text)) return {entry->spec, true};
  RatFunc a = lower_to_ratfunc(parse_expr(text));
  return {BoundSpec{text, Direction::lower, std::move(a), std::nullopt, 1}, false};
}

int report_parse_error(const ParseError& e) {
  std::cerr << "error: " << e.what() << "\n";
  return kExitUsage;
}

std::string bound_conclusion(const BoundSpec& spec, long from) {
  std::ostringstream os;
  os << "n! " << (spec.direction == Direction::lower ? ">=" : "<=")
     << " sqrt(2 pi n) (n/e)^n e^{a(n)} for all n >= " << from;
  return os.str();
}

// ---------------------------------------------------------------------- certify

int run_certify(const Options& opt, const std::string& an_text, std::optional<long> r,
                std::optional<std::string> direction, std::optional<long> from,
                long refute_limit) {
  ResolvedBound rb;
  try {
    rb = resolve_bound(an_text);
  } catch (const ParseError& e) {
    return report_parse_error(e);
  }
  if (direction) rb.spec.direction = *direction == "lower" ? Direction::lower : Direction::upper;
  if (r) rb.spec.r = *r;
  if (from) rb.spec.claim_from = *from;
  if (!rb.spec.r) {
    std::cerr << "error: no truncation parameter; pass --r (the catalog entry '" << an_text
              << "' carries none)\n";
    return kExitUsage;
  }
  mpfr_prec_t ceiling = resolve_ceiling(opt);

  auto refute = [&](const std::string& why) {
    // the derivation cannot hold eventually; hunt for a concrete failing n
    std::optional<long> counter;
    try {
      counter = scan::first_violation(
          rb.spec.claim_from, rb.spec.claim_from + refute_limit, [&](long n) {
            return strict_compare(n, rb.spec.a, rb.spec.direction, ceiling).verdict ==
                   Verdict::holds;
          });
    } catch (const UndecidableError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUndecidable;
    }
    if (!counter) {
      std::cerr << "error: " << why << "; no counterexample found for n < "
                << rb.spec.claim_from + refute_limit
                << " (the bound may still hold; try a larger --r)\n";
      return kExitUndecidable;
    }
    if (json_mode(opt)) {
      emit(ordered_json{{"refuted", true}, {"counterexample_n", *counter}, {"reason", why}});
    } else {
      std::cout << "refuted: " << bound_conclusion(rb.spec, rb.spec.claim_from)
                << " fails at n = " << *counter << "\n  (" << why << ")\n";
    }
    return kExitRefuted;
  };

  try {
    Certificate cert = certify_bound(rb.spec, ceiling);
    if (json_mode(opt)) {
      emit(to_json(cert));
    } else {
      std::cout << "certificate: " << cert.spec.name << "\n"
                << "  direction: " << to_string(cert.spec.direction) << "\n"
                << "  a(n) = " << cert.spec.a.str() << "\n"
                << "  r = " << *cert.spec.r << ", claimed from n >= " << cert.spec.claim_from
                << "\n"
                << "  sign claim: p(n) " << to_string(cert.claim.required) << " for n >= "
                << cert.claim.threshold << ", p(n) = " << cert.claim.p.str() << "\n"
                << "  base cases: " << cert.base_cases.size() << " checked, all hold\n"
                << "  conclusion: " << bound_conclusion(cert.spec, cert.valid_from) << "\n";
    }
    return kExitOk;
  } catch (const CertifyError& e) {
    switch (e.stage()) {
      case CertifyError::Stage::spec:
        std::cerr << "error: invalid bound: " << e.what() << "\n";
        return kExitUsage;
      case CertifyError::Stage::base_case:
        if (e.counterexample()) {
          if (json_mode(opt)) {
            emit(ordered_json{{"refuted", true},
                              {"counterexample_n", *e.counterexample()},
                              {"reason", e.what()}});
          } else {
            std::cout << "refuted: base case fails at n = " << *e.counterexample() << "\n";
          }
          return kExitRefuted;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
      case CertifyError::Stage::threshold:
        return refute(e.what());
      default:
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
  } catch (const UndecidableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUndecidable;
  }
}

// ------------------------------------------------------------------ eval/sandwich

/// Enclosure of the bound value at n, tightened until its relative width is
/// below 10^-digits.
Interval value_to_digits(long n, const RatFunc& a, long digits, mpfr_prec_t ceiling) {
  mpfr_prec_t prec = kStartPrec;
  while (prec < digits * 10 / 3 + 32) prec *= 2;
  for (;; prec *= 2) {
    if (prec > ceiling)
      throw UndecidableError("value enclosure does not reach the requested digits at the ceiling",
                             n, ceiling);
    Interval v = bound_value(n, a, prec);
    BigFloat tol(prec);
    mpfr_ui_pow_ui(tol.get(), 10, static_cast<unsigned long>(digits), MPFR_RNDD);
    mpfr_div(tol.get(), v.lo().get(), tol.get(), MPFR_RNDD);  // lo * 10^-digits
    if (v.lo().sign() > 0 && v.width() < tol) return v;
  }
}

int check_valid_from(const ResolvedBound& rb, long n, const std::string& text) {
  if (rb.from_catalog && n < rb.spec.claim_from) {
    std::cerr << "error: bound '" << text << "' is certified from n >= " << rb.spec.claim_from
              << ", got n = " << n << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_eval(const Options& opt, long n, const std::string& an_text, long digits) {
  ResolvedBound rb;
  try {
    rb = resolve_bound(an_text);
  } catch (const ParseError& e) {
    return report_parse_error(e);
  }
  if (int rc = check_valid_from(rb, n, an_text); rc != kExitOk) return rc;
  try {
    Interval v = value_to_digits(n, rb.spec.a, digits, resolve_ceiling(opt));
    size_t d = static_cast<size_t>(digits);
    if (json_mode(opt)) {
      emit(ordered_json{{"n", n},
                        {"a", rb.spec.a.str()},
                        {"lo", v.lo().str(d, MPFR_RNDD)},
                        {"hi", v.hi().str(d, MPFR_RNDU)}});
    } else {
      std::cout << "sqrt(2 pi n) (n/e)^n e^{a(n)} at n = " << n << ", a(n) = " << rb.spec.a.str()
                << "\n  in " << v.str(d) << "\n";
    }
    return kExitOk;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UndecidableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUndecidable;
  }
}

long common_leading_digits(const std::string& lo, const std::string& hi) {
  // both in scientific notation d.ddd...e+xx; exponents must agree
  auto exp_of = [](const std::string& s) { return s.substr(s.find('e')); };
  if (exp_of(lo) != exp_of(hi)) return 0;
  long count = 0;
  for (size_t i = 0; i < std::min(lo.size(), hi.size()); ++i) {
    if (lo[i] == 'e') break;
    if (lo[i] != hi[i]) break;
    if (std::isdigit(static_cast<unsigned char>(lo[i]))) ++count;
  }
  return count;
}

int run_sandwich(const Options& opt, long n, const std::string& lower_text,
                 const std::string& upper_text, long digits) {
  ResolvedBound lo, hi;
  try {
    lo = resolve_bound(lower_text);
    hi = resolve_bound(upper_text);
  } catch (const ParseError& e) {
    return report_parse_error(e);
  }
  if (int rc = check_valid_from(lo, n, lower_text); rc != kExitOk) return rc;
  if (int rc = check_valid_from(hi, n, upper_text); rc != kExitOk) return rc;
  mpfr_prec_t ceiling = resolve_ceiling(opt);
  try {
    Int nf = factorial(static_cast<unsigned long>(n));
    Interval lo_v = value_to_digits(n, lo.spec.a, digits, ceiling);
    Interval hi_v = value_to_digits(n, hi.spec.a, digits, ceiling);
    int lo_cmp = lo_v.cmp_int(nf);
    int hi_cmp = hi_v.cmp_int(nf);
    for (mpfr_prec_t prec = 2 * std::max(lo_v.prec(), hi_v.prec());
         (lo_cmp == 0 || hi_cmp == 0) && prec <= ceiling; prec *= 2) {
      lo_v = bound_value(n, lo.spec.a, prec);
      hi_v = bound_value(n, hi.spec.a, prec);
      lo_cmp = lo_v.cmp_int(nf);
      hi_cmp = hi_v.cmp_int(nf);
    }
    if (lo_cmp == 0 || hi_cmp == 0)
      throw UndecidableError("sandwich containment undecidable at the precision ceiling", n,
                             ceiling);
    bool contained = lo_cmp < 0 && hi_cmp > 0;
    size_t d = static_cast<size_t>(digits);
    std::string lo_str = lo_v.lo().str(d, MPFR_RNDD);
    std::string hi_str = hi_v.hi().str(d, MPFR_RNDU);
    long pinned = contained ? common_leading_digits(lo_str, hi_str) : 0;
    std::string exact = nf.get_str();
    if (json_mode(opt)) {
      emit(ordered_json{{"n", n},
                        {"lower", ordered_json{{"a", lo.spec.a.str()},
                                               {"lo", lo_str},
                                               {"hi", lo_v.hi().str(d, MPFR_RNDU)}}},
                        {"upper", ordered_json{{"a", hi.spec.a.str()},
                                               {"lo", hi_v.lo().str(d, MPFR_RNDD)},
                                               {"hi", hi_str}}},
                        {"factorial", exact},
                        {"factorial_digits", static_cast<long>(exact.size())},
                        {"contained", contained},
                        {"digits_pinned_by_sandwich", pinned}});
    } else {
      std::cout << "n = " << n << "\n  lower bound in " << lo_v.str(d) << "\n  upper bound in "
                << hi_v.str(d) << "\n  n! = ";
      if (exact.size() <= 100)
        std::cout << exact;
      else
        std::cout << exact.substr(0, 40) << "..." << exact.substr(exact.size() - 10) << " ("
                  << exact.size() << " digits)";
      std::cout << "\n  containment: " << (contained ? "holds" : "VIOLATED")
                << "\n  leading digits pinned by the sandwich alone: " << pinned << "\n";
    }
    return contained ? kExitOk : kExitRefuted;
  } catch (const UndecidableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUndecidable;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// ------------------------------------------------------------- reproduce/wallis/series

int run_reproduce(const Options& opt, long nmax) {
  ReproductionReport report = reproduce_catalog(resolve_ceiling(opt), nmax);
  if (json_mode(opt))
    emit(report_json(report));
  else
    std::cout << report_text(report);
  return report.all_certified ? kExitOk : kExitRefuted;
}

int run_wallis(const Options& opt, long max_n, const std::string& ratio_list, long digits) {
  mpfr_prec_t ceiling = resolve_ceiling(opt);
  try {
    auto verdicts = scan::map_range<Verdict>(1, max_n + 1, [&](long n) {
      return wallis_sandwich_check(static_cast<unsigned long>(n), ceiling);
    });
    std::vector<unsigned long> ratio_ns;
    if (!ratio_list.empty()) {
      std::stringstream ss(ratio_list);
      for (std::string part; std::getline(ss, part, ',');)
        ratio_ns.push_back(std::stoul(part));
    }
    std::vector<RatioRow> rows;
    if (!ratio_ns.empty())
      rows = ratio_limit_table(ratio_ns, static_cast<mpfr_prec_t>(digits * 10 / 3 + 32));
    size_t d = static_cast<size_t>(digits);
    if (json_mode(opt)) {
      ordered_json j;
      auto arr = ordered_json::array();
      for (long n = 1; n <= max_n; ++n)
        arr.push_back(ordered_json{{"n", n}, {"sandwich", to_string(verdicts[n - 1])}});
      j["sandwich_checks"] = std::move(arr);
      if (!rows.empty()) {
        auto t = ordered_json::array();
        for (const auto& row : rows)
          t.push_back(ordered_json{{"n", row.n},
                                   {"lo", row.ratio.lo().str(d, MPFR_RNDD)},
                                   {"hi", row.ratio.hi().str(d, MPFR_RNDU)},
                                   {"gap_to_sqrt2pi", row.gap.str(d, MPFR_RNDU)}});
        j["ratio_table"] = std::move(t);
      }
      emit(j);
    } else {
      for (long n = 1; n <= max_n; ++n)
        std::cout << "n=" << n << " sandwich " << to_string(verdicts[n - 1]) << "\n";
      if (!rows.empty()) std::cout << ratio_table_csv(rows, d);
    }
    bool all = true;
    for (Verdict v : verdicts) all = all && v == Verdict::holds;
    return all ? kExitOk : kExitRefuted;
  } catch (const UndecidableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUndecidable;
  }
}

int run_series(const Options& opt, long upto) {
  if (upto < 2) {
    std::cerr << "error: --upto must be at least 2\n";
    return kExitUsage;
  }
  if (json_mode(opt)) {
    auto arr = ordered_json::array();
    for (long k = 2; k <= upto; ++k)
      arr.push_back(ordered_json{{"k", k}, {"value", stirling_coeff(k).str()}});
    emit(ordered_json{{"coefficients", std::move(arr)}});
  } else {
    for (long k = 2; k <= upto; ++k) std::cout << stirling_coeff(k).str() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified sharp Stirling bounds for n!"};
  app.require_subcommand(1);
  app.fallthrough();  // global options are accepted after the subcommand too

  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--prec-ceiling", opt.prec_ceiling,
                 "precision ceiling in bits (also env STIRLING_PREC_CEILING)");
  app.add_flag("--timing", opt.timing, "print wall-clock time (text mode only)");

  auto* certify = app.add_subcommand("certify", "derive and verify a bound certificate");
  std::string an_text;
  std::optional<long> r_opt, from_opt;
  std::optional<std::string> dir_opt;
  long refute_limit = 10000;
  certify->add_option("--an", an_text, "correction term expression or catalog name")->required();
  certify->add_option("--r", r_opt, "truncation parameter (>= 2)");
  certify->add_option("--direction", dir_opt, "bound side")
      ->check(CLI::IsMember({"lower", "upper"}));
  certify->add_option("--from", from_opt, "first n for which the bound is claimed");
  certify->add_option("--refute-limit", refute_limit, "scan length for counterexample search");

  auto* eval = app.add_subcommand("eval", "enclose the bound value at one n");
  long eval_n = 1, eval_digits = 30;
  std::string eval_an;
  eval->add_option("--n", eval_n, "evaluation point")->required();
  eval->add_option("--an", eval_an, "correction term expression or catalog name")->required();
  eval->add_option("--digits", eval_digits, "significant digits (default 30)");

  auto* sandwich = app.add_subcommand("sandwich", "two-sided enclosure of n!");
  long sw_n = 1, sw_digits = 30;
  std::string sw_lower, sw_upper;
  sandwich->add_option("--n", sw_n, "evaluation point")->required();
  sandwich->add_option("--lower", sw_lower, "lower bound (name or expression)")->required();
  sandwich->add_option("--upper", sw_upper, "upper bound (name or expression)")->required();
  sandwich->add_option("--digits", sw_digits, "significant digits (default 30)");

  auto* reproduce = app.add_subcommand("reproduce", "re-derive the full bound catalog");
  long repro_nmax = 1000;
  reproduce->add_option("--nmax", repro_nmax, "sweep limit for underived catalog entries");

  auto* wallis = app.add_subcommand("wallis", "Wallis integral checks and the ratio table");
  long wallis_max = 10, wallis_digits = 20;
  std::string wallis_ratio;
  wallis->add_option("--max-n", wallis_max, "run sandwich checks for n = 1..max");
  wallis->add_option("--ratio", wallis_ratio, "comma-separated n list for the ratio table (CSV)");
  wallis->add_option("--digits", wallis_digits, "digits in the ratio table");

  auto* series = app.add_subcommand("series", "exact series coefficients");
  long upto = 12;
  series->add_option("--upto", upto, "last exponent k (coefficients for k = 2..upto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = kExitInternal;
  try {
    if (*certify)
      rc = run_certify(opt, an_text, r_opt, dir_opt, from_opt, refute_limit);
    else if (*eval)
      rc = run_eval(opt, eval_n, eval_an, eval_digits);
    else if (*sandwich)
      rc = run_sandwich(opt, sw_n, sw_lower, sw_upper, sw_digits);
    else if (*reproduce)
      rc = run_reproduce(opt, repro_nmax);
    else if (*wallis)
      rc = run_wallis(opt, wallis_max, wallis_ratio, wallis_digits);
    else if (*series)
      rc = run_series(opt, upto);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  if (opt.timing && !json_mode(opt)) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cout << "wall_ms " << ms << "\n";
  }
  return rc;
}
