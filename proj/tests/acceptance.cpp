// Acceptance suite: ten end-to-end criteria, each with a pinned tolerance and
// a wall-clock budget, one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stirling/bounds.hpp"
#include "stirling/catalog.hpp"
#include "stirling/expr.hpp"
#include "stirling/factorial.hpp"
#include "stirling/scan.hpp"
#include "stirling/series.hpp"
#include "stirling/wallis.hpp"

using namespace stirling;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

RatFunc an(const char* text) { return lower_to_ratfunc(parse_expr(text)); }

std::string fail_join(const std::vector<std::string>& problems, const std::string& ok_msg) {
  if (problems.empty()) return ok_msg;
  std::string s = problems.front();
  for (size_t i = 1; i < problems.size() && i < 4; ++i) s += "; " + problems[i];
  if (problems.size() > 4) s += "; ... (" + std::to_string(problems.size()) + " problems)";
  return s;
}

// --------------------------------------------------------------- criterion 1

Outcome series_fidelity() {
  const Rat expected[] = {Rat(1, 12),  Rat(-1, 12),  Rat(3, 40),  Rat(-1, 15),
                          Rat(5, 84),  Rat(-3, 56),  Rat(7, 144), Rat(-2, 45),
                          Rat(9, 220), Rat(-5, 132), Rat(11, 312)};
  for (long k = 2; k <= 12; ++k)
    if (stirling_coeff(k) != expected[k - 2])
      return {false, "coefficient mismatch at k=" + std::to_string(k) + ": got " +
                         stirling_coeff(k).str()};
  return {true, "coefficients k=2..12 equal the displayed fractions exactly"};
}

// --------------------------------------------------------------- criterion 2

Outcome polynomial_reproduction() {
  std::vector<std::string> problems;
  for (const char* name : {"c103_upper", "c102_lower"}) {
    const CatalogEntry* entry = catalog_find(name);
    Derivation deriv = derive_difference(entry->spec);
    const Poly& derived = deriv.claim.p;
    const Poly& printed = *entry->printed_poly;
    bool scaled_match = !derived.is_zero() && derived.degree() == printed.degree() &&
                        (printed.leading() / derived.leading()).sign() > 0 &&
                        (printed.leading() / derived.leading()) * derived == printed;
    if (!scaled_match)
      problems.push_back(std::string(name) + ": derived polynomial does not match the printed one");
    long threshold = eventual_sign_threshold(deriv.claim, entry->spec.claim_from);
    long expected = *entry->printed_threshold;  // pinned: 14 and 10
    if (threshold != expected) {
      std::ostringstream os;
      os << name << ": eventual_sign_threshold = " << threshold << ", criterion expects "
         << expected;
      if (std::string(name) == "c103_upper") {
        // exact evidence: the printed inequality is still violated at 14
        os << " [exact evaluation: p(14) = " << derived.eval(Rat(14)).str()
           << " > 0, so the printed threshold fails sign verification and the minimal valid "
              "threshold is 15; the n=14 case is covered by the certified base range 1..14]";
      }
      problems.push_back(os.str());
    }
  }
  return {problems.empty(), fail_join(problems, "printed polynomials and thresholds reproduced")};
}

// --------------------------------------------------------------- criterion 3

Outcome table_thresholds() {
  const std::pair<const char*, long> rows[] = {
      {"t944_upper", 33}, {"t945_lower", 5}, {"t2376_upper", 8}, {"t2375_lower", 58}};
  const long expected_r[] = {5, 6, 6, 7};
  std::vector<std::string> problems;
  for (size_t i = 0; i < 4; ++i) {
    const CatalogEntry* entry = catalog_find(rows[i].first);
    if (*entry->spec.r != expected_r[i]) {
      problems.push_back(std::string(rows[i].first) + ": wrong derivation parameter r");
      continue;
    }
    Derivation deriv = derive_difference(entry->spec);
    long threshold = eventual_sign_threshold(deriv.claim, entry->spec.claim_from);
    if (threshold != rows[i].second)
      problems.push_back(std::string(rows[i].first) + ": derived " + std::to_string(threshold) +
                         " expected " + std::to_string(rows[i].second));
  }
  return {problems.empty(), fail_join(problems, "derived thresholds are 33, 5, 8, 58")};
}

// --------------------------------------------------------------- criterion 4

Outcome certificates() {
  const std::pair<const char*, long> entries[] = {
      {"c103_upper", 1},  {"c102_lower", 8}, {"t944_upper", 26},   {"t945_lower", 1},
      {"t2376_upper", 1}, {"t2375_lower", 53}, {"five_n_lower", 3}, {"five_n_upper", 3}};
  std::vector<std::string> problems;
  for (const auto& [name, from] : entries) {
    try {
      Certificate cert = certify_bound(catalog_find(name)->spec);
      if (cert.valid_from != from)
        problems.push_back(std::string(name) + ": valid_from " + std::to_string(cert.valid_from) +
                           " expected " + std::to_string(from));
    } catch (const std::exception& e) {
      problems.push_back(std::string(name) + ": " + e.what());
    }
  }
  return {problems.empty(), fail_join(problems, "all eight bounds certified end to end")};
}

// --------------------------------------------------------------- criterion 5

Outcome sandwich_at_scale() {
  RatFunc a102 = catalog_find("c102_lower")->spec.a;
  RatFunc a103 = catalog_find("c103_upper")->spec.a;
  std::vector<long> ns;
  for (long n = 8; n <= 1000; ++n) ns.push_back(n);
  ns.push_back(10000);
  ns.push_back(100000);
  auto verdicts = scan::map_range<bool>(0, static_cast<long>(ns.size()), [&](long i) {
    long n = ns[static_cast<size_t>(i)];
    return strict_compare(n, a102, Direction::lower).verdict == Verdict::holds &&
           strict_compare(n, a103, Direction::upper).verdict == Verdict::holds;
  });
  for (size_t i = 0; i < ns.size(); ++i)
    if (!verdicts[i]) return {false, "sandwich violated at n=" + std::to_string(ns[i])};
  // relative width at n = 100: (upper_hi - lower_lo) / 100! < 1e-15
  Interval lo = bound_value(100, a102, 128);
  Interval hi = bound_value(100, a103, 128);
  BigFloat width(128);
  mpfr_sub(width.get(), hi.hi().get(), lo.lo().get(), MPFR_RNDU);
  BigFloat rel(128);
  Int f100 = factorial(100);
  BigFloat f(128);
  mpfr_set_z(f.get(), f100.get_mpz_t(), MPFR_RNDD);
  mpfr_div(rel.get(), width.get(), f.get(), MPFR_RNDU);
  BigFloat tol(128);
  mpfr_set_str(tol.get(), "1e-15", 10, MPFR_RNDD);
  if (!(rel < tol)) return {false, "relative sandwich width at n=100 not below 1e-15"};
  std::string rel_str = rel.str(3, MPFR_RNDU);
  return {true, "n in {8..1000, 1e4, 1e5} all enclosed; relative width at n=100 is " + rel_str};
}

// --------------------------------------------------------------- criterion 6

Outcome robbins_maria() {
  std::vector<std::string> problems;
  for (const char* name : {"robbins_upper", "robbins_lower", "maria_lower"}) {
    const CatalogEntry* entry = catalog_find(name);
    auto bad = scan::first_violation(1, 1001, [&](long n) {
      return strict_compare(n, entry->spec.a, entry->spec.direction).verdict == Verdict::holds;
    });
    if (bad) problems.push_back(std::string(name) + " fails at n=" + std::to_string(*bad));
  }
  const std::pair<const char*, Direction> monotone[] = {
      {"0", Direction::lower},          // T_n itself is nonincreasing
      {"1/n", Direction::upper},        // overshoot makes it nondecreasing
      {"1/(12n)", Direction::upper},    // upper-side correction
      {"1/(12n+1)", Direction::lower},  // lower-side correction
  };
  for (const auto& [text, dir] : monotone) {
    RatFunc a = text == std::string("0") ? RatFunc() : an(text);
    if (ratio_monotone_check(a, dir, 1, 100) != Verdict::holds)
      problems.push_back(std::string("ratio monotonicity fails for a=") + text);
  }
  return {problems.empty(),
          fail_join(problems, "both classic bounds hold on 1..1000; all four ratio checks hold")};
}

// --------------------------------------------------------------- criterion 7

Outcome wallis_suite() {
  for (unsigned long n = 0; n <= 300; ++n) wallis_integral(n);  // asserts closed form internally
  auto mono = scan::map_range<Verdict>(
      1, 301, [](long n) { return wallis_monotone_check(static_cast<unsigned long>(n)); });
  for (size_t i = 0; i < mono.size(); ++i)
    if (mono[i] != Verdict::holds)
      return {false, "monotonicity fails at n=" + std::to_string(i + 1)};
  auto sand = scan::map_range<Verdict>(
      1, 1001, [](long n) { return wallis_sandwich_check(static_cast<unsigned long>(n)); });
  for (size_t i = 0; i < sand.size(); ++i)
    if (sand[i] != Verdict::holds)
      return {false, "sandwich fails at n=" + std::to_string(i + 1)};
  Interval gap =
      (stirling_ratio(1000000, 128) - const_enclosure(NamedConst::sqrt_2pi, 128)).abs();
  if (gap.cmp_rat(Rat(22, 100000000)) >= 0)  // 2.2e-7
    return {false, "stirling_ratio(1e6) not within 2.2e-7 of sqrt(2 pi)"};
  return {true, "recursion==closed form (0..300), strictly decreasing, sandwich holds "
                "(1..1000), ratio gap at 1e6 below 2.2e-7"};
}

// --------------------------------------------------------------- criterion 8

Outcome envelope_property() {
  auto ok = scan::map_range<bool>(2, 201, [](long n) {
    for (long r = 2; r <= 6; ++r)
      if (!envelope_holds(n, r)) return false;
    return true;
  });
  for (size_t i = 0; i < ok.size(); ++i)
    if (!ok[i]) return {false, "envelope violated at n=" + std::to_string(i + 2)};
  return {true, "S_{2r-1}(n) <= f(n) <= S_{2r}(n) for n in 2..200, r in 2..6; zero violations"};
}

// ------------------------------------------------------------ criteria 9, 10

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(STIRLING_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  return {WEXITSTATUS(pclose(pipe)), out};
}

Outcome negative_control() {
  CliResult r = run_cli("certify --an \"1/(13n)\" --direction upper --r 2 --from 1");
  if (r.exit_code != 2)
    return {false, "expected exit code 2, got " + std::to_string(r.exit_code)};
  if (r.out.find("n = 1") == std::string::npos && r.out.find("counterexample") == std::string::npos)
    return {false, "no concrete counterexample in the output"};
  return {true, "cmd_certify refutes a=1/(13n) upper with exit 2 and counterexample n=1"};
}

Outcome determinism() {
  CliResult a = run_cli("reproduce --format json");
  CliResult b = run_cli("reproduce --format json");
  if (a.exit_code != 0 || b.exit_code != 0)
    return {false, "reproduce exited nonzero (" + std::to_string(a.exit_code) + ", " +
                       std::to_string(b.exit_code) + ")"};
  if (a.out != b.out) return {false, "consecutive runs differ"};
  if (a.out.empty()) return {false, "empty report"};
  return {true, "two consecutive reproduce runs are byte-identical (" +
                    std::to_string(a.out.size()) + " bytes)"};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "series fidelity", 1.0, series_fidelity},
      {2, "polynomial + threshold reproduction (103/102 families)", 5.0,
       polynomial_reproduction},
      {3, "table thresholds 33/5/8/58", 10.0, table_thresholds},
      {4, "end-to-end certificates", 60.0, certificates},
      {5, "sandwich soundness at scale", 120.0, sandwich_at_scale},
      {6, "classic bounds + ratio monotonicity", 60.0, robbins_maria},
      {7, "wallis suite", 120.0, wallis_suite},
      {8, "envelope property", 60.0, envelope_property},
      {9, "negative control (CLI refutation)", 10.0, negative_control},
      {10, "byte-identical reproduce output", 60.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs < c.budget_s;
    bool pass = out.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2fs, budget %.0fs)\n      %s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, c.budget_s,
                out.detail.c_str(),
                out.pass && !in_budget ? " [over time budget]" : "");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
