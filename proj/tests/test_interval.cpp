#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "stirling/factorial.hpp"
#include "stirling/interval.hpp"

using namespace stirling;

namespace {

// exact bracket (L, L + ulp) of an irrational constant from its published
// decimal truncation; a correct enclosure must meet it
void check_against_digits(const Interval& iv, const std::string& truncated) {
  Rat lo = Rat::parse(truncated);
  size_t frac = truncated.size() - truncated.find('.') - 1;
  Rat hi = lo + Rat(1) / Rat(10).pow(frac);
  CHECK(iv.cmp_rat(lo) >= 0);
  CHECK(iv.cmp_rat(hi) <= 0);
}

BigFloat two_pow(long e, mpfr_prec_t prec) {
  BigFloat b(prec);
  mpfr_set_ui_2exp(b.get(), 1, e, MPFR_RNDN);
  return b;
}

}  // namespace

TEST_CASE("constants against independently published digits") {
  for (mpfr_prec_t prec : {static_cast<mpfr_prec_t>(64), static_cast<mpfr_prec_t>(128),
                           static_cast<mpfr_prec_t>(256)}) {
    check_against_digits(const_enclosure(NamedConst::pi, prec),
                         "3.141592653589793238462643383279502884197169399375");
    check_against_digits(const_enclosure(NamedConst::e, prec),
                         "2.718281828459045235360287471352662497757247093699");
    check_against_digits(const_enclosure(NamedConst::sqrt_2pi, prec),
                         "2.506628274631000502415765284811045253006986740609");
    // width contract
    for (auto which : {NamedConst::pi, NamedConst::e, NamedConst::sqrt_2pi})
      CHECK(const_enclosure(which, prec).width() <= two_pow(2 - static_cast<long>(prec), prec));
  }
  CHECK_THROWS_AS(const_enclosure(NamedConst::pi, 8), std::invalid_argument);
}

TEST_CASE("e against the series oracle with explicit tail bound") {
  // sum_{k=0}^{25} 1/k! < e < sum + 2/26!
  Rat s, kfac(1);
  for (long k = 1; k <= 25; ++k) {
    s += kfac.inv();
    kfac *= Rat(k);
  }
  s += kfac.inv();  // k = 25 term included via loop structure: s now has 0..25
  Rat tail = Rat(2) / (kfac * Rat(26));
  Interval e = const_enclosure(NamedConst::e, 128);
  CHECK(e.cmp_rat(s) >= 0);
  CHECK(e.cmp_rat(s + tail) <= 0);
}

TEST_CASE("interval arithmetic basics") {
  auto iv = [](long v) { return Interval::from_long(v, 64); };
  CHECK((iv(2) + iv(3)).cmp_int(Int(5)) == 0);   // contains 5
  CHECK((iv(2) * iv(3)).cmp_int(Int(6)) == 0);
  CHECK((iv(7) - iv(3)).cmp_int(Int(4)) == 0);
  CHECK((iv(1) / iv(3)).cmp_rat(Rat(1, 3)) == 0);
  CHECK((iv(2) + iv(3)).cmp_int(Int(7)) == -1);  // certainly below 7
  CHECK((iv(2) + iv(3)).cmp_int(Int(4)) == 1);
  CHECK_THROWS_AS(iv(1) / Interval::from_long(0, 64), std::domain_error);
  CHECK_THROWS_AS((-iv(1)).sqrt(), std::domain_error);
  CHECK_THROWS_AS(Interval::from_long(0, 64).log(), std::domain_error);
  Interval neg = -iv(2);
  CHECK(neg.cmp_int(Int(-2)) == 0);
  CHECK((neg.abs()).cmp_int(Int(2)) == 0);
}

TEST_CASE("from_rat rounds outward and stays tight") {
  Rat q(1, 3);
  Interval iv = Interval::from_rat(q, 64);
  CHECK(iv.cmp_rat(q) == 0);
  CHECK(iv.width() <= two_pow(-60, 64));
}

TEST_CASE("containment fuzzing and monotone narrowing") {
  // random compositions of +, *, ln, exp, sqrt over positive rationals:
  // doubling the precision must narrow the enclosure and stay inside it
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> op(0, 4);
  std::uniform_int_distribution<long> leaf_num(1, 400), leaf_den(1, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    // record the program, then evaluate it twice
    std::vector<int> ops;
    std::vector<std::pair<long, long>> leaves;
    int steps = 1 + trial % 5;
    leaves.emplace_back(leaf_num(rng), leaf_den(rng));
    for (int s = 0; s < steps; ++s) {
      ops.push_back(op(rng));
      leaves.emplace_back(leaf_num(rng), leaf_den(rng));
    }
    auto eval = [&](mpfr_prec_t prec) {
      Interval acc = Interval::from_rat(Rat(leaves[0].first, leaves[0].second), prec);
      for (size_t s = 0; s < ops.size(); ++s) {
        Interval operand = Interval::from_rat(Rat(leaves[s + 1].first, leaves[s + 1].second), prec);
        switch (ops[s]) {
          case 0: acc = acc + operand; break;
          case 1: acc = acc * operand; break;
          case 2: acc = acc.log().exp(); break;  // keeps the value, stresses both
          case 3: acc = acc.sqrt(); break;
          case 4: acc = (acc + operand).sqrt(); break;
        }
      }
      return acc;
    };
    Interval coarse = eval(64);
    Interval fine = eval(128);
    CHECK(coarse.lo() <= fine.lo());
    CHECK(fine.hi() <= coarse.hi());
    CHECK(fine.width() <= coarse.width());
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
  Int acc = 1;
  for (unsigned long n = 1; n <= 500; ++n) {
    acc *= n;  // repeated multiplication oracle
    if (n % 50 == 0 || n < 10) CHECK(factorial(n) == acc);
    CHECK(factorial(n) == Int(n) * factorial(n - 1));
  }
}

TEST_CASE("parallel factorial equals the serial reference") {
  for (unsigned long n : {100UL, 999UL, 5000UL, 20000UL})
    CHECK(factorial(n) == factorial_serial(n));
}

TEST_CASE("log of huge exact integers is cheap and correct") {
  Int f = factorial(20000);
  Interval l = log_of_int(f, 64);
  // ln(20000!) = 178075.6217...
  CHECK(l.cmp_rat(Rat(178075)) > 0);
  CHECK(l.cmp_rat(Rat(178076)) < 0);
  CHECK_THROWS_AS(log_of_int(Int(0), 64), std::domain_error);
}
