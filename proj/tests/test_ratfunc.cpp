#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stirling/ratfunc.hpp"

using namespace stirling;

namespace {

std::mt19937 rng(7182818);

Rat random_rat() {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 8);
  return Rat(num(rng), den(rng));
}

Poly random_poly(long max_deg, bool nonzero = false) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  for (;;) {
    long d = deg(rng);
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = random_rat();
    Poly p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

RatFunc random_ratfunc() { return RatFunc(random_poly(4), random_poly(3, true)); }

const Poly kOne(Rat(1));

}  // namespace

TEST_CASE("normalization invariants") {
  // den primitive integer with positive leading coefficient, gcd(num, den) = 1
  RatFunc f(Poly({Rat(0), Rat(2)}), Poly({Rat(0), Rat(0), Rat(-4)}));  // 2n / -4n^2
  CHECK(f.den().leading().sign() > 0);
  CHECK(f.den().integer_coeffs());
  CHECK(f.den().content() == Rat(1));
  CHECK(f.num() * Poly({Rat(0), Rat(2)}) == -kOne * f.den());  // f == -1/(2n)
  for (int i = 0; i < 200; ++i) {
    RatFunc g = random_ratfunc();
    CHECK(g.den().leading().sign() > 0);
    if (!g.is_zero()) {
      CHECK(g.den().integer_coeffs());
      CHECK(g.den().content() == Rat(1));
      CHECK(Poly::gcd(g.num(), g.den()) == kOne);
      // re-normalizing is a no-op
      CHECK(RatFunc(g.num(), g.den()) == g);
    } else {
      CHECK(g.den() == kOne);
    }
  }
  CHECK_THROWS_AS(RatFunc(kOne, Poly()), std::domain_error);
}

TEST_CASE("telescoping unit and cancellation") {
  RatFunc one_over_n(kOne, Poly::var());
  RatFunc one_over_n1(kOne, Poly({Rat(1), Rat(1)}));
  RatFunc d = one_over_n - one_over_n1;
  CHECK(d == RatFunc(kOne, Poly({Rat(0), Rat(1), Rat(1)})));  // 1/(n^2+n)
  RatFunc f = random_ratfunc();
  CHECK((f - f).is_zero());
  CHECK((f - f).den() == kOne);
  RatFunc n_over_n(Poly::var(), Poly::var());
  CHECK(n_over_n == RatFunc::constant(1));
}

TEST_CASE("difference of the 103-family terms") {
  RatFunc f(kOne, Poly({Rat(0), Rat(12)}));
  RatFunc g(kOne, Poly({Rat(0), Rat(103), Rat(0), Rat(360)}));
  RatFunc d = f - g;
  // canonical form of (360n^2+91)/(4320n^4+1236n^2) after removing the common n
  CHECK(d == RatFunc(Poly({Rat(91), Rat(0), Rat(360)}),
                     Poly({Rat(0), Rat(1236), Rat(0), Rat(4320)})));
  // cross-checked against the direct computation at n = 1, 2, 3
  for (long n = 1; n <= 3; ++n)
    CHECK(d.eval(Rat(n)) == Rat(1, 12 * n) - Rat(1, 360 * n * n * n + 103 * n));
}

TEST_CASE("field ops agree with evaluation") {
  int checked = 0;
  while (checked < 20) {
    RatFunc f = random_ratfunc(), g = random_ratfunc();
    Rat x = random_rat();
    if (!f.defined_at(x) || !g.defined_at(x)) continue;
    ++checked;
    CHECK((f + g).eval(x) == f.eval(x) + g.eval(x));
    CHECK((f - g).eval(x) == f.eval(x) - g.eval(x));
    CHECK((f * g).eval(x) == f.eval(x) * g.eval(x));
    if (!g.eval(x).is_zero() && !g.is_zero()) CHECK((f / g).eval(x) == f.eval(x) / g.eval(x));
  }
}

TEST_CASE("shift substitutes n+1") {
  RatFunc f(kOne, Poly({Rat(0), Rat(12)}));  // 1/(12n)
  CHECK(f.shifted(1) == RatFunc(kOne, Poly({Rat(12), Rat(12)})));
  RatFunc g = random_ratfunc();
  for (long n = 1; n <= 5; ++n) {
    if (!g.defined_at(Rat(n + 1))) continue;
    CHECK(g.shifted(1).eval(Rat(n)) == g.eval(Rat(n + 1)));
  }
}

TEST_CASE("pole handling") {
  RatFunc f(kOne, Poly::var());
  CHECK(!f.defined_at(Rat(0)));
  CHECK_THROWS_AS(f.eval(Rat(0)), std::domain_error);
  CHECK_THROWS_AS(f / RatFunc(), std::domain_error);
}
