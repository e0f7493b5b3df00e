#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stirling/poly.hpp"

using namespace stirling;

namespace {

std::mt19937 rng(414213562);

Rat random_rat() {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 10);
  return Rat(num(rng), den(rng));
}

Poly random_poly(long max_deg) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  long d = deg(rng);
  std::vector<Rat> c(static_cast<size_t>(d) + 1);
  for (auto& x : c) x = random_rat();
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("normal form") {
  CHECK(Poly({Rat(0), Rat(0)}).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly({Rat(1), Rat(2), Rat(0)}).degree() == 1);
  CHECK(Poly(Rat(0)) == Poly());
}

TEST_CASE("shift examples") {
  Poly n2({Rat(0), Rat(0), Rat(1)});
  CHECK(n2.shifted(1) == Poly({Rat(1), Rat(2), Rat(1)}));
  CHECK(Poly().shifted(1) == Poly());
  Poly p({Rat(0), Rat(103), Rat(0), Rat(360)});  // 360n^3 + 103n
  CHECK(p.shifted(1) == Poly({Rat(463), Rat(1183), Rat(1080), Rat(360)}));
}

TEST_CASE("shift by +1 then -1 is the identity") {
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(12);
    CHECK(p.shifted(1).shifted(-1) == p);
  }
}

TEST_CASE("eval") {
  Poly p({Rat(-5), Rat(1)});  // n - 5
  CHECK(p.eval(Rat(5)) == Rat(0));
  Poly q({Rat(1), Rat(0), Rat(1)});  // n^2 + 1
  CHECK(q.eval(Rat(2)) == Rat(5));
  CHECK(Poly().eval(Rat(3)) == Rat(0));
}

TEST_CASE("arithmetic is a ring homomorphism under evaluation") {
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(8), b = random_poly(8);
    for (int j = 0; j < 4; ++j) {
      Rat x = random_rat();
      CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
      CHECK((a - b).eval(x) == a.eval(x) - b.eval(x));
      CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
      CHECK(a.shifted(1).eval(x) == a.eval(x + Rat(1)));
    }
  }
}

TEST_CASE("divmod reconstructs") {
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(10), b = random_poly(5);
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    CHECK(a == q * b + r);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(random_poly(3).divmod(Poly()), std::domain_error);
}

TEST_CASE("gcd of products shares the common factor") {
  Poly f({Rat(1), Rat(1)});   // n + 1
  Poly g({Rat(-3), Rat(1)});  // n - 3
  Poly h({Rat(2), Rat(5)});   // 5n + 2
  CHECK(Poly::gcd(f * g, f * h) == f.leading().inv() * f);
  CHECK(Poly::gcd(f, g) == Poly(Rat(1)));
  CHECK(Poly::gcd(Poly(), g).degree() == 1);  // gcd(0, g) ~ g, monic
}

TEST_CASE("content and primitive part") {
  Poly p({Rat(6, 5), Rat(9, 10)});
  CHECK(p.content() == Rat(3, 10));
  CHECK(p.primitive() == Poly({Rat(4), Rat(3)}));
  CHECK(p.primitive().integer_coeffs());
  // sign preserved
  Poly m({Rat(-4), Rat(-6)});
  CHECK(m.primitive() == Poly({Rat(-2), Rat(-3)}));
  CHECK(Poly().content() == Rat(0));
}

TEST_CASE("derivative") {
  Poly p({Rat(7), Rat(3), Rat(0), Rat(2)});  // 2n^3 + 3n + 7
  CHECK(p.derivative() == Poly({Rat(3), Rat(0), Rat(6)}));
  CHECK(Poly(Rat(5)).derivative() == Poly());
}

TEST_CASE("printing") {
  CHECK(Poly({Rat(-5), Rat(1)}).str() == "n - 5");
  CHECK(Poly({Rat(463), Rat(1183), Rat(1080), Rat(360)}).str() ==
        "360*n^3 + 1080*n^2 + 1183*n + 463");
  CHECK(Poly().str() == "0");
}
