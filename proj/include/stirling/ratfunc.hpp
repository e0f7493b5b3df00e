#pragma once

#include <string>

#include "stirling/poly.hpp"

namespace stirling {

/// Rational function num/den in one variable, kept normalized:
/// gcd(num, den) = 1 over the rationals and den is a primitive integer
/// polynomial with positive leading coefficient. The scalar convention on
/// den makes the representation (and operator==) canonical.
class RatFunc {
 public:
  RatFunc() : den_(Poly(Rat(1))) {}  // the zero function 0/1
  RatFunc(Poly num, Poly den);       // throws std::domain_error if den is zero

  static RatFunc constant(const Rat& c) { return RatFunc(Poly(c), Poly(Rat(1))); }
  static RatFunc var() { return RatFunc(Poly::var(), Poly(Rat(1))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws on b == 0
  bool operator==(const RatFunc&) const = default;

  RatFunc pow(unsigned long e) const;

  /// f(n + t) as a rational function of n.
  RatFunc shifted(const Rat& t) const;

  bool defined_at(const Rat& x) const { return !den_.eval(x).is_zero(); }
  Rat eval(const Rat& x) const;  // throws std::domain_error at a pole

  std::string str(std::string_view var = "n") const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace stirling
