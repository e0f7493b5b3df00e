#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace stirling {

using Int = mpz_class;

/// Arbitrary-precision rational, always in canonical form:
/// den > 0, gcd(|num|, den) = 1, zero stored as 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, rationals embed integers
  Rat(const Int& n) : v_(n) {}
  Rat(long num, long den);
  Rat(const Int& num, const Int& den);

  /// Accepts "7", "-3/4", "0.25", ".9", "1.1". Decimal literals must terminate;
  /// they are converted exactly (never through binary floating point).
  static Rat parse(std::string_view text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);  // throws std::domain_error on zero divisor

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const;
  Rat inv() const;  // throws std::domain_error on zero
  Rat pow(unsigned long e) const;

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return v_.get_d(); }  // diagnostics only
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat gcd(const Rat& a, const Rat& b);  // nonnegative, gcd of numerators over lcm of denominators

}  // namespace stirling
