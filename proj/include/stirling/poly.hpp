#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stirling/rat.hpp"

namespace stirling {

/// Dense univariate polynomial over Rat; coeffs_[i] is the coefficient of n^i.
/// Normal form: no stored leading zeros, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant);
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly var();  // the polynomial n

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);
  bool operator==(const Poly&) const = default;

  Rat eval(const Rat& x) const;

  /// p(n + t); poly_shift of the artifact is shifted(1).
  Poly shifted(const Rat& t) const;

  Poly derivative() const;

  /// Euclidean division by a nonzero divisor: returns (quotient, remainder).
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  /// Monic gcd over the rationals (1 for coprime, 0 only for gcd(0,0)).
  static Poly gcd(Poly a, Poly b);

  /// Positive rational c with p/c primitive integer (gcd of numerators over
  /// lcm of denominators); 0 for the zero polynomial.
  Rat content() const;

  /// p / content(p): primitive integer coefficients, sign of p preserved.
  Poly primitive() const;

  bool integer_coeffs() const;

  std::string str(std::string_view var = "n") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace stirling
