#include "stirling/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace stirling {

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num(s.substr(0, slash), 10);
    Int den(s.substr(slash + 1), 10);
    return Rat(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(Int(s, 10));
  // terminating decimal: digits.digits -> digitsdigits / 10^frac_len
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (frac_len == 0) throw std::invalid_argument("Rat::parse: trailing decimal point");
  if (digits.empty() || digits == "-" || digits == "+") digits += "0";
  Int den(1);
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rat(Int(digits, 10), den);
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::abs() const {
  Rat r;
  r.v_ = ::abs(v_);
  return r;
}

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(den(), num());
}

Rat Rat::pow(unsigned long e) const {
  Rat base = *this, acc = 1;
  for (; e; e >>= 1) {
    if (e & 1) acc *= base;
    if (e > 1) base *= base;
  }
  return acc;
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat gcd(const Rat& a, const Rat& b) {
  Int gn, ld;
  mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(ld.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  return Rat(gn, ld);
}

}  // namespace stirling
