#include "stirling/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace stirling {

Poly::Poly(Rat constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::var() { return Poly({Rat(0), Rat(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  Poly r = p;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::shifted(const Rat& t) const {
  // Horner in (n + t): r = r*(n + t) + c_i from the top coefficient down.
  Poly shift({t, Rat(1)});
  Poly r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * shift + Poly(*it);
  return r;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> r(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
  Poly q, r = *this;
  const Rat lead_inv = d.leading().inv();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    long k = r.degree() - d.degree();
    Rat c = r.leading() * lead_inv;
    std::vector<Rat> mono(static_cast<size_t>(k) + 1);
    mono.back() = c;
    Poly m(std::move(mono));
    q = q + m;
    r = r - m * d;
  }
  return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.leading().inv() * a;
}

Rat Poly::content() const {
  if (is_zero()) return Rat(0);
  Rat g = coeffs_.front().abs();
  for (size_t i = 1; i < coeffs_.size(); ++i) g = stirling::gcd(g, coeffs_[i]);
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  return content().inv() * *this;
}

bool Poly::integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (!c.is_integer()) return false;
  return true;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    Rat mag = first ? c : c.abs();
    first = false;
    bool unit = mag.abs() == Rat(1) && i > 0;
    if (unit) {
      if (mag.sign() < 0) os << "-";
    } else {
      os << mag.str();
    }
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace stirling
