#include "stirling/ratfunc.hpp"

#include <stdexcept>

namespace stirling {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Rat scale = den_.content().inv();
  if (den_.leading().sign() < 0) scale = -scale;
  den_ = scale * den_;
  num_ = scale * num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by the zero function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(unsigned long e) const {
  RatFunc base = *this, acc = constant(1);
  for (; e; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

RatFunc RatFunc::shifted(const Rat& t) const { return RatFunc(num_.shifted(t), den_.shifted(t)); }

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RatFunc: pole at " + x.str());
  return num_.eval(x) / d;
}

std::string RatFunc::str(std::string_view var) const {
  if (den_ == Poly(Rat(1))) return num_.str(var);
  std::string n = num_.degree() > 0 ? "(" + num_.str(var) + ")" : num_.str(var);
  return n + " / (" + den_.str(var) + ")";
}

}  // namespace stirling
