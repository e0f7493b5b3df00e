#include "stirling/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace stirling {

std::string BigFloat::str(size_t digits, mpfr_rnd_t rnd) const {
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%zuR*e", digits ? digits - 1 : 0);
  char* s = nullptr;
  mpfr_asprintf(&s, fmt, rnd, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.is_nan() || hi_.is_nan() || lo_.cmp(hi_) > 0)
    throw std::invalid_argument("Interval: endpoints not ordered");
  prec_ = std::max(lo_.prec(), hi_.prec());
}

Interval Interval::make(mpfr_prec_t prec) {
  Interval r;
  r.lo_ = BigFloat(prec);
  r.hi_ = BigFloat(prec);
  r.prec_ = prec;
  return r;
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
  Interval r = make(prec);
  mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
  return r;
}

Interval Interval::from_int(const Int& z, mpfr_prec_t prec) {
  Interval r = make(prec);
  mpfr_set_z(r.lo_.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), z.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_rat(const Rat& q, mpfr_prec_t prec) {
  Interval r = make(prec);
  mpfr_set_q(r.lo_.get(), q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.raw().get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r = Interval::make(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r = Interval::make(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = std::max(a.prec_, b.prec_);
  Interval r = Interval::make(prec);
  BigFloat t(prec);
  // lo: minimum of the four cross products rounded down
  mpfr_mul(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_mul(t.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
  mpfr_mul(t.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
  mpfr_mul(t.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
  // hi: maximum of the four rounded up
  mpfr_mul(r.hi_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDU);
  mpfr_mul(t.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDU);
  mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("Interval: division by interval containing 0");
  mpfr_prec_t prec = std::max(a.prec_, b.prec_);
  Interval r = Interval::make(prec);
  BigFloat t(prec);
  mpfr_div(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_div(t.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
  mpfr_div(t.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
  mpfr_div(t.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
  mpfr_div(r.hi_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDU);
  mpfr_div(t.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDU);
  mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
  mpfr_div(t.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
  mpfr_div(t.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r = make(prec_);
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (lo_.sign() < 0) throw std::domain_error("Interval::sqrt: negative operand");
  Interval r = make(prec_);
  mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (lo_.sign() <= 0) throw std::domain_error("Interval::log: operand not positive");
  Interval r = make(prec_);
  mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r = make(prec_);
  mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log1p() const {
  if (mpfr_cmp_si(lo_.get(), -1) <= 0)
    throw std::domain_error("Interval::log1p: operand not above -1");
  Interval r = make(prec_);
  mpfr_log1p(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log1p(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  Interval r = make(prec_);
  mpfr_set_zero(r.lo_.get(), 1);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  if (r.hi_.cmp(hi_) < 0) mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::mul_long(long k) const {
  Interval r = make(prec_);
  if (k >= 0) {
    mpfr_mul_si(r.lo_.get(), lo_.get(), k, MPFR_RNDD);
    mpfr_mul_si(r.hi_.get(), hi_.get(), k, MPFR_RNDU);
  } else {
    mpfr_mul_si(r.lo_.get(), hi_.get(), k, MPFR_RNDD);
    mpfr_mul_si(r.hi_.get(), lo_.get(), k, MPFR_RNDU);
  }
  return r;
}

BigFloat Interval::width() const {
  BigFloat w(prec_);
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

int Interval::cmp(const Interval& o) const {
  if (hi_.cmp(o.lo_) < 0) return -1;
  if (lo_.cmp(o.hi_) > 0) return 1;
  return 0;
}

int Interval::cmp_rat(const Rat& q) const {
  if (mpfr_cmp_q(hi_.get(), q.raw().get_mpq_t()) < 0) return -1;
  if (mpfr_cmp_q(lo_.get(), q.raw().get_mpq_t()) > 0) return 1;
  return 0;
}

int Interval::cmp_int(const Int& z) const {
  if (mpfr_cmp_z(hi_.get(), z.get_mpz_t()) < 0) return -1;
  if (mpfr_cmp_z(lo_.get(), z.get_mpz_t()) > 0) return 1;
  return 0;
}

std::string Interval::str(size_t digits) const {
  return "[" + lo_.str(digits, MPFR_RNDD) + ", " + hi_.str(digits, MPFR_RNDU) + "]";
}

namespace {

Interval raw_const(NamedConst which, mpfr_prec_t work) {
  BigFloat lo(work), hi(work);
  switch (which) {
    case NamedConst::pi:
      mpfr_const_pi(lo.get(), MPFR_RNDD);
      mpfr_const_pi(hi.get(), MPFR_RNDU);
      break;
    case NamedConst::e: {
      BigFloat one(work);
      mpfr_set_ui(one.get(), 1, MPFR_RNDN);
      mpfr_exp(lo.get(), one.get(), MPFR_RNDD);
      mpfr_exp(hi.get(), one.get(), MPFR_RNDU);
      break;
    }
    case NamedConst::sqrt_2pi: {
      BigFloat t(work);
      mpfr_const_pi(t.get(), MPFR_RNDD);
      mpfr_mul_2ui(t.get(), t.get(), 1, MPFR_RNDD);  // exact scaling
      mpfr_sqrt(lo.get(), t.get(), MPFR_RNDD);
      mpfr_const_pi(t.get(), MPFR_RNDU);
      mpfr_mul_2ui(t.get(), t.get(), 1, MPFR_RNDU);
      mpfr_sqrt(hi.get(), t.get(), MPFR_RNDU);
      break;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval const_enclosure(NamedConst which, mpfr_prec_t prec) {
  if (prec < 16) throw std::invalid_argument("const_enclosure: prec must be at least 16");
  BigFloat limit(prec);
  mpfr_set_ui_2exp(limit.get(), 1, 2 - static_cast<mpfr_exp_t>(prec), MPFR_RNDN);
  for (mpfr_prec_t guard = 16;; guard *= 2) {
    Interval v = raw_const(which, prec + guard);
    BigFloat lo(prec), hi(prec);
    mpfr_set(lo.get(), v.lo().get(), MPFR_RNDD);
    mpfr_set(hi.get(), v.hi().get(), MPFR_RNDU);
    Interval out(std::move(lo), std::move(hi));
    if (out.width() <= limit) return out;  // width contract: <= 2^(2-prec)
  }
}

Interval log_of_int(const Int& z, mpfr_prec_t prec) {
  if (z <= 0) throw std::domain_error("log_of_int: operand not positive");
  BigFloat lo(prec), hi(prec);
  mpfr_set_z(lo.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_set_z(hi.get(), z.get_mpz_t(), MPFR_RNDU);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace stirling
