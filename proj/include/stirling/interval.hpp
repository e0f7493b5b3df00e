#pragma once

#include <mpfr.h>

#include <string>

#include "stirling/common.hpp"
#include "stirling/rat.hpp"

namespace stirling {

/// Value-semantic wrapper around one mpfr_t. Rounding is always passed per
/// call; there is no global rounding state anywhere in this module.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = kStartPrec) {
    mpfr_init2(v_, prec);
    mpfr_set_nan(v_);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);  // exact: same precision
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }

  /// Decimal in scientific form with the given significant digits, rounded in
  /// the given direction.
  std::string str(size_t digits, mpfr_rnd_t rnd) const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

/// Closed enclosure [lo, hi] of a real number with all operations rounding
/// outward, so the exact mathematical result is always contained.
class Interval {
 public:
  Interval(BigFloat lo, BigFloat hi);  // throws std::invalid_argument unless lo <= hi

  static Interval from_long(long v, mpfr_prec_t prec);
  static Interval from_int(const Int& z, mpfr_prec_t prec);
  static Interval from_rat(const Rat& q, mpfr_prec_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t prec() const { return prec_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);  // 0 not in b
  Interval operator-() const;

  Interval sqrt() const;   // requires lo >= 0
  Interval log() const;    // requires lo > 0
  Interval exp() const;
  Interval log1p() const;  // requires lo > -1
  Interval abs() const;

  Interval mul_long(long k) const;

  BigFloat width() const;  // hi - lo, rounded up
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool is_positive() const { return lo_.sign() > 0; }

  /// Certified three-way comparisons: +1 the whole interval is above,
  /// -1 the whole interval is below, 0 undecided at this precision.
  int cmp(const Interval& o) const;
  int cmp_rat(const Rat& q) const;
  int cmp_int(const Int& z) const;

  std::string str(size_t digits) const;  // "[lo, hi]", endpoints rounded outward

 private:
  Interval() = default;
  static Interval make(mpfr_prec_t prec);
  BigFloat lo_, hi_;
  mpfr_prec_t prec_ = kStartPrec;
};

enum class NamedConst { pi, e, sqrt_2pi };

/// Enclosure of width at most 2^(2-prec) around the constant.
Interval const_enclosure(NamedConst which, mpfr_prec_t prec);

/// Enclosure of ln(z) for an exact positive integer (only the top limbs of z
/// participate at a given precision, so this is cheap even for huge z).
Interval log_of_int(const Int& z, mpfr_prec_t prec);

}  // namespace stirling
