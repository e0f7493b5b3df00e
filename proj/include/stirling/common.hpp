#pragma once

#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace stirling {

/// Outcome of a decision procedure backed by interval arithmetic.
enum class Verdict { holds, violated, undecidable };

/// Side of a factorial bound: lower means n! >= sqrt(2 pi n)(n/e)^n e^{a(n)}.
enum class Direction { lower, upper };

/// Required sign of a certified polynomial claim.
enum class Sign { geq_zero, leq_zero };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    default: return "undecidable";
  }
}

inline const char* to_string(Direction d) {
  return d == Direction::lower ? "lower" : "upper";
}

inline const char* to_string(Sign s) { return s == Sign::geq_zero ? ">=0" : "<=0"; }

constexpr mpfr_prec_t kStartPrec = 64;
constexpr mpfr_prec_t kDefaultPrecCeiling = 16384;

/// A comparison whose enclosures still overlap at the precision ceiling.
class UndecidableError : public std::runtime_error {
 public:
  UndecidableError(std::string what, std::optional<long> n, mpfr_prec_t ceiling)
      : std::runtime_error(std::move(what)), n_(n), ceiling_(ceiling) {}
  std::optional<long> n() const { return n_; }
  mpfr_prec_t ceiling() const { return ceiling_; }

 private:
  std::optional<long> n_;
  mpfr_prec_t ceiling_;
};

}  // namespace stirling
