#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/ratfunc.hpp"

namespace stirling {

/// AST for the correction-term mini-language. Grammar (public contract of the
/// CLI --an flag, version 1):
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/'|implicit) factor)*
///   factor := ['-'] atom ['^' uint]
///   atom   := number | 'n' | '(' expr ')'
///
/// Implicit multiplication is accepted only in the forms <number><n> and
/// <number>'(' with no intervening whitespace, e.g. "12n", "10n^3", "2(2n+1)".
/// Numbers are unsigned integers or terminating decimals ("0.4", ".9", "1.1"),
/// converted to exact rationals. Exponents must be positive integers.
struct ExprAst {
  enum class Kind { lit, var, neg, add, sub, mul, div, pow };
  Kind kind;
  Rat value;                   // lit only
  unsigned long exponent = 0;  // pow only
  std::shared_ptr<const ExprAst> left, right;
};

using ExprPtr = std::shared_ptr<const ExprAst>;

ExprPtr make_lit(Rat v);
ExprPtr make_var();
ExprPtr make_unary(ExprAst::Kind k, ExprPtr child);
ExprPtr make_binary(ExprAst::Kind k, ExprPtr l, ExprPtr r);
ExprPtr make_pow(ExprPtr base, unsigned long e);

bool ast_equal(const ExprPtr& a, const ExprPtr& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t offset, std::vector<std::string> expected, const std::string& what)
      : std::runtime_error(what), offset_(offset), expected_(std::move(expected)) {}
  size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  size_t offset_;
  std::vector<std::string> expected_;
};

ExprPtr parse_expr(std::string_view text);

/// Exact lowering to a normalized rational function; throws std::domain_error
/// when a division by an identically-zero subexpression is detected.
RatFunc lower_to_ratfunc(const ExprPtr& ast);

/// Output reparses to a structurally identical AST (for parser-produced trees).
std::string pretty_print(const ExprPtr& ast);

}  // namespace stirling
