#include "stirling/expr.hpp"

#include <cctype>
#include <sstream>

namespace stirling {

ExprPtr make_lit(Rat v) {
  auto n = std::make_shared<ExprAst>();
  n->kind = ExprAst::Kind::lit;
  n->value = std::move(v);
  return n;
}

ExprPtr make_var() {
  auto n = std::make_shared<ExprAst>();
  n->kind = ExprAst::Kind::var;
  return n;
}

ExprPtr make_unary(ExprAst::Kind k, ExprPtr child) {
  auto n = std::make_shared<ExprAst>();
  n->kind = k;
  n->left = std::move(child);
  return n;
}

ExprPtr make_binary(ExprAst::Kind k, ExprPtr l, ExprPtr r) {
  auto n = std::make_shared<ExprAst>();
  n->kind = k;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

ExprPtr make_pow(ExprPtr base, unsigned long e) {
  auto n = std::make_shared<ExprAst>();
  n->kind = ExprAst::Kind::pow;
  n->left = std::move(base);
  n->exponent = e;
  return n;
}

bool ast_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprAst::Kind::lit: return a->value == b->value;
    case ExprAst::Kind::var: return true;
    case ExprAst::Kind::pow:
      return a->exponent == b->exponent && ast_equal(a->left, b->left);
    case ExprAst::Kind::neg: return ast_equal(a->left, b->left);
    default: return ast_equal(a->left, b->left) && ast_equal(a->right, b->right);
  }
}

namespace {

struct Token {
  enum class Type { number, var, plus, minus, star, slash, caret, lparen, rparen, end };
  Type type;
  size_t begin, end;  // byte offsets
  Rat value;          // number only
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.begin = pos_;
    if (pos_ >= text_.size()) {
      tok_.type = Token::Type::end;
      tok_.end = pos_;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '+': single(Token::Type::plus); return;
      case '-': single(Token::Type::minus); return;
      case '*': single(Token::Type::star); return;
      case '/': single(Token::Type::slash); return;
      case '^': single(Token::Type::caret); return;
      case '(': single(Token::Type::lparen); return;
      case ')': single(Token::Type::rparen); return;
      case 'n': single(Token::Type::var); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      bool saw_digit = false, saw_dot = false;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          saw_digit = true;
        } else if (d == '.' && !saw_dot) {
          saw_dot = true;
        } else {
          break;
        }
        ++pos_;
      }
      if (!saw_digit)
        throw ParseError(start, {"number"}, err(start, "malformed number"));
      if (saw_dot && text_[pos_ - 1] == '.')
        throw ParseError(start, {"number"}, err(start, "trailing decimal point"));
      tok_.type = Token::Type::number;
      tok_.end = pos_;
      tok_.value = Rat::parse(text_.substr(start, pos_ - start));
      return;
    }
    throw ParseError(pos_, {"number", "'n'", "'('", "operator"},
                     err(pos_, std::string("unexpected character '") + c + "'"));
  }

  void single(Token::Type t) {
    tok_.type = t;
    tok_.end = ++pos_;
  }

  static std::string err(size_t at, const std::string& detail) {
    return "parse error at byte " + std::to_string(at) + ": " + detail;
  }

  std::string_view text_;
  size_t pos_ = 0;
  Token tok_{};
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (lex_.peek().type != Token::Type::end) fail({"operator", "end of input"});
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      auto t = lex_.peek().type;
      if (t == Token::Type::plus || t == Token::Type::minus) {
        lex_.next();
        e = make_binary(t == Token::Type::plus ? ExprAst::Kind::add : ExprAst::Kind::sub, e,
                        term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    LastFactor last{};
    ExprPtr e = factor(&last);
    while (true) {
      const Token& t = lex_.peek();
      if (t.type == Token::Type::star || t.type == Token::Type::slash) {
        bool mul = t.type == Token::Type::star;
        lex_.next();
        e = make_binary(mul ? ExprAst::Kind::mul : ExprAst::Kind::div, e, factor(&last));
      } else if (implicit_follows(last, t)) {
        e = make_binary(ExprAst::Kind::mul, e, factor(&last));
      } else {
        return e;
      }
    }
  }

  struct LastFactor {
    bool plain_number = false;  // the factor was a bare number literal
    size_t end = 0;
  };

  // <number><n> and <number>'(' only, with the tokens adjacent.
  static bool implicit_follows(const LastFactor& last, const Token& t) {
    if (!last.plain_number || t.begin != last.end) return false;
    return t.type == Token::Type::var || t.type == Token::Type::lparen;
  }

  ExprPtr factor(LastFactor* last) {
    bool negated = false;
    if (lex_.peek().type == Token::Type::minus) {
      lex_.next();
      negated = true;
    }
    auto [e, plain, end] = atom();
    last->plain_number = plain;
    last->end = end;
    if (lex_.peek().type == Token::Type::caret) {
      lex_.next();
      e = make_pow(std::move(e), exponent());
      last->plain_number = false;
    }
    if (negated) e = make_unary(ExprAst::Kind::neg, std::move(e));
    return e;
  }

  unsigned long exponent() {
    const Token t = lex_.peek();
    if (t.type != Token::Type::number || !t.value.is_integer() || t.value.sign() <= 0)
      fail({"positive integer exponent"});
    lex_.next();
    if (t.value.num().fits_ulong_p()) return t.value.num().get_ui();
    fail({"positive integer exponent"});
    return 0;  // unreachable
  }

  std::tuple<ExprPtr, bool, size_t> atom() {
    const Token t = lex_.peek();
    switch (t.type) {
      case Token::Type::number:
        lex_.next();
        return {make_lit(t.value), true, t.end};
      case Token::Type::var:
        lex_.next();
        return {make_var(), false, t.end};
      case Token::Type::lparen: {
        lex_.next();
        ExprPtr e = expr();
        const Token close = lex_.peek();
        if (close.type != Token::Type::rparen) fail({"')'"});
        lex_.next();
        return {std::move(e), false, close.end};
      }
      default:
        fail({"number", "'n'", "'('"});
        return {};  // unreachable
    }
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::ostringstream os;
    os << "parse error at byte " << lex_.peek().begin << ": expected ";
    for (size_t i = 0; i < expected.size(); ++i) os << (i ? " or " : "") << expected[i];
    throw ParseError(lex_.peek().begin, std::move(expected), os.str());
  }

  Lexer lex_;
};

int precedence(ExprAst::Kind k) {
  switch (k) {
    case ExprAst::Kind::add:
    case ExprAst::Kind::sub: return 1;
    case ExprAst::Kind::mul:
    case ExprAst::Kind::div: return 2;
    case ExprAst::Kind::neg: return 3;
    case ExprAst::Kind::pow: return 4;
    default: return 5;
  }
}

// Decimal spelling for a nonnegative rational with den = 2^a 5^b; exact, so
// the string reparses to the same rational. Empty when no such spelling.
std::string decimal_str(const Rat& v) {
  if (v.is_integer()) return v.num().get_str();
  Int den = v.den();
  unsigned long twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return {};
  unsigned long k = std::max(twos, fives);
  Int scaled = v.num();
  for (unsigned long i = 0; i < k; ++i) scaled *= 10;
  scaled /= v.den();
  std::string digits = scaled.get_str();
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  return digits;
}

void print_node(std::ostringstream& os, const ExprPtr& e, int min_prec) {
  // literals the grammar cannot spell directly are printed through their
  // grammar-expressible rewriting, keeping print/parse a bijection
  if (e->kind == ExprAst::Kind::lit) {
    if (e->value.sign() < 0) {
      print_node(os, make_unary(ExprAst::Kind::neg, make_lit(-e->value)), min_prec);
      return;
    }
    std::string dec = decimal_str(e->value);
    if (dec.empty()) {
      print_node(os,
                 make_binary(ExprAst::Kind::div, make_lit(Rat(e->value.num())),
                             make_lit(Rat(e->value.den()))),
                 min_prec);
      return;
    }
    os << dec;
    return;
  }
  int p = precedence(e->kind);
  bool parens = p < min_prec;
  if (parens) os << "(";
  switch (e->kind) {
    case ExprAst::Kind::lit: break;  // handled above
    case ExprAst::Kind::var: os << "n"; break;
    case ExprAst::Kind::neg:
      os << "-";
      print_node(os, e->left, 4);  // nested negation needs parentheses
      break;
    case ExprAst::Kind::pow:
      print_node(os, e->left, 5);
      os << "^" << e->exponent;
      break;
    case ExprAst::Kind::add:
    case ExprAst::Kind::sub:
      print_node(os, e->left, 1);
      os << (e->kind == ExprAst::Kind::add ? " + " : " - ");
      print_node(os, e->right, 2);
      break;
    case ExprAst::Kind::mul: {
      print_node(os, e->left, 2);
      // keep the conventional implicit forms 12n / 12(. . .) when legal
      bool implicit = e->left->kind == ExprAst::Kind::lit && e->left->value.sign() >= 0 &&
                      (e->right->kind == ExprAst::Kind::var ||
                       (e->right->kind == ExprAst::Kind::pow &&
                        e->right->left->kind == ExprAst::Kind::var) ||
                       precedence(e->right->kind) < 3);
      os << (implicit ? "" : "*");
      print_node(os, e->right, 3);
      break;
    }
    case ExprAst::Kind::div:
      print_node(os, e->left, 2);
      os << "/";
      print_node(os, e->right, 3);
      break;
  }
  if (parens) os << ")";
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

RatFunc lower_to_ratfunc(const ExprPtr& ast) {
  switch (ast->kind) {
    case ExprAst::Kind::lit: return RatFunc::constant(ast->value);
    case ExprAst::Kind::var: return RatFunc::var();
    case ExprAst::Kind::neg: return -lower_to_ratfunc(ast->left);
    case ExprAst::Kind::add: return lower_to_ratfunc(ast->left) + lower_to_ratfunc(ast->right);
    case ExprAst::Kind::sub: return lower_to_ratfunc(ast->left) - lower_to_ratfunc(ast->right);
    case ExprAst::Kind::mul: return lower_to_ratfunc(ast->left) * lower_to_ratfunc(ast->right);
    case ExprAst::Kind::div: return lower_to_ratfunc(ast->left) / lower_to_ratfunc(ast->right);
    case ExprAst::Kind::pow: return lower_to_ratfunc(ast->left).pow(ast->exponent);
  }
  throw std::logic_error("lower_to_ratfunc: bad AST node");
}

std::string pretty_print(const ExprPtr& ast) {
  std::ostringstream os;
  print_node(os, ast, 0);
  return os.str();
}

}  // namespace stirling
