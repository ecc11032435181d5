#pragma once

// Polynomial expressions in variables x1..xn: parsing, printing, evaluation
// and exact symbolic differentiation.
//
// Grammar (standard precedence, ^ > unary - > * > binary +/-):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?      exponent must fold to an integer >= 0
//   primary := number | 'x' digits | '(' expr ')'

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <system_error>

#include "lhgeom/error.hpp"
#include "lhgeom/format.hpp"

namespace lhg {

/// Immutable expression tree. Copies share structure.
class Expression {
public:
  enum class Kind { constant, variable, negate, add, subtract, multiply, power };

  /// Zero constant.
  Expression() : Expression(make(Kind::constant, 0.0, 0, 0, nullptr, nullptr)) {}

  static Expression constant(double v) { return make(Kind::constant, v, 0, 0, nullptr, nullptr); }
  /// Variable x_index, 1-based.
  static Expression variable(std::size_t index) {
    if (index == 0) throw ValidationError("variable index must be >= 1");
    return make(Kind::variable, 0.0, index, 0, nullptr, nullptr);
  }
  static Expression negate(const Expression& e) { return make(Kind::negate, 0.0, 0, 0, e.node_, nullptr); }
  static Expression add(const Expression& a, const Expression& b) {
    return make(Kind::add, 0.0, 0, 0, a.node_, b.node_);
  }
  static Expression subtract(const Expression& a, const Expression& b) {
    return make(Kind::subtract, 0.0, 0, 0, a.node_, b.node_);
  }
  static Expression multiply(const Expression& a, const Expression& b) {
    return make(Kind::multiply, 0.0, 0, 0, a.node_, b.node_);
  }
  static Expression power(const Expression& base, unsigned exponent) {
    return make(Kind::power, 0.0, 0, exponent, base.node_, nullptr);
  }

  /// Repeated multiplication; shared by evaluation and constant folding.
  static double ipow(double base, unsigned k) {
    double r = 1.0;
    for (unsigned i = 0; i < k; ++i) r *= base;
    return r;
  }

  Kind kind() const noexcept { return node_->kind; }
  bool is_constant() const noexcept { return node_->kind == Kind::constant; }
  bool is_constant(double v) const noexcept { return is_constant() && node_->value == v; }
  double value() const noexcept { return node_->value; }
  std::size_t index() const noexcept { return node_->index; }
  unsigned exponent() const noexcept { return node_->exponent; }
  Expression lhs() const { return Expression(node_->lhs); }
  Expression rhs() const { return Expression(node_->rhs); }
  Expression operand() const { return lhs(); }

  /// Largest variable index referenced, 0 for variable-free expressions.
  std::size_t max_variable() const {
    switch (kind()) {
      case Kind::constant: return 0;
      case Kind::variable: return index();
      case Kind::negate:
      case Kind::power: return operand().max_variable();
      default: return std::max(lhs().max_variable(), rhs().max_variable());
    }
  }

  /// Evaluates at `x` (x[0] is x1). Throws NumericalError on a non-finite result.
  double evaluate(std::span<const double> x) const {
    const double v = eval(x);
    if (!std::isfinite(v)) throw NumericalError("expression evaluation overflowed to a non-finite value");
    return v;
  }

  /// Parseable text; parse(to_string()) evaluates identically.
  std::string to_string() const {
    std::string out;
    print(out, 0);
    return out;
  }

private:
  struct Node {
    Kind kind;
    double value;
    std::size_t index;
    unsigned exponent;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Expression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Expression make(Kind k, double v, std::size_t idx, unsigned ex, std::shared_ptr<const Node> a,
                         std::shared_ptr<const Node> b) {
    return Expression(std::make_shared<const Node>(Node{k, v, idx, ex, std::move(a), std::move(b)}));
  }

  double eval(std::span<const double> x) const {
    switch (kind()) {
      case Kind::constant: return value();
      case Kind::variable:
        if (index() > x.size()) throw ValidationError("variable x" + std::to_string(index()) + " out of range");
        return x[index() - 1];
      case Kind::negate: return -operand().eval(x);
      case Kind::add: return lhs().eval(x) + rhs().eval(x);
      case Kind::subtract: return lhs().eval(x) - rhs().eval(x);
      case Kind::multiply: return lhs().eval(x) * rhs().eval(x);
      case Kind::power: return ipow(operand().eval(x), exponent());
    }
    return 0.0;
  }

  int precedence() const {
    switch (kind()) {
      case Kind::add:
      case Kind::subtract: return 1;
      case Kind::multiply: return 2;
      case Kind::negate: return 3;
      case Kind::power: return 4;
      case Kind::constant: return std::signbit(value()) ? 3 : 5;
      case Kind::variable: return 5;
    }
    return 5;
  }

  void print(std::string& out, int min_prec) const {
    const bool paren = precedence() < min_prec;
    if (paren) out += '(';
    switch (kind()) {
      case Kind::constant: out += format_double(value()); break;
      case Kind::variable:
        out += 'x';
        out += std::to_string(index());
        break;
      case Kind::negate:
        out += '-';
        operand().print(out, 3);
        break;
      case Kind::add:
      case Kind::subtract:
        lhs().print(out, 1);
        out += kind() == Kind::add ? " + " : " - ";
        rhs().print(out, 2);
        break;
      case Kind::multiply:
        lhs().print(out, 2);
        out += '*';
        rhs().print(out, 3);
        break;
      case Kind::power:
        operand().print(out, 5);
        out += '^';
        out += std::to_string(exponent());
        break;
    }
    if (paren) out += ')';
  }

  std::shared_ptr<const Node> node_;
};

/// Builders applying constant folding and the identities 0+e, e*1, e*0,
/// e^0, e^1. Used for derivative construction.
namespace fold {

inline Expression neg(const Expression& a) {
  if (a.is_constant()) return Expression::constant(-a.value());
  if (a.kind() == Expression::Kind::negate) return a.operand();
  return Expression::negate(a);
}
inline Expression add(const Expression& a, const Expression& b) {
  if (a.is_constant() && b.is_constant()) return Expression::constant(a.value() + b.value());
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  return Expression::add(a, b);
}
inline Expression sub(const Expression& a, const Expression& b) {
  if (a.is_constant() && b.is_constant()) return Expression::constant(a.value() - b.value());
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return neg(b);
  return Expression::subtract(a, b);
}
inline Expression mul(const Expression& a, const Expression& b) {
  if (a.is_constant() && b.is_constant()) return Expression::constant(a.value() * b.value());
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expression::constant(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  return Expression::multiply(a, b);
}
inline Expression pow(const Expression& base, unsigned k) {
  if (k == 0) return Expression::constant(1.0);
  if (k == 1) return base;
  if (base.is_constant()) return Expression::constant(Expression::ipow(base.value(), k));
  return Expression::power(base, k);
}

}  // namespace fold

/// Exact symbolic partial derivative with respect to x_var (1-based).
inline Expression differentiate(const Expression& e, std::size_t var) {
  using K = Expression::Kind;
  if (var == 0) throw ValidationError("differentiate: variable index must be >= 1");
  switch (e.kind()) {
    case K::constant: return Expression::constant(0.0);
    case K::variable: return Expression::constant(e.index() == var ? 1.0 : 0.0);
    case K::negate: return fold::neg(differentiate(e.operand(), var));
    case K::add: return fold::add(differentiate(e.lhs(), var), differentiate(e.rhs(), var));
    case K::subtract: return fold::sub(differentiate(e.lhs(), var), differentiate(e.rhs(), var));
    case K::multiply:
      return fold::add(fold::mul(differentiate(e.lhs(), var), e.rhs()),
                       fold::mul(e.lhs(), differentiate(e.rhs(), var)));
    case K::power: {
      const unsigned k = e.exponent();
      if (k == 0) return Expression::constant(0.0);
      return fold::mul(fold::mul(Expression::constant(static_cast<double>(k)), fold::pow(e.operand(), k - 1)),
                       differentiate(e.operand(), var));
    }
  }
  return Expression::constant(0.0);
}

namespace detail {

class ExpressionParser {
public:
  ExpressionParser(std::string_view text, std::size_t dimension) : text_(text), n_(dimension) {}

  Expression parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Expression e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expression expr() {
    Expression e = term();
    for (;;) {
      if (accept('+')) e = Expression::add(e, term());
      else if (accept('-')) e = Expression::subtract(e, term());
      else return e;
    }
  }
  Expression term() {
    Expression e = unary();
    while (accept('*')) e = Expression::multiply(e, unary());
    return e;
  }
  Expression unary() {
    if (accept('-')) return Expression::negate(unary());
    return power();
  }
  Expression power() {
    Expression base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    const Expression ex = unary();
    if (ex.max_variable() != 0) throw ParseError("exponent must be a nonnegative integer", at);
    const double v = ex.evaluate({});
    if (!(v >= 0.0) || v != std::floor(v) || v > 4096.0)
      throw ParseError("exponent must be a nonnegative integer", at);
    return Expression::power(base, static_cast<unsigned>(v));
  }
  Expression primary() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (c == 'x') return variable();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }
  Expression variable() {
    const std::size_t at = pos_++;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected variable index after 'x'", pos_);
    std::size_t idx = 0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, idx);
    if (res.ec != std::errc{} || idx < 1 || idx > n_)
      throw ParseError("variable index out of range (dimension " + std::to_string(n_) + ")", at);
    return Expression::variable(idx);
  }
  Expression number() {
    const std::size_t start = pos_;
    auto digits = [this] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      const std::size_t exp_start = pos_;
      digits();
      if (exp_start == pos_) pos_ = save;
    }
    double v = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc{} || res.ptr != text_.data() + pos_ || !std::isfinite(v))
      throw ParseError("invalid numeric literal", start);
    return Expression::constant(v);
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` as a polynomial in x1..x`dimension`.
inline Expression parse_expression(std::string_view text, std::size_t dimension) {
  return detail::ExpressionParser(text, dimension).parse();
}

}  // namespace lhg
