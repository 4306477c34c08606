#include "medial/expression.hpp"

#include <cctype>
#include <sstream>

namespace medial {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  ast::NodePtr parse_all() {
    auto node = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string_view digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  static ast::NodePtr make(auto value) {
    return std::make_unique<const ast::Node>(ast::Node{std::move(value)});
  }

  ast::NodePtr parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = make(ast::Add{std::move(lhs), parse_term()});
      } else if (accept('-')) {
        lhs = make(ast::Sub{std::move(lhs), parse_term()});
      } else {
        return lhs;
      }
    }
  }

  ast::NodePtr parse_term() {
    const bool negated = accept('-');
    auto lhs = parse_factor();
    while (accept('*')) lhs = make(ast::Mul{std::move(lhs), parse_factor()});
    return negated ? make(ast::Neg{std::move(lhs)}) : std::move(lhs);
  }

  ast::NodePtr parse_factor() {
    auto base = parse_base();
    if (!accept('^')) return base;
    if (!peek_digit()) fail("expected a nonnegative integer exponent");
    const std::size_t start = pos_;
    const std::string_view text = digits();
    unsigned long long value = 0;
    for (char c : text) {
      value = value * 10 + static_cast<unsigned>(c - '0');
      if (value > kMaxExponent) {
        pos_ = start;
        fail("exponent overflow (maximum " + std::to_string(kMaxExponent) + ")");
      }
    }
    return make(ast::Pow{std::move(base), static_cast<unsigned>(value)});
  }

  ast::NodePtr parse_base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      const std::size_t start = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected variable index after 'x'");
      }
      const std::string_view text = digits();
      std::size_t index = 0;
      for (char d : text) {
        index = index * 10 + static_cast<std::size_t>(d - '0');
        if (index > arity_) break;
      }
      if (index == 0 || index > arity_) {
        pos_ = start;
        fail("variable x" + std::string(text) + " outside 1.." + std::to_string(arity_));
      }
      return make(ast::Variable{index});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num(digits());
      if (!accept('/')) return make(ast::RationalLiteral{Rational::parse(num)});
      const std::size_t den_pos = pos_;
      if (!peek_digit()) fail("expected denominator");
      const std::string den(digits());
      if (den.find_first_not_of('0') == std::string::npos) {
        pos_ = den_pos;
        fail("zero denominator");
      }
      return make(ast::RationalLiteral{Rational::parse(num + "/" + den)});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

ast::NodePtr parse_expression(std::string_view text, std::size_t arity) {
  if (arity == 0) throw std::invalid_argument("arity must be positive");
  return Parser(text, arity).parse_all();
}

Polynomial to_polynomial(const ast::Node& node, std::size_t arity) {
  struct Lower {
    std::size_t arity;

    Polynomial operator()(const ast::RationalLiteral& n) const {
      return Polynomial::constant(arity, n.value);
    }
    Polynomial operator()(const ast::Variable& n) const {
      return Polynomial::variable(arity, n.index - 1);
    }
    Polynomial operator()(const ast::Add& n) const { return add(sub(*n.lhs), sub(*n.rhs)); }
    Polynomial operator()(const ast::Sub& n) const { return subtract(sub(*n.lhs), sub(*n.rhs)); }
    Polynomial operator()(const ast::Neg& n) const { return negate(sub(*n.operand)); }
    Polynomial operator()(const ast::Mul& n) const { return mul(sub(*n.lhs), sub(*n.rhs)); }
    Polynomial operator()(const ast::Pow& n) const { return pow(sub(*n.base), n.exponent); }

    Polynomial sub(const ast::Node& child) const { return std::visit(*this, child.value); }
  };
  return std::visit(Lower{arity}, node.value);
}

Polynomial parse(std::string_view text, std::size_t arity) {
  return to_polynomial(*parse_expression(text, arity), arity);
}

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    const Rational magnitude = c.abs();
    const bool constant = e.total() == 0;
    bool need_star = false;
    if (constant || magnitude != Rational(1)) {
      os << magnitude.to_string();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace medial
