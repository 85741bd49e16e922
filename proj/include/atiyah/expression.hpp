#pragma once

// Bundle expressions.
//
//   sum     := product ('+' product)*
//   product := power ('*' power)*       an integer may also be juxtaposed
//                                       with what follows: "2 F_2"
//   power   := primary ('^' ['-'|'+'] int)*
//   primary := 'O' | 'L' | 'F_' int | 'F(' int ')' | int | '(' sum ')'
//
// '*' is the tensor product, '+' the direct sum, an integer k stands for
// k copies of O_X. Whitespace is insignificant.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atiyah/kring.hpp"

namespace atiyah {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t position, const std::string& message)
      : std::runtime_error("column " + std::to_string(position + 1) + ": " +
                           message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Expression {
  enum class Kind { trivial, atiyah, line, scalar, sum, product, power };

  Kind kind = Kind::trivial;
  std::int64_t value = 0;  // F index, scalar, or power exponent
  std::vector<Expression> operands;

  static Expression trivial() { return {Kind::trivial, 0, {}}; }
  static Expression atiyah(std::int64_t r) { return {Kind::atiyah, r, {}}; }
  static Expression line() { return {Kind::line, 0, {}}; }
  static Expression scalar(std::int64_t k) { return {Kind::scalar, k, {}}; }
  static Expression power(Expression base, std::int64_t m) {
    Expression e{Kind::power, m, {}};
    e.operands.push_back(std::move(base));
    return e;
  }
  static Expression nary(Kind k, std::vector<Expression> ops) {
    return {k, 0, std::move(ops)};
  }

  friend bool operator==(const Expression&, const Expression&) = default;
};

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view src) : src_(src) {}

  Expression parse() {
    skip_ws();
    if (at_end()) throw parse_error(pos_, "empty expression");
    Expression e = parse_sum();
    skip_ws();
    if (!at_end())
      throw parse_error(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c))
      throw parse_error(pos_, std::string("expected '") + c + "'");
  }

  bool starts_primary() {
    skip_ws();
    const char c = peek();
    return c == 'O' || c == 'L' || c == 'F' || c == '(' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  std::int64_t integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (digits == pos_) throw parse_error(digits, "expected an integer");
    std::int64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(src_.data() + digits, src_.data() + pos_, v);
    if (ec != std::errc()) throw parse_error(start, "integer out of range");
    return negative ? -v : v;
  }

  Expression parse_sum() {
    std::vector<Expression> ops;
    ops.push_back(parse_product());
    while (accept('+')) ops.push_back(parse_product());
    if (ops.size() == 1) return std::move(ops.front());
    return Expression::nary(Expression::Kind::sum, std::move(ops));
  }

  Expression parse_product() {
    std::vector<Expression> ops;
    ops.push_back(parse_power());
    while (true) {
      if (accept('*')) {
        ops.push_back(parse_power());
      } else if (ops.size() == 1 &&
                 ops.front().kind == Expression::Kind::scalar &&
                 starts_primary()) {
        ops.push_back(parse_power());
      } else {
        break;
      }
    }
    if (ops.size() == 1) return std::move(ops.front());
    return Expression::nary(Expression::Kind::product, std::move(ops));
  }

  Expression parse_power() {
    Expression e = parse_primary();
    while (accept('^')) {
      std::int64_t m;
      if (accept('(')) {
        m = integer(true);
        expect(')');
      } else {
        m = integer(true);
      }
      e = Expression::power(std::move(e), m);
    }
    return e;
  }

  Expression parse_primary() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == 'O') {
      ++pos_;
      return Expression::trivial();
    }
    if (c == 'L') {
      ++pos_;
      return Expression::line();
    }
    if (c == 'F') {
      ++pos_;
      std::int64_t r;
      if (peek() == '_') {
        ++pos_;
        r = integer(false);
      } else if (peek() == '(') {
        ++pos_;
        r = integer(false);
        expect(')');
      } else {
        throw parse_error(pos_, "expected '_' or '(' after F");
      }
      if (r < 1) throw parse_error(start, "F index must be >= 1");
      return Expression::atiyah(r);
    }
    if (c == '(') {
      ++pos_;
      Expression e = parse_sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Expression::scalar(integer(false));
    if (at_end()) throw parse_error(pos_, "unexpected end of expression");
    throw parse_error(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expression parse_expression(std::string_view src) {
  return detail::ExpressionParser(src).parse();
}

inline std::string format_expression(const Expression& e) {
  using K = Expression::Kind;
  switch (e.kind) {
    case K::trivial: return "O";
    case K::line: return "L";
    case K::atiyah: return "F_" + std::to_string(e.value);
    case K::scalar: return std::to_string(e.value);
    case K::power: {
      const Expression& base = e.operands.front();
      std::string b = format_expression(base);
      if (base.kind == K::sum || base.kind == K::product) b = "(" + b + ")";
      return b + "^" + std::to_string(e.value);
    }
    case K::product: {
      std::string out;
      for (const auto& op : e.operands) {
        if (!out.empty()) out += '*';
        const std::string s = format_expression(op);
        out += op.kind == K::sum || op.kind == K::product ? "(" + s + ")" : s;
      }
      return out;
    }
    case K::sum: {
      std::string out;
      for (const auto& op : e.operands) {
        if (!out.empty()) out += " + ";
        const std::string s = format_expression(op);
        out += op.kind == K::sum ? "(" + s + ")" : s;
      }
      return out;
    }
  }
  return {};
}

inline BundleSum evaluate(const Expression& e, TorsionContext ctx) {
  using K = Expression::Kind;
  switch (e.kind) {
    case K::trivial: return BundleSum::trivial(ctx);
    case K::line: return IndecomposableBundle(ctx, 1, 1);
    case K::atiyah: return IndecomposableBundle::atiyah(ctx, e.value);
    case K::scalar: {
      BundleSum out(ctx);
      out.add(IndecomposableBundle::trivial(ctx), e.value);
      return out;
    }
    case K::power: return tensor_power(evaluate(e.operands.front(), ctx), e.value);
    case K::product: {
      BundleSum acc = evaluate(e.operands.front(), ctx);
      for (std::size_t i = 1; i < e.operands.size(); ++i)
        acc = tensor(acc, evaluate(e.operands[i], ctx));
      return acc;
    }
    case K::sum: {
      BundleSum acc(ctx);
      for (const auto& op : e.operands) acc += evaluate(op, ctx);
      return acc;
    }
  }
  return BundleSum(ctx);
}

inline BundleSum evaluate(std::string_view src, TorsionContext ctx) {
  return evaluate(parse_expression(src), ctx);
}

}  // namespace atiyah
