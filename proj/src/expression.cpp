// Copyright 2026 The multop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "multop/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace multop {

using Complex = std::complex<double>;

enum class Func { Exp, Log, Sin, Cos, Sqrt, Abs, Conj };

struct Expression::Node {
  enum class Kind { Literal, Variable, Neg, Add, Sub, Mul, Div, Pow, Call };
  Kind kind = Kind::Literal;
  Complex value{0.0, 0.0};
  Func func = Func::Exp;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

constexpr std::array<std::pair<std::string_view, Func>, 7> kFunctions = {{
    {"exp", Func::Exp},
    {"log", Func::Log},
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"sqrt", Func::Sqrt},
    {"abs", Func::Abs},
    {"conj", Func::Conj},
}};

NodePtr make_literal(Complex v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Literal;
  n->value = v;
  return n;
}

Complex eval(const Node& n, double x);

/// Replaces a node whose operands are all literals by its finite value, so
/// that printed complex literals parse back to a single literal.
NodePtr fold(NodePtr n) {
  const bool literal_operands = (!n->lhs || n->lhs->kind == Node::Kind::Literal) &&
                                (!n->rhs || n->rhs->kind == Node::Kind::Literal);
  if (!literal_operands || n->kind == Node::Kind::Variable || n->kind == Node::Kind::Literal) return n;
  const Complex v = eval(*n, 0.0);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return n;
  return make_literal(v);
}

NodePtr make_binary(Node::Kind kind, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return fold(std::move(n));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return root;
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

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_binary(Node::Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make_binary(Node::Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make_binary(Node::Kind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make_binary(Node::Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Neg;
      n->lhs = unary();
      return fold(std::move(n));
    }
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make_binary(Node::Kind::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc() || res.ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return make_literal(Complex(value, 0.0));
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Variable;
      return n;
    }
    if (name == "i") return make_literal(Complex(0.0, 1.0));
    for (const auto& [fname, func] : kFunctions) {
      if (name != fname) continue;
      if (!accept('(')) fail("expected '(' after " + std::string(name));
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Call;
      n->func = func;
      n->lhs = expr();
      if (!accept(')')) fail("expected ')'");
      return fold(std::move(n));
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Complex integer_power(Complex base, long long n) {
  if (n < 0) return Complex(1.0, 0.0) / integer_power(base, -n);
  Complex result(1.0, 0.0);
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Complex power(Complex base, Complex exponent) {
  if (exponent.imag() == 0.0 && std::nearbyint(exponent.real()) == exponent.real() &&
      std::abs(exponent.real()) < 9.0e15) {
    return integer_power(base, static_cast<long long>(exponent.real()));
  }
  if (base == Complex(0.0)) return exponent.real() > 0.0 ? Complex(0.0) : Complex(NAN, NAN);
  return std::exp(exponent * std::log(base));
}

Complex call(Func f, Complex z) {
  switch (f) {
    case Func::Exp:
      return std::exp(z);
    case Func::Log:
      if (z == Complex(0.0)) return Complex(-INFINITY, 0.0);
      return std::log(z);
    case Func::Sin:
      return std::sin(z);
    case Func::Cos:
      return std::cos(z);
    case Func::Sqrt:
      return std::sqrt(z);
    case Func::Abs:
      return Complex(std::abs(z), 0.0);
    case Func::Conj:
      return std::conj(z);
  }
  return z;
}

Complex eval(const Node& n, double x) {
  switch (n.kind) {
    case Node::Kind::Literal:
      return n.value;
    case Node::Kind::Variable:
      return Complex(x, 0.0);
    case Node::Kind::Neg:
      return Complex(0.0) - eval(*n.lhs, x);  // keeps -(4) off the lower branch cut
    case Node::Kind::Add:
      return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Node::Kind::Sub:
      return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Node::Kind::Mul:
      return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Node::Kind::Div: {
      const Complex d = eval(*n.rhs, x);
      if (d == Complex(0.0)) return Complex(INFINITY, INFINITY);
      return eval(*n.lhs, x) / d;
    }
    case Node::Kind::Pow:
      return power(eval(*n.lhs, x), eval(*n.rhs, x));
    case Node::Kind::Call:
      return call(n.func, eval(*n.lhs, x));
  }
  return Complex(NAN, NAN);
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print(const Node& n, std::string& out) {
  auto binary = [&](const char* op) {
    out += '(';
    print(*n.lhs, out);
    out += op;
    print(*n.rhs, out);
    out += ')';
  };
  switch (n.kind) {
    case Node::Kind::Literal:
      out += '(';
      out += format_real(n.value.real());
      if (n.value.imag() != 0.0) {
        out += '+';
        out += format_real(n.value.imag());
        out += "*i";
      }
      out += ')';
      return;
    case Node::Kind::Variable:
      out += 'x';
      return;
    case Node::Kind::Neg:
      out += "(-";
      print(*n.lhs, out);
      out += ')';
      return;
    case Node::Kind::Add:
      return binary("+");
    case Node::Kind::Sub:
      return binary("-");
    case Node::Kind::Mul:
      return binary("*");
    case Node::Kind::Div:
      return binary("/");
    case Node::Kind::Pow:
      return binary("^");
    case Node::Kind::Call:
      for (const auto& [name, func] : kFunctions) {
        if (func != n.func) continue;
        out += name;
        out += '(';
        print(*n.lhs, out);
        out += ')';
      }
      return;
  }
}

bool references_x(const Node& n) {
  if (n.kind == Node::Kind::Variable) return true;
  if (n.lhs && references_x(*n.lhs)) return true;
  return n.rhs && references_x(*n.rhs);
}

}  // namespace

Expression Expression::parse(std::string_view text) { return Expression(Parser(text).parse()); }

Expression Expression::constant(Complex value) { return Expression(make_literal(value)); }

Complex Expression::evaluate(double x) const { return eval(*root_, x); }

std::string Expression::to_string() const {
  std::string out;
  print(*root_, out);
  return out;
}

bool Expression::is_constant() const { return !references_x(*root_); }

}  // namespace multop
