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

#pragma once

// A small expression language for complex-valued functions of one real
// coordinate x.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right associative
//   primary := number | 'x' | 'i' | func '(' expr ')' | '(' expr ')'
//   func    := exp | log | sin | cos | sqrt | abs | conj
//
// log, sqrt and non-integer powers use principal branches. Powers whose
// exponent evaluates to an integer are computed by repeated squaring.

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "multop/errors.hpp"

namespace multop {

class ParseError : public ConfigError {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : ConfigError(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class Expression {
 public:
  struct Node;

  /// Throws ParseError on malformed input or unknown identifiers.
  static Expression parse(std::string_view text);
  static Expression constant(std::complex<double> value);

  std::complex<double> evaluate(double x) const;
  /// Fully parenthesized form; parse(to_string()) evaluates identically.
  std::string to_string() const;
  /// True when the expression does not reference x.
  bool is_constant() const;

 private:
  explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

}  // namespace multop
