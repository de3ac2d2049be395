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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input data (configuration, expression text, envelope) is malformed.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A numeric computation failed or produced a non-finite value.
class NumericError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : NumericError(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

/// A symbol evaluated to NaN or infinity at an atom.
class NonFiniteSymbolError : public NumericError {
 public:
  explicit NonFiniteSymbolError(std::size_t atom)
      : NumericError("symbol is not finite at atom " + std::to_string(atom)),
        atom_(atom) {}
  std::size_t atom() const { return atom_; }

 private:
  std::size_t atom_;
};

}  // namespace multop
