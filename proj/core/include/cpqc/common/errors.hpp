// Copyright 2026 The CPQC Authors
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

#include <stdexcept>
#include <string>

namespace cpqc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, length mismatch,
/// non-finite angle, probabilities not summing to one, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A gate or block kind is not supported by the requested operation.
class UnsupportedGate : public Error {
 public:
  using Error::Error;
};

/// An encoding block cannot be turned into a control circuit exactly.
class UnsupportedEncoding : public Error {
 public:
  using Error::Error;
};

/// Optimisation produced a non-finite cost.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed `.cpqc` document or config file. Line and column are 1-based;
/// column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cpqc
