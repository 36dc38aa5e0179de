// Copyright 2026 The poissonlike Authors
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

namespace poissonlike {

/// Base of every domain error raised by the engine. The CLI maps these to
/// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("parse error (line " + std::to_string(line) + "): " + reason),
        line_(line) {}
  explicit ParseError(const std::string& reason) : ParseError(1, reason) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MissingParameter : public Error {
 public:
  explicit MissingParameter(std::string name)
      : Error("missing value for parameter '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

/// Polynomial-coefficient counterpart of SpaceMismatch.
class SideMismatch : public Error {
 public:
  using Error::Error;
};

class InhomogeneousLeftArgument : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotAComplex : public Error {
 public:
  NotAComplex(int degree, const std::string& residual)
      : Error("operator does not square to zero at degree " + std::to_string(degree) +
              ": " + residual),
        degree_(degree) {}

  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

}  // namespace poissonlike
