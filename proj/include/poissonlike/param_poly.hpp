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

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poissonlike/rational.hpp"

namespace poissonlike {

/// Power product of named parameters, e.g. c1^2*c5. Factors are sorted by
/// name and carry positive exponents; the empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(std::string name, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t exponent_of(std::string_view name) const;

  Monomial operator*(const Monomial& other) const;

  /// Graded lexicographic order over the union of parameter names, names
  /// sorted lexicographically.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Sparse multivariate polynomial over the rationals in named symbolic
/// parameters. The coefficient type of every structure in the engine.
///
/// Parameter universes merge by name, so a polynomial without parameters is
/// a plain rational and mixes freely with symbolic ones. Zero coefficients
/// are never stored, which makes `==` structural equality.
class ParamPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  ParamPoly() = default;
  ParamPoly(long value);  // NOLINT(google-explicit-constructor)
  ParamPoly(const Rational& value);  // NOLINT(google-explicit-constructor)

  static ParamPoly parameter(std::string name);
  static ParamPoly term(const Rational& coefficient, Monomial monomial);

  /// Parses the polynomial literal syntax: integers, fractions, identifiers,
  /// `+ - *`, `^` with a non-negative integer exponent, parentheses.
  static ParamPoly parse(std::string_view text);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::uint32_t total_degree() const noexcept;
  std::set<std::string> parameters() const;

  /// Full evaluation. Throws MissingParameter for any unassigned name that
  /// occurs in the polynomial.
  Rational eval(const Assignment& assignment) const;
  /// Partial evaluation; unassigned parameters stay symbolic.
  ParamPoly substitute(const Assignment& assignment) const;
  /// Replaces parameters by polynomials.
  ParamPoly substitute(const std::map<std::string, ParamPoly>& replacement) const;

  ParamPoly pow(std::uint32_t exponent) const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly operator-() const;

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  bool operator==(const ParamPoly& other) const = default;

  /// Canonical serialization, highest grlex monomial first: `-c2*c6 + c4*c5`.
  std::string to_string() const;

  /// True when the printed form needs parentheses as a factor.
  bool needs_parentheses() const noexcept;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

}  // namespace poissonlike
