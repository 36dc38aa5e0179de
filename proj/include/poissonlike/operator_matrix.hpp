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
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "poissonlike/exterior.hpp"
#include "poissonlike/param_poly.hpp"
#include "poissonlike/rank.hpp"

namespace poissonlike {

/// Basis vector of a chain space: an exterior monomial, optionally times a
/// coordinate monomial x^e (empty `x` on the constant-coefficient side).
struct BasisElement {
  std::vector<unsigned> x;
  MultiIndex idx;

  /// Exterior index first, then coordinate monomials by degree and, within a
  /// degree, x1^2 < x1*x2 < ... < xn^2 (lexicographic on variable lists).
  std::strong_ordering operator<=>(const BasisElement& other) const;
  bool operator==(const BasisElement& other) const = default;

  /// `x1*x4*y1^y2`, `x4^2*y3^y4`, `z2^z3`, `1`.
  std::string to_string(Space space) const;
};

/// Matrix of a linear map between ordered bases. Row r holds the image of
/// domain[r] expanded in `codomain` (row = domain).
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(std::string label, Space space, int domain_degree, int codomain_degree,
                 std::vector<BasisElement> domain, std::vector<BasisElement> codomain);

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  Space space() const noexcept { return space_; }
  int domain_degree() const noexcept { return domain_degree_; }
  int codomain_degree() const noexcept { return codomain_degree_; }
  const std::vector<BasisElement>& domain() const noexcept { return domain_; }
  const std::vector<BasisElement>& codomain() const noexcept { return codomain_; }

  std::size_t rows() const noexcept { return domain_.size(); }
  std::size_t cols() const noexcept { return codomain_.size(); }
  const ParamPoly& at(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  ParamPoly& at(std::size_t r, std::size_t c) { return entries_[r][c]; }
  const std::vector<std::vector<ParamPoly>>& entries() const noexcept { return entries_; }

  /// Writes the coefficients of `image` into row r. Throws ShapeMismatch
  /// when the image has a component outside the codomain basis.
  void set_row(std::size_t r, const std::map<BasisElement, ParamPoly>& image);

  bool is_zero() const;
  std::set<std::string> parameters() const;
  OperatorMatrix substitute(const Assignment& assignment) const;
  /// Throws MissingParameter.
  RationalMatrix evaluate(const Assignment& assignment) const;
  OperatorMatrix transpose(std::string label) const;

  /// Image of domain[r] as a map basis -> coefficient.
  std::map<BasisElement, ParamPoly> row_image(std::size_t r) const;

 private:
  std::string label_;
  Space space_ = Space::tangent;
  int domain_degree_ = 0;
  int codomain_degree_ = 0;
  std::vector<BasisElement> domain_;
  std::vector<BasisElement> codomain_;
  std::vector<std::vector<ParamPoly>> entries_;
};

/// Matrix of "first, then second" in the row = domain layout, i.e. the
/// product first * second. Throws ShapeMismatch when first's codomain basis
/// differs from second's domain basis.
OperatorMatrix multiply(const OperatorMatrix& first, const OperatorMatrix& second,
                        std::string label);

/// Exact rank after substituting `assignment`. Throws MissingParameter.
std::size_t rank(const OperatorMatrix& m, const Assignment& assignment);

using LinearMap = std::function<ExteriorElement(const ExteriorElement&)>;

/// Applies `op` to every basis monomial of Lambda^domain_degree and reads the
/// coefficients in the lexicographic basis of Lambda^codomain_degree.
OperatorMatrix operator_matrix(const LinearMap& op, Space space, std::size_t n,
                               std::size_t domain_degree, std::size_t codomain_degree,
                               std::string label);

/// Constant-coefficient basis of Lambda^k as BasisElements.
std::vector<BasisElement> exterior_basis(std::size_t n, std::size_t k);

/// `A(1,2)` style label.
std::string matrix_label(const std::string& prefix, long from, long to);

}  // namespace poissonlike
