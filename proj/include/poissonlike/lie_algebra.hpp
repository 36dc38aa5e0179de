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
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "poissonlike/exterior.hpp"
#include "poissonlike/param_poly.hpp"

namespace poissonlike {

/// One summand of a bracket right-hand side: coefficient * y_k.
struct StructureTerm {
  unsigned k;
  ParamPoly c;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [y_i, y_j] = sum_k c^k_ij y_k. Only pairs i < j are stored; absent pairs
/// bracket to zero. Coefficients may involve symbolic parameters.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t n, std::string name = {});

  /// Parses the JSON algebra file format. Throws ParseError (with the source
  /// line when the JSON itself is malformed) and IndexOutOfRange.
  static LieAlgebra parse(std::string_view text);
  static LieAlgebra from_json(const nlohmann::json& j);
  static LieAlgebra load(const std::filesystem::path& path);

  /// Sets [y_i, y_j]; i > j is accepted and stored negated. Throws
  /// IndexOutOfRange, and ParseError when the pair is already set.
  void set_bracket(unsigned i, unsigned j, std::vector<StructureTerm> rhs);
  void declare_parameter(std::string name);

  std::size_t dim() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& parameters() const noexcept { return parameters_; }
  const std::map<std::pair<unsigned, unsigned>, std::vector<StructureTerm>>& structure() const noexcept {
    return structure_;
  }

  /// c^k_ij with antisymmetry applied.
  ParamPoly structure_constant(unsigned i, unsigned j, unsigned k) const;
  /// [y_i, y_j] as a degree-1 tangent element.
  ExteriorElement bracket_basis(unsigned i, unsigned j) const;

  nlohmann::json to_json() const;

 private:
  void check_index(unsigned i, const char* what) const;

  std::size_t n_;
  std::string name_;
  std::vector<std::string> parameters_;
  std::map<std::pair<unsigned, unsigned>, std::vector<StructureTerm>> structure_;
};

/// Bilinear extension of the structure constants to Lambda^1. Throws
/// DegreeMismatch unless both arguments are homogeneous of degree 1 (or zero),
/// SpaceMismatch unless both are tangent over the algebra's dimension.
ExteriorElement bracket(const LieAlgebra& algebra, const ExteriorElement& x,
                        const ExteriorElement& y);

struct JacobiViolation {
  unsigned i, j, k;
  /// [[y_i,y_j],y_k] + [[y_j,y_k],y_i] + [[y_k,y_i],y_j], nonzero.
  ExteriorElement residual;
};

/// Checks the Jacobi identity on every basis triple i < j < k as a
/// polynomial identity in the parameters. Empty report means valid.
std::vector<JacobiViolation> validate(const LieAlgebra& algebra);

}  // namespace poissonlike
