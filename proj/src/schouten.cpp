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

#include "poissonlike/schouten.hpp"

#include "poissonlike/errors.hpp"

namespace poissonlike {

namespace {

void require_tangent(const LieAlgebra& algebra, const ExteriorElement& e) {
  if (e.space() != Space::tangent || e.ambient_dim() != algebra.dim()) {
    throw SpaceMismatch("Schouten bracket needs tangent elements over the algebra's dimension");
  }
  for (const auto& [idx, c] : e.terms()) {
    if (idx.empty()) {
      throw DegreeMismatch("scalars are not part of the multivector superalgebra: " + e.to_string());
    }
  }
}

/// Bracket of two basis monomials y_K, y_L.
ExteriorElement monomial_bracket(const LieAlgebra& algebra, const MultiIndex& k,
                                 const MultiIndex& l) {
  const std::size_t n = algebra.dim();
  ExteriorElement out(Space::tangent, n);
  for (std::size_t i = 0; i < k.degree(); ++i) {
    MultiIndex k_rest = k.without_position(i);
    for (std::size_t j = 0; j < l.degree(); ++j) {
      ExteriorElement xy = algebra.bracket_basis(k.indices()[i], l.indices()[j]);
      if (xy.is_zero()) continue;
      MultiIndex l_rest = l.without_position(j);
      auto tail = merge_indices(k_rest, l_rest);
      if (!tail) continue;
      // (-1)^(i+j) with 1-based positions equals (-1)^(i+j) 0-based.
      int sign = ((i + j) % 2 == 0) ? tail->sign : -tail->sign;
      ExteriorElement rest = ExteriorElement::monomial(Space::tangent, n, tail->index,
                                                       ParamPoly(static_cast<long>(sign)));
      out += wedge(xy, rest);
    }
  }
  return out;
}

}  // namespace

int tangent_grade(std::size_t degree) { return static_cast<int>(degree) - 1; }

ExteriorElement schouten_bracket(const LieAlgebra& algebra, const ExteriorElement& a,
                                 const ExteriorElement& b) {
  require_tangent(algebra, a);
  require_tangent(algebra, b);
  ExteriorElement out(Space::tangent, algebra.dim());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      ExteriorElement m = monomial_bracket(algebra, ka, kb);
      if (!m.is_zero()) out += (ca * cb) * m;
    }
  }
  return out;
}

ExteriorElement d_pi(const LieAlgebra& algebra, const ExteriorElement& pi,
                     const ExteriorElement& u) {
  if (!pi.is_homogeneous()) {
    throw DegreeMismatch("d_pi needs a homogeneous pi, got " + pi.to_string());
  }
  return schouten_bracket(algebra, pi, u);
}

ExteriorElement poisson_residual(const LieAlgebra& algebra, const ExteriorElement& pi) {
  return schouten_bracket(algebra, pi, pi);
}

}  // namespace poissonlike
