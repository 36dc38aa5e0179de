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

#include "poissonlike/forms.hpp"

#include "poissonlike/errors.hpp"

namespace poissonlike {

namespace {

void require_cotangent(const LieAlgebra& algebra, const ExteriorElement& e) {
  if (e.space() != Space::cotangent || e.ambient_dim() != algebra.dim()) {
    throw SpaceMismatch("form operations need cotangent elements over the algebra's dimension");
  }
}

std::size_t homogeneous_degree(const ExteriorElement& e) {
  if (!e.is_homogeneous()) {
    throw InhomogeneousLeftArgument("left argument must be homogeneous, got " + e.to_string());
  }
  return e.degree().value_or(0);
}

}  // namespace

int form_grade(std::size_t degree) { return static_cast<int>(degree) + 1; }

std::vector<ExteriorElement> ce_generator_differentials(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<ExteriorElement> dz(n + 1, ExteriorElement(Space::cotangent, n));
  for (const auto& [pair, rhs] : algebra.structure()) {
    for (const auto& t : rhs) {
      dz[t.k].add_term(MultiIndex{pair.first, pair.second}, -t.c);
    }
  }
  return dz;
}

ExteriorElement ce_d(const LieAlgebra& algebra, const ExteriorElement& alpha) {
  require_cotangent(algebra, alpha);
  const std::size_t n = algebra.dim();
  const auto dz = ce_generator_differentials(algebra);
  ExteriorElement out(Space::cotangent, n);
  for (const auto& [idx, c] : alpha.terms()) {
    const auto& ks = idx.indices();
    for (std::size_t t = 0; t < ks.size(); ++t) {
      if (dz[ks[t]].is_zero()) continue;
      MultiIndex left(std::vector<unsigned>(ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(t)));
      MultiIndex right(std::vector<unsigned>(ks.begin() + static_cast<std::ptrdiff_t>(t) + 1, ks.end()));
      ParamPoly sign = (t % 2 == 0) ? c : -c;
      ExteriorElement piece =
          wedge(wedge(ExteriorElement::monomial(Space::cotangent, n, left, sign), dz[ks[t]]),
                ExteriorElement::monomial(Space::cotangent, n, right));
      out += piece;
    }
  }
  return out;
}

ExteriorElement form_bracket(const LieAlgebra& algebra, const ExteriorElement& alpha,
                             const ExteriorElement& beta) {
  require_cotangent(algebra, alpha);
  require_cotangent(algebra, beta);
  std::size_t a = homogeneous_degree(alpha);
  ExteriorElement d = ce_d(algebra, wedge(alpha, beta));
  return (a % 2 == 0) ? d : -d;
}

ExteriorElement d_phi(const LieAlgebra& algebra, const ExteriorElement& phi,
                      const ExteriorElement& u) {
  return form_bracket(algebra, phi, u);
}

}  // namespace poissonlike
