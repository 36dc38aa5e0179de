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

#include "poissonlike/duality.hpp"

#include "poissonlike/errors.hpp"
#include "poissonlike/forms.hpp"
#include "poissonlike/schouten.hpp"

namespace poissonlike {

namespace {

std::size_t pi_degree(const ExteriorElement& pi) {
  if (pi.space() != Space::tangent) throw SpaceMismatch("delta needs a tangent pi");
  if (!pi.is_homogeneous()) throw DegreeMismatch("pi must be homogeneous: " + pi.to_string());
  const std::size_t p0 = pi.degree().value_or(2);
  if (p0 < 2) throw DegreeMismatch("pi must have degree >= 2: " + pi.to_string());
  return p0;
}

OperatorMatrix as_cotangent(const OperatorMatrix& m, std::string label) {
  OperatorMatrix out(std::move(label), Space::cotangent, m.domain_degree(), m.codomain_degree(),
                     m.domain(), m.codomain());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c);
  }
  return out;
}

}  // namespace

std::vector<OperatorMatrix> dual_operator(const LieAlgebra& algebra, const ExteriorElement& pi) {
  const std::size_t p0 = pi_degree(pi);
  const std::size_t n = algebra.dim();
  LinearMap op = [&algebra, &pi](const ExteriorElement& u) { return d_pi(algebra, pi, u); };
  std::vector<OperatorMatrix> out;
  for (std::size_t q = p0 - 1; q <= n; ++q) {
    const std::size_t s = q + 1 - p0;
    std::string label = matrix_label("delta", static_cast<long>(q), static_cast<long>(s));
    if (s == 0) {
      out.emplace_back(std::move(label), Space::cotangent, static_cast<int>(q), 0,
                       exterior_basis(n, q), exterior_basis(n, 0));
      continue;
    }
    OperatorMatrix dp = operator_matrix(op, Space::tangent, n, s, q, "");
    out.push_back(as_cotangent(dp.transpose(""), std::move(label)));
  }
  return out;
}

ExteriorElement dual_apply(const LieAlgebra& algebra, const ExteriorElement& pi,
                           const ExteriorElement& omega) {
  const std::size_t p0 = pi_degree(pi);
  const std::size_t n = algebra.dim();
  ExteriorElement out(Space::cotangent, n);
  for (std::size_t q : omega.degrees()) {
    if (q + 1 < p0) continue;
    const std::size_t s = q + 1 - p0;
    if (s == 0) continue;
    const ExteriorElement part = omega.homogeneous_part(q);
    for (const auto& idx : basis_enum(n, s)) {
      ParamPoly c = pairing(part, d_pi(algebra, pi, ExteriorElement::monomial(Space::tangent, n, idx)));
      if (!c.is_zero()) out.add_term(idx, c);
    }
  }
  return out;
}

std::vector<OperatorMatrix> compose(const std::vector<OperatorMatrix>& first,
                                    const std::vector<OperatorMatrix>& second,
                                    const std::string& second_name, const std::string& first_name) {
  std::vector<OperatorMatrix> out;
  for (const auto& f : first) {
    for (const auto& g : second) {
      if (g.domain_degree() != f.codomain_degree() || g.domain() != f.codomain()) continue;
      out.push_back(multiply(f, g,
                             matrix_label("(" + second_name + " o " + first_name + ")",
                                          f.domain_degree(), g.codomain_degree())));
    }
  }
  if (out.empty() && !first.empty() && !second.empty()) {
    throw ShapeMismatch("no codomain of " + first_name + " matches a domain of " + second_name);
  }
  return out;
}

std::vector<OperatorMatrix> ce_d_matrices(const LieAlgebra& algebra) {
  std::vector<OperatorMatrix> out;
  for (const auto& s : ce_complex(algebra).slots) {
    if (s.outgoing) out.push_back(*s.outgoing);
  }
  return out;
}

GradedComplex delta_complex(const LieAlgebra& algebra, const ExteriorElement& pi) {
  const std::size_t p0 = pi_degree(pi);
  const std::size_t n = algebra.dim();
  std::vector<OperatorMatrix> deltas = dual_operator(algebra, pi);
  GradedComplex c;
  c.name = "delta";
  c.p = 1 - static_cast<int>(p0);
  for (std::size_t q = 0; q <= n; ++q) {
    ComplexSlot s;
    s.grade = form_grade(q);
    s.dim = binomial(n, q);
    s.space_label = exterior_space_label(Space::cotangent, q);
    for (const auto& m : deltas) {
      if (m.domain_degree() == static_cast<int>(q)) s.outgoing = m;
    }
    c.slots.push_back(std::move(s));
  }
  return c;
}

DoubleComplexReport double_complex_report(const LieAlgebra& algebra, const ExteriorElement& pi,
                                          const Assignment& assignment) {
  DoubleComplexReport r;
  GradedComplex delta = delta_complex(algebra, pi);
  r.betti_d = betti_sequence(ce_complex(algebra), assignment);
  r.betti_delta = betti_sequence(delta, assignment);
  std::vector<OperatorMatrix> deltas = dual_operator(algebra, pi);
  std::vector<OperatorMatrix> ds = ce_d_matrices(algebra);
  for (auto& m : compose(deltas, deltas, "delta", "delta")) r.delta_squared.push_back(m.substitute(assignment));
  for (auto& m : compose(deltas, ds, "d", "delta")) r.d_after_delta.push_back(m.substitute(assignment));
  for (auto& m : compose(ds, deltas, "delta", "d")) r.delta_after_d.push_back(m.substitute(assignment));
  return r;
}

}  // namespace poissonlike
