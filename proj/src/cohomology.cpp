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

#include "poissonlike/cohomology.hpp"

#include <cstdlib>
#include <map>

#include "poissonlike/errors.hpp"
#include "poissonlike/forms.hpp"
#include "poissonlike/schouten.hpp"

namespace poissonlike {

const ComplexSlot* GradedComplex::find(int grade) const {
  for (const auto& s : slots) {
    if (s.grade == grade) return &s;
  }
  return nullptr;
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string residual_label(const OperatorMatrix& first, const OperatorMatrix& second) {
  return second.label() + "*" + first.label();
}

}  // namespace

std::vector<SumWindow> sum_windows(const std::vector<int>& grades, int p) {
  std::vector<SumWindow> out;
  if (p == 0 || grades.empty()) return out;
  const long width = std::labs(p);
  std::map<long, bool> ks;
  for (int g : grades) ks[floor_div(g, width)] = true;
  for (const auto& [k, unused] : ks) {
    out.push_back({k, static_cast<int>(k * width), static_cast<int>((k + 1) * width - 1)});
  }
  return out;
}

BettiReport betti_sequence(const GradedComplex& complex, const Assignment& assignment) {
  if (complex.p == 0) throw DegreeMismatch("coboundary operator of degree 0 has no cohomology grading");
  // Composition check first: a non-complex has no cohomology.
  for (const auto& s : complex.slots) {
    const ComplexSlot* next = complex.find(s.grade + complex.p);
    if (!s.outgoing || next == nullptr || !next->outgoing) continue;
    RationalMatrix prod = multiply(s.outgoing->evaluate(assignment), next->outgoing->evaluate(assignment));
    if (!is_zero(prod)) {
      OperatorMatrix sym = multiply(*s.outgoing, *next->outgoing, residual_label(*s.outgoing, *next->outgoing));
      throw NotAComplex(s.grade, sym.label() + " is nonzero after substitution");
    }
  }

  BettiReport report;
  report.name = complex.name;
  report.p = complex.p;
  std::map<int, std::size_t> rank_out;
  for (const auto& s : complex.slots) {
    std::size_t r = s.outgoing ? rank(*s.outgoing, assignment) : 0;
    rank_out[s.grade] = r;
    report.degrees.push_back(s.grade);
    report.space_labels.push_back(s.space_label);
    report.matrix_labels.push_back(s.outgoing ? s.outgoing->label() : std::string{});
    report.dims.push_back(s.dim);
    report.ranks.push_back(r);
  }
  for (std::size_t i = 0; i < complex.slots.size(); ++i) {
    const int g = complex.slots[i].grade;
    auto in = rank_out.find(g - complex.p);
    std::size_t r_in = in == rank_out.end() ? 0 : in->second;
    report.betti.push_back(report.dims[i] - report.ranks[i] - r_in);
  }
  report.windows = sum_windows(report.degrees, report.p);
  AlternatingSum sums = alternating_sum_check(report);
  report.alt_betti_sum = sums.lhs;
  report.alt_dim_sum = sums.rhs;
  return report;
}

std::vector<OperatorMatrix> d_squared_check(const GradedComplex& complex) {
  std::vector<OperatorMatrix> out;
  for (const auto& s : complex.slots) {
    const ComplexSlot* next = complex.find(s.grade + complex.p);
    if (!s.outgoing || next == nullptr || !next->outgoing) continue;
    out.push_back(multiply(*s.outgoing, *next->outgoing, residual_label(*s.outgoing, *next->outgoing)));
  }
  return out;
}

std::vector<OperatorMatrix> d_squared_check(const GradedComplex& complex,
                                            const Assignment& assignment) {
  std::vector<OperatorMatrix> out;
  for (auto& m : d_squared_check(complex)) out.push_back(m.substitute(assignment));
  return out;
}

AlternatingSum alternating_sum_check(const BettiReport& report) {
  AlternatingSum out{0, 0, true};
  if (report.p == 0) return out;
  const long width = std::labs(report.p);
  for (std::size_t i = 0; i < report.degrees.size(); ++i) {
    long k = floor_div(report.degrees[i], width);
    long sign = (k % 2 == 0) ? 1 : -1;
    out.lhs += sign * static_cast<long>(report.betti[i]);
    out.rhs += sign * static_cast<long>(report.dims[i]);
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

std::string exterior_space_label(Space space, std::size_t k) {
  return "L^" + std::to_string(k) + (space == Space::cotangent ? "*" : "");
}

GradedComplex tangent_complex(const LieAlgebra& algebra, const ExteriorElement& pi) {
  if (pi.space() != Space::tangent) throw SpaceMismatch("tangent complex needs a tangent pi");
  if (!pi.is_homogeneous()) throw DegreeMismatch("pi must be homogeneous: " + pi.to_string());
  const std::size_t n = algebra.dim();
  const std::size_t deg = pi.degree().value_or(2);
  if (deg == 0) throw DegreeMismatch("pi of degree 0 is not a multivector");
  GradedComplex c;
  c.name = "d_pi";
  c.p = static_cast<int>(deg) - 1;
  LinearMap op = [&algebra, &pi](const ExteriorElement& u) { return d_pi(algebra, pi, u); };
  for (std::size_t m = 1; m <= n; ++m) {
    ComplexSlot s;
    s.grade = tangent_grade(m);
    s.dim = binomial(n, m);
    s.space_label = exterior_space_label(Space::tangent, m);
    std::size_t target = m + deg - 1;
    if (target >= 1 && target <= n) {
      s.outgoing = operator_matrix(op, Space::tangent, n, m, target,
                                   matrix_label("A", static_cast<long>(m), static_cast<long>(target)));
    }
    c.slots.push_back(std::move(s));
  }
  return c;
}

GradedComplex form_complex(const LieAlgebra& algebra, const ExteriorElement& phi) {
  if (phi.space() != Space::cotangent) throw SpaceMismatch("form complex needs a cotangent phi");
  if (!phi.is_homogeneous()) {
    throw InhomogeneousLeftArgument("phi must be homogeneous: " + phi.to_string());
  }
  const std::size_t n = algebra.dim();
  const std::size_t deg = phi.degree().value_or(0);
  GradedComplex c;
  c.name = "d_phi";
  c.p = static_cast<int>(deg) + 1;
  LinearMap op = [&algebra, &phi](const ExteriorElement& u) { return d_phi(algebra, phi, u); };
  for (std::size_t m = 0; m <= n; ++m) {
    ComplexSlot s;
    s.grade = form_grade(m);
    s.dim = binomial(n, m);
    s.space_label = exterior_space_label(Space::cotangent, m);
    std::size_t target = m + deg + 1;
    if (target <= n) {
      s.outgoing = operator_matrix(op, Space::cotangent, n, m, target,
                                   matrix_label("A", static_cast<long>(m), static_cast<long>(target)));
    }
    c.slots.push_back(std::move(s));
  }
  return c;
}

GradedComplex ce_complex(const LieAlgebra& algebra) {
  GradedComplex c = form_complex(algebra, ExteriorElement::scalar(Space::cotangent, algebra.dim(), 1L));
  c.name = "d";
  for (auto& s : c.slots) {
    if (s.outgoing) {
      s.outgoing->set_label(matrix_label("d", s.outgoing->domain_degree(), s.outgoing->codomain_degree()));
    }
  }
  return c;
}

}  // namespace poissonlike
