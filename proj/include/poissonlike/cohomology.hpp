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
#include <optional>
#include <string>
#include <vector>

#include "poissonlike/exterior.hpp"
#include "poissonlike/lie_algebra.hpp"
#include "poissonlike/operator_matrix.hpp"

namespace poissonlike {

/// One chain space of a graded complex and its outgoing map.
struct ComplexSlot {
  int grade = 0;
  std::size_t dim = 0;
  /// Human label of the space, e.g. `L^2` or `C_1^2`.
  std::string space_label;
  /// Map to the slot of grade `grade + p`; nullopt when that space is zero.
  std::optional<OperatorMatrix> outgoing;
};

/// Finite graded complex with an operator of degree p (p != 0). Slots may be
/// listed in any order; lookups go by grade.
struct GradedComplex {
  std::string name;
  int p = 1;
  std::vector<ComplexSlot> slots;

  const ComplexSlot* find(int grade) const;
};

/// Grouping window of the alternating sum: grades k|p| <= i < (k+1)|p|.
struct SumWindow {
  long k;
  int first_grade;
  int last_grade;
};

struct BettiReport {
  std::string name;
  int p = 1;
  std::vector<int> degrees;
  std::vector<std::string> space_labels;
  std::vector<std::string> matrix_labels;
  std::vector<std::size_t> dims;
  /// Rank of the outgoing map at each degree.
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> betti;
  long alt_betti_sum = 0;
  long alt_dim_sum = 0;
  std::vector<SumWindow> windows;
};

/// Ranks and Betti numbers after substituting `assignment`.
/// betti[i] = dims[i] - rank_out(i) - rank_out(i - p).
/// Throws NotAComplex when consecutive maps do not compose to zero,
/// MissingParameter, and DegreeMismatch for p == 0.
BettiReport betti_sequence(const GradedComplex& complex, const Assignment& assignment);

/// Matrices of op∘op (one per grade where two maps chain), symbolic.
std::vector<OperatorMatrix> d_squared_check(const GradedComplex& complex);
/// Same, after substitution.
std::vector<OperatorMatrix> d_squared_check(const GradedComplex& complex,
                                            const Assignment& assignment);

struct AlternatingSum {
  long lhs;
  long rhs;
  bool equal;
};

/// Evaluates sum_k (-1)^k sum_{k|p| <= i < (k+1)|p|} of Betti numbers (lhs)
/// and of dimensions (rhs); windows anchored at grade 0, k may be negative.
AlternatingSum alternating_sum_check(const BettiReport& report);

/// Windows used by alternating_sum_check for the given grades.
std::vector<SumWindow> sum_windows(const std::vector<int>& grades, int p);

/// d_pi complex on Lambda^1..Lambda^n (grades 0..n-1), p = deg(pi) - 1.
GradedComplex tangent_complex(const LieAlgebra& algebra, const ExteriorElement& pi);

/// d_phi complex on Lambda^0..Lambda^n of the dual (grades 1..n+1),
/// p = deg(phi) + 1.
GradedComplex form_complex(const LieAlgebra& algebra, const ExteriorElement& phi);

/// Chevalley-Eilenberg complex (grades 1..n+1, p = 1).
GradedComplex ce_complex(const LieAlgebra& algebra);

/// Lambda^k (tangent) or Lambda^k* (cotangent) label.
std::string exterior_space_label(Space space, std::size_t k);

}  // namespace poissonlike
