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

#include <vector>

#include "poissonlike/cohomology.hpp"
#include "poissonlike/exterior.hpp"
#include "poissonlike/lie_algebra.hpp"
#include "poissonlike/operator_matrix.hpp"

namespace poissonlike {

/// Matrices of the dual operator delta on forms, defined by
/// <Omega, d_pi U> = <delta Omega, U>. For pi of degree p0 the entry at form
/// degree q maps Lambda^q* to Lambda^(q-p0+1)* and is the transpose of the
/// d_pi matrix out of Lambda^(q-p0+1). When that source degree is 0 (outside
/// the d_pi complex) the matrix is zero. Ordered by form degree.
/// Throws DegreeMismatch unless pi is homogeneous of degree >= 2.
std::vector<OperatorMatrix> dual_operator(const LieAlgebra& algebra, const ExteriorElement& pi);

/// delta Omega = sum_U <Omega, d_pi U> Dual U, evaluated on the element
/// directly (the defining formula, used to cross-check the matrices).
ExteriorElement dual_apply(const LieAlgebra& algebra, const ExteriorElement& pi,
                           const ExteriorElement& omega);

/// All compositions "first, then second" whose intermediate spaces match.
/// Labels read `(second o first)(q,r)`. ShapeMismatch when nothing aligns.
std::vector<OperatorMatrix> compose(const std::vector<OperatorMatrix>& first,
                                    const std::vector<OperatorMatrix>& second,
                                    const std::string& second_name, const std::string& first_name);

/// Chevalley-Eilenberg matrices d(q,q+1) for q = 0..n-1.
std::vector<OperatorMatrix> ce_d_matrices(const LieAlgebra& algebra);

/// The delta complex on Lambda^0*..Lambda^n* at grades q+1, of degree 1 - p0.
GradedComplex delta_complex(const LieAlgebra& algebra, const ExteriorElement& pi);

struct DoubleComplexReport {
  BettiReport betti_d;
  BettiReport betti_delta;
  /// delta o delta, d o delta, delta o d, each substituted with the
  /// assignment (parameters left free stay symbolic).
  std::vector<OperatorMatrix> delta_squared;
  std::vector<OperatorMatrix> d_after_delta;
  std::vector<OperatorMatrix> delta_after_d;
};

/// Betti tables of d and delta plus the residual matrices of the
/// compositions. Residuals are reported, never required to vanish.
DoubleComplexReport double_complex_report(const LieAlgebra& algebra, const ExteriorElement& pi,
                                          const Assignment& assignment);

}  // namespace poissonlike
