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

#include "poissonlike/exterior.hpp"
#include "poissonlike/lie_algebra.hpp"

namespace poissonlike {

/// Schouten bracket on the exterior algebra of a Lie algebra (invariant
/// multivector fields). On decomposables
///
///   [X1^...^Xr, Y1^...^Ys] = sum_{i,j} (-1)^(i+j) [Xi,Yj] ^ X(no i) ^ Y(no j)
///
/// extended bilinearly. Degree-0 terms are not part of the superalgebra and
/// raise DegreeMismatch; a non-tangent argument raises SpaceMismatch.
ExteriorElement schouten_bracket(const LieAlgebra& algebra, const ExteriorElement& a,
                                 const ExteriorElement& b);

/// d_pi(U) = [pi, U]. `pi` must be homogeneous.
ExteriorElement d_pi(const LieAlgebra& algebra, const ExteriorElement& pi,
                     const ExteriorElement& u);

/// [pi, pi]; its coefficients are the Poisson conditions on pi.
ExteriorElement poisson_residual(const LieAlgebra& algebra, const ExteriorElement& pi);

/// Superalgebra grade of a homogeneous tangent element: degree - 1.
int tangent_grade(std::size_t degree);

}  // namespace poissonlike
