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

#include "poissonlike/exterior.hpp"
#include "poissonlike/lie_algebra.hpp"

namespace poissonlike {

/// Chevalley-Eilenberg differential on the dual exterior algebra:
/// d z^k = -sum_{i<j} c^k_ij z_i ^ z_j, extended as an odd derivation.
ExteriorElement ce_d(const LieAlgebra& algebra, const ExteriorElement& alpha);

/// d z^k for k = 1..n (index 0 unused).
std::vector<ExteriorElement> ce_generator_differentials(const LieAlgebra& algebra);

/// [alpha, beta] = (-1)^a d(alpha ^ beta) for alpha of degree a.
/// Throws InhomogeneousLeftArgument when alpha mixes degrees.
ExteriorElement form_bracket(const LieAlgebra& algebra, const ExteriorElement& alpha,
                             const ExteriorElement& beta);

/// d_phi(U) = [phi, U] = (-1)^p d(phi ^ U); raises form degree by p + 1.
ExteriorElement d_phi(const LieAlgebra& algebra, const ExteriorElement& phi,
                      const ExteriorElement& u);

/// Superalgebra grade of an a-form: a + 1.
int form_grade(std::size_t degree);

}  // namespace poissonlike
