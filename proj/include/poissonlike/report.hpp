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

#include <string>
#include <vector>

#include <json.hpp>

#include "poissonlike/cohomology.hpp"
#include "poissonlike/duality.hpp"
#include "poissonlike/exterior.hpp"
#include "poissonlike/lie_algebra.hpp"
#include "poissonlike/operator_matrix.hpp"
#include "poissonlike/polyfield.hpp"

namespace poissonlike {

/// {"space":"tangent","n":4,"terms":[{"idx":[1,2],"c":"c1"}]}
nlohmann::json element_to_json(const ExteriorElement& e);
ExteriorElement element_from_json(const nlohmann::json& j);

/// Label, bases (as literals) and entries as polynomial literals.
nlohmann::json matrix_to_json(const OperatorMatrix& m);

nlohmann::json betti_to_json(const BettiReport& r);
BettiReport betti_from_json(const nlohmann::json& j);

/// bettiD and bettiDelta reports plus `anticommutator_residuals` (d o delta
/// and delta o d) and `delta_squared`.
nlohmann::json double_complex_to_json(const DoubleComplexReport& r);

nlohmann::json jacobi_to_json(const std::vector<JacobiViolation>& violations);

nlohmann::json poisson_system_to_json(const PoissonSystem& s);

/// Degree / space / Dim / Rank / Betti rows plus the alternating sums.
std::string betti_table(const BettiReport& r);

/// One line per domain basis vector: `y1 -> -c3*y1^y2`.
std::string matrix_listing(const OperatorMatrix& m);

}  // namespace poissonlike
