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
#include <cstdint>
#include <string>
#include <vector>

#include "poissonlike/cohomology.hpp"

namespace poissonlike::testing {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0.0;

  bool ok() const { return failures == 0 && cases > 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 20260415;
inline constexpr std::size_t kDefaultCases = 200;

/// betti_sequence plus a record of the report, so the alternating-sum
/// check can cover every report produced in a run.
BettiReport tracked_betti(const GradedComplex& complex, const Assignment& assignment);
const std::vector<BettiReport>& recorded_reports();

/// Alternating sums of every report recorded so far.
SuiteResult check_recorded_reports();

SuiteResult ring_axioms(std::uint64_t seed, std::size_t cases);
SuiteResult eval_homomorphism(std::uint64_t seed, std::size_t cases);
SuiteResult poly_literal_roundtrip(std::uint64_t seed, std::size_t cases);
SuiteResult wedge_supercommutative(std::uint64_t seed, std::size_t cases);
SuiteResult pairing_determinant(std::uint64_t seed, std::size_t cases);
SuiteResult volume_bijection(std::uint64_t seed, std::size_t cases);
SuiteResult bracket_antisymmetry(std::uint64_t seed, std::size_t cases);
SuiteResult schouten_antisymmetry(std::uint64_t seed, std::size_t cases);
SuiteResult schouten_jacobi(std::uint64_t seed, std::size_t cases);
SuiteResult poly_schouten_antisymmetry(std::uint64_t seed, std::size_t cases);
SuiteResult poly_schouten_jacobi(std::uint64_t seed, std::size_t cases);
SuiteResult poly_schouten_decomposable(std::uint64_t seed, std::size_t cases);
SuiteResult form_bracket_antisymmetry(std::uint64_t seed, std::size_t cases);
SuiteResult form_bracket_jacobi(std::uint64_t seed, std::size_t cases);
SuiteResult ce_d_squared(std::uint64_t seed, std::size_t cases);
SuiteResult double_bracket_identity(std::uint64_t seed, std::size_t cases);
SuiteResult dual_adjointness(std::uint64_t seed, std::size_t cases);
SuiteResult rank_transpose(std::uint64_t seed, std::size_t cases);
SuiteResult rank_minors(std::uint64_t seed, std::size_t cases);
SuiteResult alternating_sum_invariant(std::uint64_t seed, std::size_t cases);
SuiteResult volume_dual_ranks(std::uint64_t seed, std::size_t cases);
SuiteResult poly_d_squared(std::uint64_t seed, std::size_t cases);

/// Every suite above, in order.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, std::size_t cases);

}  // namespace poissonlike::testing
