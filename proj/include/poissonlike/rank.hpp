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
#include <vector>

#include "poissonlike/rational.hpp"

namespace poissonlike {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Exact rank by fraction-free (Bareiss) elimination. The matrix is taken by
/// value and destroyed.
std::size_t bareiss_rank(IntegerMatrix m);

/// Clears denominators row by row, then runs bareiss_rank.
std::size_t exact_rank(const RationalMatrix& m);

RationalMatrix transpose(const RationalMatrix& m);

/// Plain product of rational matrices; columns of `a` must match rows of `b`.
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

bool is_zero(const RationalMatrix& m);

}  // namespace poissonlike
