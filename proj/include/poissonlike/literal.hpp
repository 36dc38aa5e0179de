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
#include <string_view>

#include "poissonlike/exterior.hpp"
#include "poissonlike/polyfield.hpp"

namespace poissonlike {

/// Parses an element literal such as `c1*y1^y2 + (c2 - 1/2)*y3^y4` or
/// `z1^z2 - u*z3^z4`. Generators are `y<i>` (tangent) or `z<i>`
/// (cotangent), other identifiers are parameters. `*` multiplies, `^` wedges
/// except that `p^<integer>` is a power when p has exterior degree 0.
/// Throws ParseError (including a generator of the other space or a
/// coordinate `x<i>`), IndexOutOfRange for indices beyond n.
ExteriorElement parse_exterior(std::string_view text, Space space, std::size_t n);

/// Same grammar plus coordinates `x<i>`: `x1*x4*y1^y2 - x4^2*y3^y4`.
PolyMultiVector parse_poly_multivector(std::string_view text, Space side, std::size_t n);

}  // namespace poissonlike
