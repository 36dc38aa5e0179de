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

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace poissonlike {

/// Exact rational number, always kept canonical (reduced, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `-3`, `5/2`, `+7`. Throws ParseError on anything else or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: `-3`, `5/2`.
std::string to_string(const Rational& q);

/// Parameter name -> value.
using Assignment = std::map<std::string, Rational>;

/// Parses `name=value` pairs such as `c3=1` or `u=-1/2`.
std::pair<std::string, Rational> parse_assignment_item(std::string_view text);

}  // namespace poissonlike
