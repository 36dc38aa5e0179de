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

#include <doctest.h>

#include "generators.hpp"
#include "poissonlike/errors.hpp"
#include "poissonlike/lie_algebra.hpp"
#include "poissonlike/literal.hpp"

using namespace poissonlike;
using poissonlike::testing::load_fixture;

namespace {

ExteriorElement Y(const char* text, std::size_t n = 4) { return parse_exterior(text, Space::tangent, n); }

}  // namespace

TEST_CASE("Type[1] fixture") {
  const LieAlgebra L = load_fixture("type1.json");
  CHECK(L.dim() == 4);
  CHECK(L.structure().size() == 2);
  CHECK(L.parameters().empty());
  CHECK(L.structure_constant(2, 4, 1) == ParamPoly(1L));
  CHECK(L.structure_constant(4, 2, 1) == ParamPoly(-1L));
  CHECK(L.structure_constant(3, 4, 2) == ParamPoly(1L));
  CHECK(L.structure_constant(1, 2, 3).is_zero());
}

TEST_CASE("empty bracket list gives an abelian algebra") {
  const LieAlgebra L = LieAlgebra::parse(R"({"dim": 3, "brackets": []})");
  CHECK(L.dim() == 3);
  CHECK(L.structure().empty());
  CHECK(validate(L).empty());
  CHECK(bracket(L, Y("y1", 3), Y("y2", 3)).is_zero());
}

TEST_CASE("Type[8] carries one parameter") {
  const LieAlgebra L = load_fixture("type8.json");
  CHECK(L.dim() == 5);
  CHECK(L.parameters() == std::vector<std::string>{"u"});
  CHECK(L.bracket_basis(4, 5) == Y("u*y4", 5));
}

TEST_CASE("malformed algebra files") {
  CHECK_THROWS_AS(LieAlgebra::parse(R"({"dim": 2, "brackets": [{"i":1,"j":2,"rhs":[]}, {"i":1,"j":2,"rhs":[]}]})"),
                  ParseError);
  CHECK_THROWS_AS(LieAlgebra::parse(R"({"dim": 2, "brackets": [{"i":1,"j":3,"rhs":[]}]})"), IndexOutOfRange);
  CHECK_THROWS_AS(LieAlgebra::parse(R"({"dim": 2, "brackets": [{"i":1,"j":2,"rhs":[{"k":3,"c":"1"}]}]})"),
                  IndexOutOfRange);
  CHECK_THROWS_AS(LieAlgebra::parse(R"({"dim": 2, "brackets": [{"i":1,"j":2,"rhs":[{"k":1,"c":"b"}]}]})"),
                  ParseError);
  CHECK_THROWS_AS(LieAlgebra::parse(R"({"dim": 0})"), ParseError);
  CHECK_THROWS_AS(LieAlgebra::parse(R"({"brackets": []})"), ParseError);
  CHECK_THROWS_AS(LieAlgebra::load("/nonexistent/algebra.json"), ParseError);
  try {
    (void)LieAlgebra::parse("{\n  \"dim\": 2,\n  oops\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("validate") {
  CHECK(validate(load_fixture("type1.json")).empty());
  CHECK(validate(load_fixture("type2.json")).empty());
  for (const auto& name : poissonlike::testing::algebra_fixtures()) {
    CAPTURE(name);
    CHECK(validate(load_fixture(name)).empty());
  }
  LieAlgebra bad(3, "bad");
  bad.set_bracket(1, 2, {{3, ParamPoly(1L)}});
  bad.set_bracket(1, 3, {{1, ParamPoly(1L)}});
  const auto report = validate(bad);
  REQUIRE(report.size() == 1);
  CHECK(report[0].i == 1);
  CHECK(report[0].j == 2);
  CHECK(report[0].k == 3);
  CHECK(report[0].residual == Y("-y3", 3));
}

TEST_CASE("bracket") {
  const LieAlgebra t1 = load_fixture("type1.json");
  CHECK(bracket(t1, Y("y2"), Y("y4")) == Y("y1"));
  CHECK(bracket(t1, Y("y4"), Y("y2")) == Y("-y1"));
  CHECK(bracket(t1, Y("y1"), Y("y1")).is_zero());
  CHECK(bracket(t1, Y("y2 + y3"), Y("2*y4")) == Y("2*y1 + 2*y2"));
  const LieAlgebra t2 = load_fixture("type2.json");
  CHECK(bracket(t2, Y("y1"), Y("y4")) == Y("a*y1"));
  CHECK(bracket(t2, Y("y3"), Y("y4")) == Y("y2 + y3"));
  CHECK_THROWS_AS(bracket(t1, Y("y1^y2"), Y("y3")), DegreeMismatch);
  CHECK_THROWS_AS(bracket(t1, parse_exterior("z1", Space::cotangent, 4), Y("y3")), SpaceMismatch);
}

TEST_CASE("JSON round trip") {
  const LieAlgebra t2 = load_fixture("type2.json");
  const LieAlgebra back = LieAlgebra::from_json(t2.to_json());
  CHECK(back.to_json() == t2.to_json());
  CHECK(back.parameters() == t2.parameters());
  CHECK(back.structure_constant(3, 4, 3) == ParamPoly(1L));
}
