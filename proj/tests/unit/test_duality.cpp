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
#include "poissonlike/duality.hpp"
#include "poissonlike/errors.hpp"
#include "poissonlike/literal.hpp"
#include "poissonlike/schouten.hpp"

using namespace poissonlike;
using poissonlike::testing::load_fixture;

namespace {

ExteriorElement Y(const char* text, std::size_t n = 4) { return parse_exterior(text, Space::tangent, n); }
ExteriorElement Z(const char* text, std::size_t n = 4) { return parse_exterior(text, Space::cotangent, n); }

const char* kType1Pi = "c1*y1^y2 + c2*y1^y3 + c3*y1^y4 + c4*y2^y3";
const char* kType2Pi = "C1*y1^y2 + C2*y1^y3 + C4*y2^y3 + C5*y2^y4";

ExteriorElement row(const OperatorMatrix& m, std::size_t r, std::size_t n = 4) {
  ExteriorElement e(m.space(), n);
  for (const auto& [b, c] : m.row_image(r)) e.add_term(b.idx, c);
  return e;
}

const OperatorMatrix& at_degree(const std::vector<OperatorMatrix>& ms, int q) {
  for (const auto& m : ms) {
    if (m.domain_degree() == q) return m;
  }
  FAIL("no matrix at degree " << q);
  return ms.front();
}

std::vector<ExteriorElement> images(const std::vector<OperatorMatrix>& ms, int q) {
  const OperatorMatrix& m = at_degree(ms, q);
  std::vector<ExteriorElement> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(row(m, r));
  return out;
}

std::vector<OperatorMatrix> substituted(const std::vector<OperatorMatrix>& ms, const Assignment& a) {
  std::vector<OperatorMatrix> out;
  for (const auto& m : ms) out.push_back(m.substitute(a));
  return out;
}

}  // namespace

TEST_CASE("dual_operator on Type[1]") {
  const LieAlgebra L = load_fixture("type1.json");
  const auto delta = dual_operator(L, Y(kType1Pi));
  REQUIRE(delta.size() == 4);
  CHECK(delta.front().label() == "delta(1,0)");
  CHECK(delta.front().is_zero());
  CHECK(delta.front().space() == Space::cotangent);

  const auto two = images(delta, 2);
  // adjointness with d_pi(y4) = c2*y1^y2 + c4*y1^y3 forces c2 here, not c4
  CHECK(two[0] == Z("-c3*z3 + c2*z4"));
  CHECK(two[1] == Z("c4*z4"));
  for (std::size_t i = 2; i < 6; ++i) CHECK(two[i].is_zero());

  const auto three = images(delta, 3);
  CHECK(three[0] == Z("c4*z2^z4 - c2*z3^z4"));
  CHECK(three[1] == Z("-c3*z3^z4"));
  CHECK(three[2].is_zero());
  CHECK(three[3].is_zero());
  CHECK(images(delta, 4)[0].is_zero());
}

TEST_CASE("dual_operator is the transpose of d_pi") {
  const LieAlgebra L = load_fixture("type2.json");
  const ExteriorElement pi = Y(kType2Pi);
  const GradedComplex c = tangent_complex(L, pi);
  for (const auto& m : dual_operator(L, pi)) {
    if (m.codomain_degree() == 0) continue;
    const ComplexSlot* s = c.find(m.codomain_degree() - 1);
    REQUIRE(s != nullptr);
    REQUIRE(s->outgoing.has_value());
    const OperatorMatrix& dp = *s->outgoing;
    REQUIRE(dp.rows() == m.cols());
    REQUIRE(dp.cols() == m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t k = 0; k < m.cols(); ++k) CHECK(m.at(r, k) == dp.at(k, r));
    }
  }
}

TEST_CASE("dual_apply agrees with the defining pairing") {
  const LieAlgebra L = load_fixture("type1.json");
  const ExteriorElement pi = Y(kType1Pi);
  CHECK(dual_apply(L, pi, Z("z1^z2")) == Z("-c3*z3 + c2*z4"));
  CHECK(dual_apply(L, pi, Z("z1 + z1^z2^z3")) == Z("c4*z2^z4 - c2*z3^z4"));
  CHECK_THROWS_AS(dual_apply(L, Y("y1"), Z("z1")), DegreeMismatch);
  CHECK_THROWS_AS(dual_operator(L, Y("y1 + y1^y2")), DegreeMismatch);
  CHECK_THROWS_AS(dual_operator(L, Z("z1^z2")), SpaceMismatch);
}

TEST_CASE("Type[2] case 1: delta, delta o delta, d o delta, delta o d") {
  const LieAlgebra L = load_fixture("type2.json");
  const Assignment a{{"a", -1}};
  const auto delta = substituted(dual_operator(L, Y(kType2Pi)), a);
  const auto d = substituted(ce_d_matrices(L), a);

  CHECK(images(delta, 4)[0] == Z("-C5*z1^z3^z4"));
  const auto three = images(delta, 3);
  CHECK(three[0] == Z("-2*C4*z1^z4 - C2*z3^z4"));
  CHECK(three[1] == Z("-2*C5*z1^z4"));
  const auto two = images(delta, 2);
  CHECK(two[0] == Z("C2*z4 - C5*z1"));
  CHECK(two[3] == Z("2*C4*z4 - C5*z3"));
  CHECK(two[4] == Z("C5*z4"));

  for (const auto& m : compose(delta, delta, "delta", "delta")) CHECK(m.is_zero());

  const auto d_after_delta = compose(delta, d, "d", "delta");
  const auto two_dd = images(d_after_delta, 2);
  CHECK(two_dd[0] == Z("-C5*z1^z4"));
  CHECK(two_dd[3] == Z("C5*z3^z4"));
  for (std::size_t i : {1, 2, 4, 5}) CHECK(two_dd[i].is_zero());
  for (const auto& e : images(d_after_delta, 3)) CHECK(e.is_zero());

  const auto delta_after_d = compose(d, delta, "delta", "d");
  const auto one = images(delta_after_d, 1);
  CHECK(one[1] == Z("-C5*z4"));
  CHECK(one[0].is_zero());
  const auto deg2 = images(delta_after_d, 2);
  for (const auto& e : deg2) CHECK(e.is_zero());
  const auto deg3 = images(delta_after_d, 3);
  CHECK(deg3[0] == Z("C5*z1^z3^z4"));
  CHECK(at_degree(delta_after_d, 1).label() == "(delta o d)(1,1)");
}

TEST_CASE("compose shape errors") {
  const LieAlgebra L = load_fixture("type1.json");
  const auto delta = dual_operator(L, Y(kType1Pi));
  const auto d = ce_d_matrices(L);
  CHECK_THROWS_AS(compose({d.back()}, {d.front()}, "d", "d"), ShapeMismatch);
  CHECK(compose({}, delta, "delta", "d").empty());
}

TEST_CASE("double_complex_report") {
  const LieAlgebra L = load_fixture("type1.json");
  const ExteriorElement pi = Y(kType1Pi);
  const struct {
    Assignment a;
    std::size_t r;
  } cases[] = {{{{"c1", 1}, {"c2", 0}, {"c3", 0}, {"c4", 0}}, 0},
               {{{"c1", 0}, {"c2", 1}, {"c3", 0}, {"c4", 0}}, 1},
               {{{"c1", 0}, {"c2", 0}, {"c3", 1}, {"c4", 1}}, 2}};
  for (const auto& [a, r] : cases) {
    const DoubleComplexReport rep = double_complex_report(L, pi, a);
    CHECK(rep.betti_delta.dims == std::vector<std::size_t>{1, 4, 6, 4, 1});
    CHECK(rep.betti_delta.ranks == std::vector<std::size_t>{0, 0, r, r, 0});
    CHECK(rep.betti_delta.betti == std::vector<std::size_t>{1, 4 - r, 2 * (3 - r), 4 - r, 1});
    CHECK(rep.betti_d.betti == std::vector<std::size_t>{1, 2, 2, 2, 1});
    for (const auto& m : rep.d_after_delta) CHECK(m.is_zero());
    for (const auto& m : rep.delta_after_d) CHECK(m.is_zero());
    for (const auto& m : rep.delta_squared) CHECK(m.is_zero());
    // same ranks as d_pi in the same degree order, plus L^0
    const BettiReport dp = betti_sequence(tangent_complex(L, pi), a);
    for (std::size_t i = 0; i < dp.betti.size(); ++i) CHECK(rep.betti_delta.betti[i + 1] == dp.betti[i]);
  }
}

TEST_CASE("abelian algebra: delta is zero") {
  const LieAlgebra L = load_fixture("abelian4.json");
  const ExteriorElement pi = Y("y1^y2 + 3*y3^y4");
  for (const auto& m : dual_operator(L, pi)) CHECK(m.is_zero());
  const DoubleComplexReport rep = double_complex_report(L, pi, {});
  CHECK(rep.betti_delta.betti == rep.betti_delta.dims);
}

TEST_CASE("delta squared vanishes when d_pi squared does") {
  const LieAlgebra L = load_fixture("type1.json");
  for (const auto& m : compose(dual_operator(L, Y(kType1Pi)), dual_operator(L, Y(kType1Pi)), "delta", "delta")) {
    CHECK(m.is_zero());
  }
}
