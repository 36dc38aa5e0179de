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
#include "poissonlike/literal.hpp"
#include "poissonlike/polyfield.hpp"
#include "poissonlike/schouten.hpp"

using namespace poissonlike;
using poissonlike::testing::fixture_path;
using poissonlike::testing::load_fixture;

namespace {

PolyMultiVector T(const char* text, std::size_t n = 4) { return parse_poly_multivector(text, Space::tangent, n); }
PolyMultiVector F(const char* text, std::size_t n = 4) { return parse_poly_multivector(text, Space::cotangent, n); }

const char* kMyTgt = "(x1 + C7*x2)*x4*y1^y2 - C7*x2*x4*y1^y3 + x2*x4*y2^y3 - x4^2*y3^y4";

const std::vector<ChainSpace> kChain{{0, 1}, {1, 2}, {2, 3}, {3, 4}};

std::vector<std::size_t> ranks(const std::vector<OperatorMatrix>& ms, const Assignment& a) {
  std::vector<std::size_t> out;
  for (const auto& m : ms) out.push_back(rank(m, a));
  return out;
}

}  // namespace

TEST_CASE("dim_Ckm") {
  CHECK(dim_Ckm(4, 1, 2) == 24);
  CHECK(dim_Ckm(4, 5, 5) == 0);
  CHECK(dim_Ckm(4, 3, 0) == 20);
  CHECK(dim_Ckm(4, -1, 2) == 0);
  CHECK(dim_Ckm(4, 0, 1) == 4);
  CHECK(dim_Ckm(4, 2, 3) == 40);
  CHECK(dim_Ckm(4, 3, 4) == 20);
}

TEST_CASE("basis_Ckm") {
  const auto b = basis_Ckm(2, 0, 1);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == BasisElement{{0, 0}, MultiIndex{1}});
  CHECK(b[1] == BasisElement{{0, 0}, MultiIndex{2}});
  CHECK(basis_Ckm(4, 1, 2).size() == 24);
  CHECK(basis_Ckm(4, 2, 2).size() == 60);
  CHECK(basis_Ckm(4, 2, 5).empty());
  CHECK(monomial_exponents(3, 2).size() == 6);
  CHECK(monomial_exponents(3, 2).front() == std::vector<unsigned>{2, 0, 0});
}

TEST_CASE("poly_schouten") {
  CHECK(poly_schouten(T("x2*y1", 2), T("x1*y2", 2)) == T("x2*y2 - x1*y1", 2));
  CHECK(poly_schouten(T("y1^y2"), T("y3^y4")).is_zero());
  CHECK(poly_schouten(T("y1"), T("x1^3*x2", 2 + 2)) == T("3*x1^2*x2"));
  const PolyMultiVector pi = T(kMyTgt).substitute(Assignment{{"C7", 1}});
  CHECK(poly_schouten(pi, pi).is_zero());
  CHECK(poly_schouten(T(kMyTgt), T(kMyTgt)).is_zero());
  CHECK_THROWS_AS(poly_schouten(F("z1"), T("y1")), SideMismatch);
}

TEST_CASE("poly_schouten agrees with the constant-coefficient bracket on an abelian algebra") {
  const LieAlgebra ab = load_fixture("abelian4.json");
  const ExteriorElement a = parse_exterior("y1^y2 + 2*y3", Space::tangent, 4);
  const ExteriorElement b = parse_exterior("y2^y3^y4 - y1", Space::tangent, 4);
  CHECK(poly_schouten(PolyMultiVector::from_exterior(a), PolyMultiVector::from_exterior(b)) ==
        PolyMultiVector::from_exterior(schouten_bracket(ab, a, b)));
}

TEST_CASE("poly_wedge") {
  CHECK(poly_wedge(T(kMyTgt), T(kMyTgt)) == T("-2*(x1 + C7*x2)*x4^3*y1^y2^y3^y4"));
  CHECK(poly_wedge(T("x1*y1"), T("x1*y1")).is_zero());
  CHECK(poly_wedge(T("x1*y1"), T("x2*y2")) == T("x1*x2*y1^y2"));
  CHECK_THROWS_AS(poly_wedge(T("y1"), F("z1")), SideMismatch);
}

TEST_CASE("poly_d") {
  CHECK(poly_d(F("x1")) == F("z1"));
  CHECK(poly_d(F("z3")).is_zero());
  CHECK(poly_d(F("x1*x2*z3")) == F("x2*z1^z3 + x1*z2^z3"));
  CHECK_THROWS_AS(poly_d(T("x1*y1")), SideMismatch);
}

TEST_CASE("poly_d obeys the Leibniz rule on functions") {
  const PolyMultiVector f = F("x1^2*x3 + 2*x2"), g = F("x2*x4 - x1");
  CHECK(poly_d(poly_wedge(f, g)) == poly_wedge(poly_d(f), g) + poly_wedge(f, poly_d(g)));
  // d P = sum dP/dx_i z_i
  CHECK(poly_d(f) == F("2*x1*x3*z1 + 2*z2 + x1^2*z3"));
}

TEST_CASE("volume contraction of fields") {
  CHECK(poly_contract_volume(T("x1*y1")) == F("x1*z2^z3^z4"));
  CHECK(poly_contract_volume(T("x2*y2")) == F("-x2*z1^z3^z4"));
  CHECK_THROWS_AS(poly_contract_volume(F("z1")), SideMismatch);
}

TEST_CASE("d_pi chain of the quadratic tensor") {
  const PolyMultiVector pi = load_tensor_file(fixture_path("mytgt.json"));
  CHECK(pi == T(kMyTgt));
  const Assignment a{{"C7", 1}};
  const auto dpi = poly_dpi_matrices(pi, 2, kChain, a);
  REQUIRE(dpi.size() == 3);
  CHECK(dpi[0].label() == "d_pi[C_0^1->C_1^2]");
  CHECK(dpi[2].rows() == 40);
  CHECK(dpi[2].cols() == 20);
  CHECK(ranks(dpi, a) == std::vector<std::size_t>{3, 15, 10});
  const BettiReport r = betti_sequence(chain_complex("d_pi", Space::tangent, 4, kChain, dpi), a);
  CHECK(r.dims == std::vector<std::size_t>{4, 24, 40, 20});
  CHECK(r.ranks == std::vector<std::size_t>{3, 15, 10, 0});
  CHECK(r.betti == std::vector<std::size_t>{1, 6, 15, 10});

  const auto delta = volume_dual_matrices(pi, 2, kChain, a);
  CHECK(delta[0].label() == "delta[C^3_0->C^2_1]");
  CHECK(ranks(delta, a) == std::vector<std::size_t>{3, 15, 10});
}

TEST_CASE("zero tensor gives zero matrices") {
  const PolyMultiVector zero(Space::tangent, 4);
  for (const auto& m : poly_dpi_matrices(zero, 2, kChain, {})) CHECK(m.is_zero());
  for (const auto& m : volume_dual_matrices(zero, 2, kChain, {})) CHECK(m.is_zero());
  const auto dpi = poly_dpi_matrices(zero, 2, kChain, {});
  const BettiReport r = betti_sequence(chain_complex("d_pi", Space::tangent, 4, kChain, dpi), {});
  CHECK(r.betti == std::vector<std::size_t>{4, 24, 40, 20});
}

TEST_CASE("volume dual on a single term matches the definition") {
  const PolyMultiVector pi = T(kMyTgt).substitute(Assignment{{"C7", 1}});
  const std::vector<ChainSpace> chain{{0, 1}, {1, 2}};
  const auto delta = volume_dual_matrices(pi, 2, chain, {});
  // delta <Vol, y1> = <Vol, d_pi y1>
  const PolyMultiVector vol_y1 = poly_contract_volume(T("y1"));
  const PolyMultiVector want = poly_contract_volume(poly_schouten(pi, T("y1")));
  const OperatorMatrix& m = delta[0];
  std::size_t row = m.rows();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (PolyMultiVector::monomial(Space::cotangent, 4, m.domain()[r].x, m.domain()[r].idx) == vol_y1) row = r;
  }
  REQUIRE(row < m.rows());
  PolyMultiVector got(Space::cotangent, 4);
  for (const auto& [b, c] : m.row_image(row)) got.add_term(b, c);
  CHECK(got == want);
}

TEST_CASE("d_pi errors") {
  const PolyMultiVector bad = T("x1*y1^y2 + x2*y1^y3");
  CHECK_THROWS_AS(poly_dpi_matrices(T("x4^2*y1^y2 + x1^2*y3^y4"), 2, kChain, {}), NotAComplex);
  CHECK_THROWS_AS(poly_dpi_matrices(T(kMyTgt), 2, {{0, 1}, {2, 2}}, {{"C7", 1}}), DegreeMismatch);
  CHECK_THROWS_AS(poly_dpi_matrices(bad, 2, kChain, {}), DegreeMismatch);
  CHECK(poly_dpi_matrices(T(kMyTgt), 2, kChain, {})[1].parameters() == std::set<std::string>{"C7"});
}

TEST_CASE("general_param_tensor") {
  CHECK(general_param_tensor(4, 2, 2).parameters().size() == 60);
  CHECK(general_param_tensor(2, 2, 2).parameters().size() == 3);
  CHECK(general_param_tensor(4, 0, 2).parameters().size() == 6);
  const PolyMultiVector g = general_param_tensor(4, 2, 2);
  CHECK(g.coefficient(BasisElement{{1, 0, 0, 1}, MultiIndex{1, 2}}) == ParamPoly::parameter("C4"));
  CHECK(g.coefficient(BasisElement{{0, 1, 0, 1}, MultiIndex{1, 2}}) == ParamPoly::parameter("C7"));
  CHECK(g.coefficient(BasisElement{{0, 1, 0, 1}, MultiIndex{2, 3}}) == ParamPoly::parameter("C37"));
  CHECK(g.coefficient(BasisElement{{0, 0, 0, 2}, MultiIndex{3, 4}}) == ParamPoly::parameter("C60"));
  CHECK(g.coefficient(BasisElement{{2, 0, 0, 0}, MultiIndex{1, 2}}) == ParamPoly::parameter("C1"));
}

TEST_CASE("poisson_system") {
  const PoissonSystem s = poisson_system(general_param_tensor(4, 2, 2));
  CHECK(s.target_dim == 80);
  CHECK(s.equations.size() <= 80);
  CHECK_FALSE(s.equations.empty());
  CHECK(poisson_system(general_param_tensor(2, 2, 2)).equations.empty());
  CHECK(poisson_system(general_param_tensor(2, 2, 2)).target_dim == 0);
}

TEST_CASE("the displayed solution satisfies every equation") {
  std::map<std::string, ParamPoly> sol;
  for (int i = 1; i <= 60; ++i) sol["C" + std::to_string(i)] = ParamPoly(0L);
  sol["C4"] = ParamPoly(1L);
  sol["C37"] = ParamPoly(1L);
  sol["C7"] = ParamPoly::parameter("C7");
  // C17 = C7 (C14 - C37) / C4 and C20 = -(C7 C40 - C10 C14 + C10 C37) / C4 at C4 = 1
  sol["C17"] = ParamPoly::parse("C7*(0 - 1)");
  sol["C20"] = ParamPoly::parse("-(C7*0 - 0*0 + 0*1)");
  sol["C60"] = ParamPoly(-1L);
  const PolyMultiVector pi = general_param_tensor(4, 2, 2).substitute(sol);
  CHECK(pi == T(kMyTgt));
  for (const auto& e : poisson_system(general_param_tensor(4, 2, 2)).equations) {
    CHECK(e.equation.substitute(sol).is_zero());
  }
}

TEST_CASE("de Rham chain is exact") {
  const std::vector<ChainSpace> chain{{3, 0}, {2, 1}, {1, 2}, {0, 3}};
  const auto d = poly_d_matrices(4, chain);
  const BettiReport r = betti_sequence(chain_complex("d", Space::cotangent, 4, chain, d), {});
  CHECK(r.dims == std::vector<std::size_t>{20, 40, 24, 4});
  CHECK(r.betti == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK_THROWS_AS(poly_d_matrices(4, {{0, 1}, {1, 2}}), DegreeMismatch);
}

TEST_CASE("tensor files") {
  const PolyMultiVector pi = T(kMyTgt);
  CHECK(parse_tensor_json(tensor_to_json(pi)) == pi);
  CHECK(parse_tensor_text(R"({"n":2,"side":"tangent","terms":[{"x":[1,0],"idx":[2,1],"c":"3"}]})") ==
        T("-3*x1*y1^y2", 2));
  CHECK_THROWS_AS(parse_tensor_text(R"({"n":2,"terms":[{"x":[1,0],"idx":[1,1],"c":"3"}]})"), ParseError);
  CHECK_THROWS_AS(parse_tensor_text(R"({"n":2,"terms":[{"x":[1,0,0],"idx":[1],"c":"3"}]})"), IndexOutOfRange);
  CHECK_THROWS_AS(parse_tensor_text(R"({"n":2,"side":"sideways"})"), ParseError);
  CHECK_THROWS_AS(load_tensor_file("/nonexistent.json"), ParseError);
  try {
    (void)parse_tensor_text("{\n\"n\": 2,\n\"terms\": [\n  oops ]}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("field bookkeeping") {
  const PolyMultiVector v = T("x1*y1 + x2^2*y1^y2");
  CHECK(v.bidegrees() == std::set<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 2}});
  CHECK(PolyMultiVector::coordinate(Space::tangent, 4, 3) == T("x3"));
  CHECK_THROWS_AS(PolyMultiVector::coordinate(Space::tangent, 4, 5), IndexOutOfRange);
  PolyMultiVector w(Space::tangent, 4);
  CHECK_THROWS_AS(w.add_term(BasisElement{{0, 0, 0}, MultiIndex{1}}, ParamPoly(1L)), IndexOutOfRange);
  CHECK_THROWS_AS(w += F("z1"), SideMismatch);
  CHECK(chain_space_label(Space::tangent, {1, 2}) == "C_1^2");
  CHECK(chain_space_label(Space::cotangent, {1, 2}) == "C^2_1");
}
