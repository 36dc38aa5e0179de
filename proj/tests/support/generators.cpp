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

#include "generators.hpp"

namespace poissonlike::testing {

long Gen::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

std::size_t Gen::index(std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng_);
}

Rational Gen::small_rational() {
  Rational q(integer(-5, 5), integer(1, 3));
  q.canonicalize();
  return q;
}

ParamPoly Gen::param_poly(const std::vector<std::string>& names, std::size_t terms) {
  ParamPoly p;
  const std::size_t count = static_cast<std::size_t>(integer(0, static_cast<long>(terms)));
  for (std::size_t t = 0; t < count; ++t) {
    Monomial m;
    for (const auto& name : names) {
      const long e = integer(0, 2) == 2 ? integer(1, 2) : 0;
      if (e > 0) m = m * Monomial::variable(name, static_cast<std::uint32_t>(e));
    }
    p += ParamPoly::term(small_rational(), m);
  }
  return p;
}

Assignment Gen::assignment(const std::vector<std::string>& names) {
  Assignment a;
  for (const auto& name : names) a[name] = small_rational();
  return a;
}

ExteriorElement Gen::exterior(Space space, std::size_t n, std::size_t k) {
  return exterior(space, n, k, {});
}

ExteriorElement Gen::exterior(Space space, std::size_t n, std::size_t k,
                              const std::vector<std::string>& names) {
  ExteriorElement e(space, n);
  for (const auto& idx : basis_enum(n, k)) {
    if (integer(0, 2) == 0) continue;
    e.add_term(idx, names.empty() ? ParamPoly(integer(-3, 3)) : param_poly(names, 2));
  }
  return e;
}

PolyMultiVector Gen::poly(Space side, std::size_t n, std::size_t k, std::size_t m,
                          std::size_t terms) {
  PolyMultiVector v(side, n);
  const auto basis = basis_Ckm(n, k, m);
  if (basis.empty()) return v;
  for (std::size_t t = 0; t < terms; ++t) v.add_term(basis[index(basis.size())], ParamPoly(integer(-3, 3)));
  return v;
}

RationalMatrix Gen::matrix(std::size_t rows, std::size_t cols, long lo, long hi, int zero_bias) {
  RationalMatrix m(rows, std::vector<Rational>(cols));
  for (auto& row : m) {
    for (auto& e : row) e = integer(0, zero_bias) == 0 ? Rational(integer(lo, hi)) : Rational(0);
  }
  return m;
}

std::string fixture_path(const std::string& name) { return std::string(POISSONLIKE_FIXTURE_DIR) + "/" + name; }

LieAlgebra load_fixture(const std::string& name) { return LieAlgebra::load(fixture_path(name)); }

std::vector<std::string> algebra_fixtures() {
  return {"type1.json", "type2.json", "type8.json", "type12.json", "abelian3.json", "abelian4.json"};
}

}  // namespace poissonlike::testing
