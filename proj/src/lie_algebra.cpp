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

#include "poissonlike/lie_algebra.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "poissonlike/errors.hpp"

namespace poissonlike {

using nlohmann::json;

LieAlgebra::LieAlgebra(std::size_t n, std::string name) : n_(n), name_(std::move(name)) {
  if (n == 0) throw ParseError("algebra dimension must be positive");
}

void LieAlgebra::check_index(unsigned i, const char* what) const {
  if (i == 0 || i > n_) {
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) +
                          " outside 1.." + std::to_string(n_));
  }
}

void LieAlgebra::declare_parameter(std::string name) {
  if (std::find(parameters_.begin(), parameters_.end(), name) == parameters_.end()) {
    parameters_.push_back(std::move(name));
  }
}

void LieAlgebra::set_bracket(unsigned i, unsigned j, std::vector<StructureTerm> rhs) {
  check_index(i, "bracket");
  check_index(j, "bracket");
  if (i == j) throw ParseError("bracket [y" + std::to_string(i) + ",y" + std::to_string(i) +
                               "] is zero by antisymmetry and cannot be set");
  bool negate = i > j;
  if (negate) std::swap(i, j);
  if (structure_.count({i, j}) != 0) {
    throw ParseError("duplicate bracket for pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
  }
  // Merge repeated k and drop zero coefficients.
  std::map<unsigned, ParamPoly> merged;
  for (auto& t : rhs) {
    check_index(t.k, "bracket result");
    merged[t.k] += negate ? -t.c : t.c;
  }
  std::vector<StructureTerm> clean;
  for (auto& [k, c] : merged) {
    if (!c.is_zero()) clean.push_back({k, c});
  }
  structure_.emplace(std::make_pair(i, j), std::move(clean));
}

ParamPoly LieAlgebra::structure_constant(unsigned i, unsigned j, unsigned k) const {
  if (i == j) return {};
  bool negate = i > j;
  auto it = structure_.find(negate ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == structure_.end()) return {};
  for (const auto& t : it->second) {
    if (t.k == k) return negate ? -t.c : t.c;
  }
  return {};
}

ExteriorElement LieAlgebra::bracket_basis(unsigned i, unsigned j) const {
  check_index(i, "bracket");
  check_index(j, "bracket");
  ExteriorElement out(Space::tangent, n_);
  if (i == j) return out;
  bool negate = i > j;
  auto it = structure_.find(negate ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == structure_.end()) return out;
  for (const auto& t : it->second) out.add_term(MultiIndex{t.k}, negate ? -t.c : t.c);
  return out;
}

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

unsigned read_index(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("bracket entry needs integer field '") + key + "'");
  }
  auto v = j.at(key).get<long long>();
  if (v <= 0) throw IndexOutOfRange(std::string("field '") + key + "' must be >= 1");
  return static_cast<unsigned>(v);
}

}  // namespace

LieAlgebra LieAlgebra::from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long long>() <= 0) {
    throw ParseError("algebra file needs a positive integer 'dim'");
  }
  LieAlgebra algebra(static_cast<std::size_t>(j.at("dim").get<long long>()),
                     j.value("name", std::string{}));
  std::set<std::string> declared;
  if (j.contains("parameters")) {
    if (!j.at("parameters").is_array()) throw ParseError("'parameters' must be an array");
    for (const auto& p : j.at("parameters")) {
      if (!p.is_string()) throw ParseError("parameter names must be strings");
      algebra.declare_parameter(p.get<std::string>());
      declared.insert(p.get<std::string>());
    }
  }
  if (j.contains("brackets")) {
    if (!j.at("brackets").is_array()) throw ParseError("'brackets' must be an array");
    for (const auto& b : j.at("brackets")) {
      unsigned i = read_index(b, "i");
      unsigned jj = read_index(b, "j");
      std::vector<StructureTerm> rhs;
      if (b.contains("rhs")) {
        if (!b.at("rhs").is_array()) throw ParseError("'rhs' must be an array");
        for (const auto& t : b.at("rhs")) {
          unsigned k = read_index(t, "k");
          if (!t.contains("c") || !t.at("c").is_string()) {
            throw ParseError("rhs term needs a string coefficient 'c'");
          }
          ParamPoly c = ParamPoly::parse(t.at("c").get<std::string>());
          for (const auto& name : c.parameters()) {
            if (declared.count(name) == 0) {
              throw ParseError("undeclared parameter '" + name + "' in bracket [y" +
                               std::to_string(i) + ",y" + std::to_string(jj) + "]");
            }
          }
          rhs.push_back({k, std::move(c)});
        }
      }
      algebra.set_bracket(i, jj, std::move(rhs));
    }
  }
  return algebra;
}

LieAlgebra LieAlgebra::parse(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), e.what());
  }
  return from_json(j);
}

LieAlgebra LieAlgebra::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

json LieAlgebra::to_json() const {
  json brackets = json::array();
  for (const auto& [pair, rhs] : structure_) {
    if (rhs.empty()) continue;
    json terms = json::array();
    for (const auto& t : rhs) terms.push_back({{"k", t.k}, {"c", t.c.to_string()}});
    brackets.push_back({{"i", pair.first}, {"j", pair.second}, {"rhs", terms}});
  }
  return {{"dim", n_}, {"name", name_}, {"brackets", brackets}, {"parameters", parameters_}};
}

ExteriorElement bracket(const LieAlgebra& algebra, const ExteriorElement& x,
                        const ExteriorElement& y) {
  const std::size_t n = algebra.dim();
  for (const auto* e : {&x, &y}) {
    if (e->space() != Space::tangent || e->ambient_dim() != n) {
      throw SpaceMismatch("Lie bracket needs tangent elements of the algebra's dimension");
    }
    if (!e->is_zero() && e->degree() != std::optional<std::size_t>(1)) {
      throw DegreeMismatch("Lie bracket is defined on degree-1 elements, got " + e->to_string());
    }
  }
  ExteriorElement out(Space::tangent, n);
  for (const auto& [ix, cx] : x.terms()) {
    for (const auto& [iy, cy] : y.terms()) {
      out += (cx * cy) * algebra.bracket_basis(ix.indices()[0], iy.indices()[0]);
    }
  }
  return out;
}

std::vector<JacobiViolation> validate(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  auto nested = [&](unsigned a, unsigned b, unsigned c) {
    // [[y_a, y_b], y_c] = sum_m c^m_ab [y_m, y_c]
    ExteriorElement out(Space::tangent, n);
    for (unsigned m = 1; m <= n; ++m) {
      ParamPoly coef = algebra.structure_constant(a, b, m);
      if (!coef.is_zero()) out += coef * algebra.bracket_basis(m, c);
    }
    return out;
  };
  std::vector<JacobiViolation> report;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      for (unsigned k = j + 1; k <= n; ++k) {
        ExteriorElement r = nested(i, j, k) + nested(j, k, i) + nested(k, i, j);
        if (!r.is_zero()) report.push_back({i, j, k, std::move(r)});
      }
    }
  }
  return report;
}

}  // namespace poissonlike
