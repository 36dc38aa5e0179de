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

#include "poissonlike/report.hpp"

#include <algorithm>
#include <sstream>

#include "poissonlike/errors.hpp"

namespace poissonlike {

using nlohmann::json;

namespace {

Space space_from_name(const std::string& s) {
  if (s == "tangent") return Space::tangent;
  if (s == "cotangent") return Space::cotangent;
  throw ParseError("unknown space '" + s + "'");
}

std::string image_text(const OperatorMatrix& m, std::size_t r) {
  std::string out;
  bool first = true;
  for (const auto& [b, c] : m.row_image(r)) {
    ParamPoly coef = c;
    bool negative = coef.term_count() == 1 && coef.terms().begin()->second < 0;
    if (negative) coef = -coef;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string basis = b.to_string(m.space());
    if (coef == ParamPoly(1L)) {
      out += basis;
    } else {
      std::string ct = coef.needs_parentheses() ? "(" + coef.to_string() + ")" : coef.to_string();
      out += basis == "1" ? ct : ct + "*" + basis;
    }
  }
  return first ? "0" : out;
}

}  // namespace

json element_to_json(const ExteriorElement& e) {
  json terms = json::array();
  for (const auto& [idx, c] : e.terms()) terms.push_back({{"idx", idx.indices()}, {"c", c.to_string()}});
  return {{"space", space_name(e.space())}, {"n", e.ambient_dim()}, {"terms", terms}};
}

ExteriorElement element_from_json(const json& j) {
  try {
    ExteriorElement out(space_from_name(j.at("space").get<std::string>()), j.at("n").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
      out.add_term(MultiIndex(t.at("idx").get<std::vector<unsigned>>()),
                   ParamPoly::parse(t.at("c").get<std::string>()));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed element JSON: ") + e.what());
  }
}

json matrix_to_json(const OperatorMatrix& m) {
  json domain = json::array();
  json codomain = json::array();
  for (const auto& b : m.domain()) domain.push_back(b.to_string(m.space()));
  for (const auto& b : m.codomain()) codomain.push_back(b.to_string(m.space()));
  json entries = json::array();
  for (const auto& row : m.entries()) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    entries.push_back(r);
  }
  return {{"label", m.label()},
          {"space", space_name(m.space())},
          {"domain_degree", m.domain_degree()},
          {"codomain_degree", m.codomain_degree()},
          {"domain", domain},
          {"codomain", codomain},
          {"entries", entries}};
}

json betti_to_json(const BettiReport& r) {
  json windows = json::array();
  for (const auto& w : r.windows) {
    windows.push_back({{"k", w.k}, {"first_grade", w.first_grade}, {"last_grade", w.last_grade}});
  }
  return {{"name", r.name},
          {"p", r.p},
          {"degrees", r.degrees},
          {"spaces", r.space_labels},
          {"matrices", r.matrix_labels},
          {"dims", r.dims},
          {"ranks", r.ranks},
          {"betti", r.betti},
          {"alt_betti_sum", r.alt_betti_sum},
          {"alt_dim_sum", r.alt_dim_sum},
          {"windows", windows}};
}

BettiReport betti_from_json(const json& j) {
  try {
    BettiReport r;
    r.name = j.at("name").get<std::string>();
    r.p = j.at("p").get<int>();
    r.degrees = j.at("degrees").get<std::vector<int>>();
    r.space_labels = j.at("spaces").get<std::vector<std::string>>();
    r.matrix_labels = j.at("matrices").get<std::vector<std::string>>();
    r.dims = j.at("dims").get<std::vector<std::size_t>>();
    r.ranks = j.at("ranks").get<std::vector<std::size_t>>();
    r.betti = j.at("betti").get<std::vector<std::size_t>>();
    r.alt_betti_sum = j.at("alt_betti_sum").get<long>();
    r.alt_dim_sum = j.at("alt_dim_sum").get<long>();
    for (const auto& w : j.at("windows")) {
      r.windows.push_back({w.at("k").get<long>(), w.at("first_grade").get<int>(), w.at("last_grade").get<int>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed Betti report JSON: ") + e.what());
  }
}

json double_complex_to_json(const DoubleComplexReport& r) {
  json residuals = json::array();
  for (const auto* family : {&r.d_after_delta, &r.delta_after_d}) {
    for (const auto& m : *family) residuals.push_back(matrix_to_json(m));
  }
  json squared = json::array();
  for (const auto& m : r.delta_squared) squared.push_back(matrix_to_json(m));
  return {{"bettiD", betti_to_json(r.betti_d)},
          {"bettiDelta", betti_to_json(r.betti_delta)},
          {"anticommutator_residuals", residuals},
          {"delta_squared", squared}};
}

json jacobi_to_json(const std::vector<JacobiViolation>& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    out.push_back({{"triple", {v.i, v.j, v.k}}, {"residual", element_to_json(v.residual)}});
  }
  return out;
}

json poisson_system_to_json(const PoissonSystem& s) {
  json eqs = json::array();
  for (const auto& e : s.equations) {
    eqs.push_back({{"target", e.target.to_string(Space::tangent)}, {"equation", e.equation.to_string()}});
  }
  return {{"target_dim", s.target_dim}, {"equation_count", s.equations.size()}, {"equations", eqs}};
}

std::string betti_table(const BettiReport& r) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> degree{"degree"};
  std::vector<std::string> space{"space"};
  std::vector<std::string> dim{"Dim"};
  std::vector<std::string> rank{"Rank"};
  std::vector<std::string> betti{"Betti"};
  for (std::size_t i = 0; i < r.degrees.size(); ++i) {
    degree.push_back(std::to_string(r.degrees[i]));
    space.push_back(r.space_labels[i]);
    dim.push_back(std::to_string(r.dims[i]));
    rank.push_back(std::to_string(r.ranks[i]));
    betti.push_back(std::to_string(r.betti[i]));
  }
  rows = {degree, space, dim, rank, betti};
  std::vector<std::size_t> width(degree.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  out << r.name << " (p = " << r.p << ")\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c == 0 ? "" : "  ") << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  out << "alternating sum: Betti " << r.alt_betti_sum << ", Dim " << r.alt_dim_sum
      << (r.alt_betti_sum == r.alt_dim_sum ? " (equal)" : " (DIFFERENT)") << '\n';
  return out.str();
}

std::string matrix_listing(const OperatorMatrix& m) {
  std::ostringstream out;
  out << m.label() << ":\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  " << m.domain()[r].to_string(m.space()) << " -> " << image_text(m, r) << '\n';
  }
  return out.str();
}

}  // namespace poissonlike
