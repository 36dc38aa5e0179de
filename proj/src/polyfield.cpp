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

#include "poissonlike/polyfield.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "poissonlike/errors.hpp"

namespace poissonlike {

using nlohmann::json;

namespace {

std::size_t exponent_sum(const std::vector<unsigned>& x) {
  std::size_t s = 0;
  for (unsigned e : x) s += e;
  return s;
}

std::vector<unsigned> add_exponents(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  std::vector<unsigned> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

void check_key(const BasisElement& b, std::size_t n) {
  if (b.x.size() != n) {
    throw IndexOutOfRange("coordinate exponent vector has length " + std::to_string(b.x.size()) +
                          ", expected " + std::to_string(n));
  }
  if (b.idx.max_index() > n) {
    throw IndexOutOfRange("frame index " + b.idx.to_string() + " exceeds dimension " + std::to_string(n));
  }
}

}  // namespace

PolyMultiVector PolyMultiVector::monomial(Space side, std::size_t n, std::vector<unsigned> x,
                                          const MultiIndex& idx, const ParamPoly& c) {
  PolyMultiVector out(side, n);
  out.add_term(BasisElement{std::move(x), idx}, c);
  return out;
}

PolyMultiVector PolyMultiVector::coordinate(Space side, std::size_t n, unsigned i) {
  if (i == 0 || i > n) throw IndexOutOfRange("coordinate x" + std::to_string(i) + " outside 1.." + std::to_string(n));
  std::vector<unsigned> x(n, 0);
  x[i - 1] = 1;
  return monomial(side, n, std::move(x), MultiIndex{});
}

PolyMultiVector PolyMultiVector::from_exterior(const ExteriorElement& e) {
  PolyMultiVector out(e.space(), e.ambient_dim());
  for (const auto& [idx, c] : e.terms()) {
    out.add_term(BasisElement{std::vector<unsigned>(e.ambient_dim(), 0), idx}, c);
  }
  return out;
}

ParamPoly PolyMultiVector::coefficient(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? ParamPoly{} : it->second;
}

void PolyMultiVector::add_term(const BasisElement& b, const ParamPoly& c) {
  if (c.is_zero()) return;
  check_key(b, n_);
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::set<std::pair<std::size_t, std::size_t>> PolyMultiVector::bidegrees() const {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [b, c] : terms_) out.emplace(exponent_sum(b.x), b.idx.degree());
  return out;
}

PolyMultiVector PolyMultiVector::substitute(const Assignment& assignment) const {
  PolyMultiVector out(side_, n_);
  for (const auto& [b, c] : terms_) out.add_term(b, c.substitute(assignment));
  return out;
}

PolyMultiVector PolyMultiVector::substitute(const std::map<std::string, ParamPoly>& replacement) const {
  PolyMultiVector out(side_, n_);
  for (const auto& [b, c] : terms_) out.add_term(b, c.substitute(replacement));
  return out;
}

std::set<std::string> PolyMultiVector::parameters() const {
  std::set<std::string> out;
  for (const auto& [b, c] : terms_) out.merge(c.parameters());
  return out;
}

void PolyMultiVector::require_compatible(const PolyMultiVector& other) const {
  if (side_ != other.side_ || n_ != other.n_) {
    throw SideMismatch(std::string("cannot combine ") + space_name(side_) + " field on R^" +
                       std::to_string(n_) + " with " + space_name(other.side_) + " field on R^" +
                       std::to_string(other.n_));
  }
}

PolyMultiVector& PolyMultiVector::operator+=(const PolyMultiVector& other) {
  require_compatible(other);
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

PolyMultiVector& PolyMultiVector::operator-=(const PolyMultiVector& other) {
  require_compatible(other);
  for (const auto& [b, c] : other.terms_) add_term(b, -c);
  return *this;
}

PolyMultiVector PolyMultiVector::operator-() const {
  PolyMultiVector out(side_, n_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

PolyMultiVector operator*(const ParamPoly& c, const PolyMultiVector& v) {
  PolyMultiVector out(v.side_, v.n_);
  if (c.is_zero()) return out;
  for (const auto& [b, coef] : v.terms_) out.add_term(b, c * coef);
  return out;
}

std::string PolyMultiVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    ParamPoly coef = c;
    bool negative = false;
    if (coef.term_count() == 1 && coef.terms().begin()->second < 0) {
      negative = true;
      coef = -coef;
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit_basis = exponent_sum(b.x) == 0 && b.idx.empty();
    std::string coef_text = coef.needs_parentheses() ? "(" + coef.to_string() + ")" : coef.to_string();
    if (unit_basis) {
      out += coef_text;
    } else if (coef == ParamPoly(1L)) {
      out += b.to_string(side_);
    } else {
      out += coef_text + "*" + b.to_string(side_);
    }
  }
  return out;
}

std::size_t dim_Ckm(std::size_t n, long k, std::size_t m) {
  if (k < 0 || m > n || n == 0) return 0;
  return binomial(n, m) * binomial(n - 1 + static_cast<std::size_t>(k), n - 1);
}

std::vector<std::vector<unsigned>> monomial_exponents(std::size_t n, std::size_t k) {
  std::vector<std::vector<unsigned>> out;
  if (n == 0) return out;
  std::vector<unsigned> cur(n, 0);
  // Depth-first with the largest exponent of the current variable first.
  auto rec = [&](auto&& self, std::size_t var, std::size_t left) -> void {
    if (var + 1 == n) {
      cur[var] = static_cast<unsigned>(left);
      out.push_back(cur);
      return;
    }
    for (std::size_t e = left + 1; e-- > 0;) {
      cur[var] = static_cast<unsigned>(e);
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, k);
  return out;
}

std::vector<BasisElement> basis_Ckm(std::size_t n, std::size_t k, std::size_t m) {
  std::vector<BasisElement> out;
  if (m > n) return out;
  const auto xs = monomial_exponents(n, k);
  for (const auto& idx : basis_enum(n, m)) {
    for (const auto& x : xs) out.push_back({x, idx});
  }
  return out;
}

namespace {

void require_side(const PolyMultiVector& v, Space side, const char* op) {
  if (v.side() != side) {
    throw SideMismatch(std::string(op) + " needs " + space_name(side) + " input, got " +
                       space_name(v.side()));
  }
}

// Adds sum_i (A d/dy_i) ^ d_{x_i} B for single terms A = fa y_K, B = fb y_L.
void add_half_bracket(PolyMultiVector& out, const BasisElement& a, const ParamPoly& ca,
                      const BasisElement& b, const ParamPoly& cb, int outer_sign) {
  const std::size_t r = a.idx.degree();
  const auto& k = a.idx.indices();
  for (std::size_t t = 0; t < r; ++t) {
    const unsigned i = k[t];
    const unsigned e = b.x[i - 1];
    if (e == 0) continue;
    // Right derivative of y_K at position t: (-1)^(r-1-t) y_{K \ k_t}.
    MultiIndex rest = a.idx.without_position(t);
    auto merged = merge_indices(rest, b.idx);
    if (!merged) continue;
    std::vector<unsigned> dx = b.x;
    dx[i - 1] -= 1;
    int sign = outer_sign * merged->sign * (((r - 1 - t) % 2 == 0) ? 1 : -1);
    ParamPoly c = ca * cb * ParamPoly(static_cast<long>(e));
    out.add_term(BasisElement{add_exponents(a.x, dx), merged->index}, sign > 0 ? c : -c);
  }
}

}  // namespace

PolyMultiVector poly_schouten(const PolyMultiVector& a, const PolyMultiVector& b) {
  require_side(a, Space::tangent, "poly_schouten");
  require_side(b, Space::tangent, "poly_schouten");
  if (a.ambient_dim() != b.ambient_dim()) throw SideMismatch("poly_schouten on different ambient dimensions");
  PolyMultiVector out(Space::tangent, a.ambient_dim());
  for (const auto& [ba, ca] : a.terms()) {
    const long r = static_cast<long>(ba.idx.degree());
    for (const auto& [bb, cb] : b.terms()) {
      const long s = static_cast<long>(bb.idx.degree());
      add_half_bracket(out, ba, ca, bb, cb, 1);
      const int sym = (((r - 1) * (s - 1)) % 2 == 0) ? 1 : -1;
      add_half_bracket(out, bb, cb, ba, ca, -sym);
    }
  }
  return out;
}

PolyMultiVector poly_wedge(const PolyMultiVector& a, const PolyMultiVector& b) {
  if (a.side() != b.side() || a.ambient_dim() != b.ambient_dim()) {
    throw SideMismatch("poly_wedge of fields from different spaces");
  }
  PolyMultiVector out(a.side(), a.ambient_dim());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      auto merged = merge_indices(ba.idx, bb.idx);
      if (!merged) continue;
      ParamPoly c = ca * cb;
      out.add_term(BasisElement{add_exponents(ba.x, bb.x), merged->index}, merged->sign > 0 ? c : -c);
    }
  }
  return out;
}

PolyMultiVector poly_d(const PolyMultiVector& omega) {
  require_side(omega, Space::cotangent, "poly_d");
  const std::size_t n = omega.ambient_dim();
  PolyMultiVector out(Space::cotangent, n);
  for (const auto& [b, c] : omega.terms()) {
    for (unsigned i = 1; i <= n; ++i) {
      const unsigned e = b.x[i - 1];
      if (e == 0) continue;
      auto merged = merge_indices(MultiIndex{i}, b.idx);
      if (!merged) continue;
      std::vector<unsigned> dx = b.x;
      dx[i - 1] -= 1;
      ParamPoly coef = c * ParamPoly(static_cast<long>(e));
      out.add_term(BasisElement{std::move(dx), merged->index}, merged->sign > 0 ? coef : -coef);
    }
  }
  return out;
}

PolyMultiVector poly_contract_volume(const PolyMultiVector& u) {
  require_side(u, Space::tangent, "poly_contract_volume");
  const std::size_t n = u.ambient_dim();
  PolyMultiVector out(Space::cotangent, n);
  for (const auto& [b, c] : u.terms()) {
    const int sign = volume_sign(b.idx, n);
    out.add_term(BasisElement{b.x, b.idx.complement(n)}, sign > 0 ? c : -c);
  }
  return out;
}

PolyMultiVector general_param_tensor(std::size_t n, std::size_t h, std::size_t m,
                                     const std::string& prefix) {
  PolyMultiVector out(Space::tangent, n);
  std::size_t j = 0;
  for (const auto& b : basis_Ckm(n, h, m)) {
    out.add_term(b, ParamPoly::parameter(prefix + std::to_string(++j)));
  }
  return out;
}

PoissonSystem poisson_system(const PolyMultiVector& pi) {
  require_side(pi, Space::tangent, "poisson_system");
  PoissonSystem sys;
  const auto bideg = pi.bidegrees();
  if (bideg.size() > 1) throw DegreeMismatch("pi must be bihomogeneous: " + pi.to_string());
  if (bideg.empty()) return sys;
  const auto [h, m] = *bideg.begin();
  if (m >= 1) sys.target_dim = dim_Ckm(pi.ambient_dim(), 2 * static_cast<long>(h) - 1, 2 * m - 1);
  const PolyMultiVector bracket = poly_schouten(pi, pi);
  for (const auto& [b, c] : bracket.terms()) sys.equations.push_back({b, c});
  return sys;
}

std::string chain_space_label(Space side, const ChainSpace& s) {
  if (side == Space::tangent) return "C_" + std::to_string(s.first) + "^" + std::to_string(s.second);
  return "C^" + std::to_string(s.second) + "_" + std::to_string(s.first);
}

namespace {

using PolyMap = std::function<PolyMultiVector(const PolyMultiVector&)>;

OperatorMatrix poly_operator_matrix(const PolyMap& op, Space domain_side, Space codomain_side,
                                    std::size_t n, std::vector<BasisElement> domain,
                                    std::vector<BasisElement> codomain, int domain_degree,
                                    int codomain_degree, std::string label) {
  OperatorMatrix m(std::move(label), codomain_side, domain_degree, codomain_degree, std::move(domain),
                   std::move(codomain));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    PolyMultiVector image = op(PolyMultiVector::monomial(domain_side, n, m.domain()[r].x, m.domain()[r].idx));
    m.set_row(r, image.terms());
  }
  return m;
}

void check_dpi_chain(const PolyMultiVector& pi, std::size_t h, const std::vector<ChainSpace>& chain) {
  require_side(pi, Space::tangent, "d_pi");
  for (const auto& bd : pi.bidegrees()) {
    if (bd.first != h || bd.second != 2) {
      throw DegreeMismatch("pi must have bidegree (" + std::to_string(h) + ",2): " + pi.to_string());
    }
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& [k, m] = chain[i];
    const auto& [k2, m2] = chain[i + 1];
    if (k + h < 1 || k2 != k + h - 1 || m2 != m + 1) {
      throw DegreeMismatch("chain step " + chain_space_label(Space::tangent, chain[i]) + " -> " +
                           chain_space_label(Space::tangent, chain[i + 1]) +
                           " does not follow d_pi");
    }
  }
}

PolyMultiVector checked_pi(const PolyMultiVector& pi, std::size_t h, const std::vector<ChainSpace>& chain,
                           const Assignment& assignment) {
  check_dpi_chain(pi, h, chain);
  PolyMultiVector p = pi.substitute(assignment);
  PolyMultiVector residual = poly_schouten(p, p);
  if (!residual.is_zero()) {
    throw NotAComplex(0, "[pi,pi] = " + residual.to_string() + " for pi = " + p.to_string());
  }
  return p;
}

}  // namespace

std::vector<OperatorMatrix> poly_dpi_matrices(const PolyMultiVector& pi, std::size_t h,
                                              const std::vector<ChainSpace>& chain,
                                              const Assignment& assignment) {
  const PolyMultiVector p = checked_pi(pi, h, chain, assignment);
  const std::size_t n = pi.ambient_dim();
  PolyMap op = [&p](const PolyMultiVector& u) { return poly_schouten(p, u); };
  std::vector<OperatorMatrix> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& from = chain[i];
    const auto& to = chain[i + 1];
    out.push_back(poly_operator_matrix(
        op, Space::tangent, Space::tangent, n, basis_Ckm(n, from.first, from.second),
        basis_Ckm(n, to.first, to.second), static_cast<int>(from.second), static_cast<int>(to.second),
        "d_pi[" + chain_space_label(Space::tangent, from) + "->" + chain_space_label(Space::tangent, to) + "]"));
  }
  return out;
}

std::vector<OperatorMatrix> volume_dual_matrices(const PolyMultiVector& pi, std::size_t h,
                                                 const std::vector<ChainSpace>& chain,
                                                 const Assignment& assignment) {
  const PolyMultiVector p = checked_pi(pi, h, chain, assignment);
  const std::size_t n = pi.ambient_dim();
  // delta(x^e z_J) = eps(I) <Vol, d_pi(x^e y_I)> with I the complement of J.
  PolyMap op = [&p, n](const PolyMultiVector& omega) {
    PolyMultiVector out(Space::cotangent, n);
    for (const auto& [b, c] : omega.terms()) {
      MultiIndex idx = b.idx.complement(n);
      PolyMultiVector u = PolyMultiVector::monomial(Space::tangent, n, b.x, idx,
                                                    volume_sign(idx, n) > 0 ? c : -c);
      out += poly_contract_volume(poly_schouten(p, u));
    }
    return out;
  };
  std::vector<OperatorMatrix> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const ChainSpace from{chain[i].first, n - chain[i].second};
    const ChainSpace to{chain[i + 1].first, n - chain[i + 1].second};
    out.push_back(poly_operator_matrix(
        op, Space::cotangent, Space::cotangent, n, basis_Ckm(n, from.first, from.second),
        basis_Ckm(n, to.first, to.second), static_cast<int>(from.second), static_cast<int>(to.second),
        "delta[" + chain_space_label(Space::cotangent, from) + "->" +
            chain_space_label(Space::cotangent, to) + "]"));
  }
  return out;
}

std::vector<OperatorMatrix> poly_d_matrices(std::size_t n, const std::vector<ChainSpace>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i].first == 0 || chain[i + 1].first + 1 != chain[i].first ||
        chain[i + 1].second != chain[i].second + 1) {
      throw DegreeMismatch("chain step " + chain_space_label(Space::cotangent, chain[i]) + " -> " +
                           chain_space_label(Space::cotangent, chain[i + 1]) + " does not follow d");
    }
  }
  PolyMap op = [](const PolyMultiVector& omega) { return poly_d(omega); };
  std::vector<OperatorMatrix> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& from = chain[i];
    const auto& to = chain[i + 1];
    out.push_back(poly_operator_matrix(
        op, Space::cotangent, Space::cotangent, n, basis_Ckm(n, from.first, from.second),
        basis_Ckm(n, to.first, to.second), static_cast<int>(from.second), static_cast<int>(to.second),
        "d[" + chain_space_label(Space::cotangent, from) + "->" + chain_space_label(Space::cotangent, to) + "]"));
  }
  return out;
}

GradedComplex chain_complex(const std::string& name, Space side, std::size_t n,
                            const std::vector<ChainSpace>& chain,
                            const std::vector<OperatorMatrix>& matrices) {
  GradedComplex c;
  c.name = name;
  c.p = 1;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    ComplexSlot s;
    s.grade = static_cast<int>(i);
    s.dim = dim_Ckm(n, static_cast<long>(chain[i].first), chain[i].second);
    s.space_label = chain_space_label(side, chain[i]);
    if (i < matrices.size()) s.outgoing = matrices[i];
    c.slots.push_back(std::move(s));
  }
  return c;
}

PolyMultiVector parse_tensor_json(const json& j) {
  if (!j.is_object()) throw ParseError("tensor file must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<long long>() <= 0) {
    throw ParseError("tensor file needs a positive integer 'n'");
  }
  const auto n = static_cast<std::size_t>(j.at("n").get<long long>());
  Space side = Space::tangent;
  if (j.contains("side")) {
    const std::string s = j.at("side").is_string() ? j.at("side").get<std::string>() : "";
    if (s == "tangent") {
      side = Space::tangent;
    } else if (s == "cotangent" || s == "form") {
      side = Space::cotangent;
    } else {
      throw ParseError("tensor 'side' must be \"tangent\" or \"cotangent\"");
    }
  }
  PolyMultiVector out(side, n);
  if (!j.contains("terms")) return out;
  if (!j.at("terms").is_array()) throw ParseError("'terms' must be an array");
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("x") || !t.contains("idx") || !t.contains("c")) {
      throw ParseError("tensor term needs fields 'x', 'idx' and 'c'");
    }
    std::vector<unsigned> x;
    for (const auto& e : t.at("x")) {
      if (!e.is_number_integer() || e.get<long long>() < 0) throw ParseError("exponents must be naturals");
      x.push_back(static_cast<unsigned>(e.get<long long>()));
    }
    std::vector<unsigned> idx;
    for (const auto& e : t.at("idx")) {
      if (!e.is_number_integer() || e.get<long long>() <= 0) throw ParseError("frame indices must be >= 1");
      idx.push_back(static_cast<unsigned>(e.get<long long>()));
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
      throw ParseError("repeated frame index in tensor term");
    }
    // Unsorted frame lists are accepted; the permutation sign is applied.
    std::vector<unsigned> raw;
    for (const auto& e : t.at("idx")) raw.push_back(static_cast<unsigned>(e.get<long long>()));
    const int sign = permutation_sign(raw);
    if (!t.at("c").is_string()) throw ParseError("tensor coefficient 'c' must be a string");
    ParamPoly c = ParamPoly::parse(t.at("c").get<std::string>());
    out.add_term(BasisElement{std::move(x), MultiIndex(std::move(idx))}, sign > 0 ? c : -c);
  }
  return out;
}

PolyMultiVector parse_tensor_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + static_cast<std::size_t>(
                              std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
    throw ParseError(line, e.what());
  }
  return parse_tensor_json(j);
}

PolyMultiVector load_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tensor file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_tensor_text(buffer.str());
}

json tensor_to_json(const PolyMultiVector& v) {
  json terms = json::array();
  for (const auto& [b, c] : v.terms()) {
    terms.push_back({{"x", b.x}, {"idx", b.idx.indices()}, {"c", c.to_string()}});
  }
  return {{"n", v.ambient_dim()}, {"side", space_name(v.side())}, {"terms", terms}};
}

}  // namespace poissonlike
