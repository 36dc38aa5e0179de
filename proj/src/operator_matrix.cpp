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

#include "poissonlike/operator_matrix.hpp"

#include <algorithm>

#include "poissonlike/errors.hpp"

namespace poissonlike {

std::strong_ordering BasisElement::operator<=>(const BasisElement& other) const {
  if (auto c = idx <=> other.idx; c != 0) return c;
  unsigned da = 0;
  unsigned db = 0;
  for (unsigned e : x) da += e;
  for (unsigned e : other.x) db += e;
  if (auto c = da <=> db; c != 0) return c;
  // Larger leading exponent first: x1^2 before x1*x2 before x2^2.
  return other.x <=> x;
}

std::string BasisElement::to_string(Space space) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (x[i] > 1) out += "^" + std::to_string(x[i]);
  }
  std::string frames;
  for (unsigned i : idx.indices()) {
    if (!frames.empty()) frames += '^';
    frames += generator_prefix(space);
    frames += std::to_string(i);
  }
  if (!frames.empty()) out += (out.empty() ? "" : "*") + frames;
  return out.empty() ? "1" : out;
}

OperatorMatrix::OperatorMatrix(std::string label, Space space, int domain_degree,
                               int codomain_degree, std::vector<BasisElement> domain,
                               std::vector<BasisElement> codomain)
    : label_(std::move(label)),
      space_(space),
      domain_degree_(domain_degree),
      codomain_degree_(codomain_degree),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      entries_(domain_.size(), std::vector<ParamPoly>(codomain_.size())) {}

void OperatorMatrix::set_row(std::size_t r, const std::map<BasisElement, ParamPoly>& image) {
  for (const auto& [b, c] : image) {
    if (c.is_zero()) continue;
    auto it = std::lower_bound(codomain_.begin(), codomain_.end(), b);
    if (it == codomain_.end() || !(*it == b)) {
      throw ShapeMismatch(label_ + ": image component " + b.to_string(space_) +
                          " lies outside the codomain basis");
    }
    entries_[r][static_cast<std::size_t>(it - codomain_.begin())] = c;
  }
}

bool OperatorMatrix::is_zero() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

std::set<std::string> OperatorMatrix::parameters() const {
  std::set<std::string> out;
  for (const auto& row : entries_) {
    for (const auto& e : row) out.merge(e.parameters());
  }
  return out;
}

OperatorMatrix OperatorMatrix::substitute(const Assignment& assignment) const {
  OperatorMatrix out = *this;
  for (auto& row : out.entries_) {
    for (auto& e : row) e = e.substitute(assignment);
  }
  return out;
}

RationalMatrix OperatorMatrix::evaluate(const Assignment& assignment) const {
  RationalMatrix out(rows(), std::vector<Rational>(cols()));
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) out[r][c] = entries_[r][c].eval(assignment);
  }
  return out;
}

OperatorMatrix OperatorMatrix::transpose(std::string label) const {
  OperatorMatrix out(std::move(label), space_, codomain_degree_, domain_degree_, codomain_, domain_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) out.entries_[c][r] = entries_[r][c];
  }
  return out;
}

std::map<BasisElement, ParamPoly> OperatorMatrix::row_image(std::size_t r) const {
  std::map<BasisElement, ParamPoly> out;
  for (std::size_t c = 0; c < cols(); ++c) {
    if (!entries_[r][c].is_zero()) out.emplace(codomain_[c], entries_[r][c]);
  }
  return out;
}

OperatorMatrix multiply(const OperatorMatrix& first, const OperatorMatrix& second,
                        std::string label) {
  if (first.codomain() != second.domain()) {
    throw ShapeMismatch("cannot compose " + first.label() + " with " + second.label() +
                        ": intermediate bases differ");
  }
  OperatorMatrix out(std::move(label), first.space(), first.domain_degree(),
                     second.codomain_degree(), first.domain(), second.codomain());
  for (std::size_t i = 0; i < first.rows(); ++i) {
    for (std::size_t k = 0; k < first.cols(); ++k) {
      const ParamPoly& a = first.at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < second.cols(); ++j) {
        const ParamPoly& b = second.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

std::size_t rank(const OperatorMatrix& m, const Assignment& assignment) {
  return exact_rank(m.evaluate(assignment));
}

std::vector<BasisElement> exterior_basis(std::size_t n, std::size_t k) {
  std::vector<BasisElement> out;
  for (auto& idx : basis_enum(n, k)) out.push_back({{}, std::move(idx)});
  return out;
}

OperatorMatrix operator_matrix(const LinearMap& op, Space space, std::size_t n,
                               std::size_t domain_degree, std::size_t codomain_degree,
                               std::string label) {
  OperatorMatrix m(std::move(label), space, static_cast<int>(domain_degree),
                   static_cast<int>(codomain_degree), exterior_basis(n, domain_degree),
                   exterior_basis(n, codomain_degree));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ExteriorElement image = op(ExteriorElement::monomial(space, n, m.domain()[r].idx));
    std::map<BasisElement, ParamPoly> coeffs;
    for (const auto& [idx, c] : image.terms()) coeffs.emplace(BasisElement{{}, idx}, c);
    m.set_row(r, coeffs);
  }
  return m;
}

std::string matrix_label(const std::string& prefix, long from, long to) {
  return prefix + "(" + std::to_string(from) + "," + std::to_string(to) + ")";
}

}  // namespace poissonlike
