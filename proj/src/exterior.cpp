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

#include "poissonlike/exterior.hpp"

#include <algorithm>

#include "poissonlike/errors.hpp"

namespace poissonlike {

MultiIndex::MultiIndex(std::initializer_list<unsigned> indices)
    : MultiIndex(std::vector<unsigned>(indices)) {}

MultiIndex::MultiIndex(std::vector<unsigned> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] == 0 || (i > 0 && indices_[i - 1] >= indices_[i])) {
      throw DegreeMismatch("multi-index must be strictly increasing and 1-based: " + to_string());
    }
  }
}

bool MultiIndex::contains(unsigned i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

MultiIndex MultiIndex::without_position(std::size_t position) const {
  MultiIndex out;
  out.indices_ = indices_;
  out.indices_.erase(out.indices_.begin() + static_cast<std::ptrdiff_t>(position));
  return out;
}

MultiIndex MultiIndex::complement(std::size_t n) const {
  MultiIndex out;
  for (unsigned i = 1; i <= n; ++i) {
    if (!contains(i)) out.indices_.push_back(i);
  }
  return out;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = indices_.size() <=> other.indices_.size(); c != 0) return c;
  return indices_ <=> other.indices_;
}

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out + ")";
}

std::optional<SignedIndex> merge_indices(const MultiIndex& a, const MultiIndex& b) {
  const auto& x = a.indices();
  const auto& y = b.indices();
  std::vector<unsigned> merged;
  merged.reserve(x.size() + y.size());
  std::size_t inversions = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i] < y[j])) {
      merged.push_back(x[i++]);
    } else if (i == x.size() || y[j] < x[i]) {
      // y[j] jumps over every remaining entry of x.
      inversions += x.size() - i;
      merged.push_back(y[j++]);
    } else {
      return std::nullopt;
    }
  }
  SignedIndex out{(inversions % 2 == 0) ? 1 : -1, MultiIndex{}};
  out.index = MultiIndex(std::move(merged));
  return out;
}

int permutation_sign(const std::vector<unsigned>& sequence) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::size_t j = i + 1; j < sequence.size(); ++j) {
      if (sequence[i] > sequence[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<MultiIndex> basis_enum(std::size_t n, std::size_t k) {
  std::vector<MultiIndex> out;
  if (k > n) return out;
  std::vector<unsigned> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = static_cast<unsigned>(i + 1);
  while (true) {
    out.emplace_back(current);
    // Advance to the next k-subset in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && current[pos - 1] == n - k + pos) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t i = pos; i < k; ++i) current[i] = current[i - 1] + 1;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

const char* space_name(Space s) { return s == Space::tangent ? "tangent" : "cotangent"; }

char generator_prefix(Space s) { return s == Space::tangent ? 'y' : 'z'; }

ExteriorElement ExteriorElement::scalar(Space space, std::size_t n, const ParamPoly& c) {
  return monomial(space, n, MultiIndex{}, c);
}

ExteriorElement ExteriorElement::monomial(Space space, std::size_t n, const MultiIndex& index,
                                          const ParamPoly& c) {
  ExteriorElement e(space, n);
  e.add_term(index, c);
  return e;
}

ExteriorElement ExteriorElement::generator(Space space, std::size_t n, unsigned i) {
  return monomial(space, n, MultiIndex{i});
}

std::set<std::size_t> ExteriorElement::degrees() const {
  std::set<std::size_t> out;
  for (const auto& [idx, c] : terms_) out.insert(idx.degree());
  return out;
}

std::optional<std::size_t> ExteriorElement::degree() const {
  auto ds = degrees();
  if (ds.size() != 1) return std::nullopt;
  return *ds.begin();
}

ParamPoly ExteriorElement::coefficient(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? ParamPoly{} : it->second;
}

ExteriorElement ExteriorElement::homogeneous_part(std::size_t k) const {
  ExteriorElement out(space_, n_);
  for (const auto& [idx, c] : terms_) {
    if (idx.degree() == k) out.terms_.emplace(idx, c);
  }
  return out;
}

void ExteriorElement::add_term(const MultiIndex& index, const ParamPoly& c) {
  if (index.max_index() > n_) {
    throw IndexOutOfRange("basis index " + index.to_string() + " exceeds dimension " +
                          std::to_string(n_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExteriorElement ExteriorElement::substitute(const Assignment& assignment) const {
  ExteriorElement out(space_, n_);
  for (const auto& [idx, c] : terms_) out.add_term(idx, c.substitute(assignment));
  return out;
}

ExteriorElement ExteriorElement::substitute(
    const std::map<std::string, ParamPoly>& replacement) const {
  ExteriorElement out(space_, n_);
  for (const auto& [idx, c] : terms_) out.add_term(idx, c.substitute(replacement));
  return out;
}

std::set<std::string> ExteriorElement::parameters() const {
  std::set<std::string> out;
  for (const auto& [idx, c] : terms_) out.merge(c.parameters());
  return out;
}

void ExteriorElement::require_compatible(const ExteriorElement& other) const {
  if (space_ != other.space_ || n_ != other.n_) {
    throw SpaceMismatch(std::string("cannot combine ") + space_name(space_) + " element of dim " +
                        std::to_string(n_) + " with " + space_name(other.space_) +
                        " element of dim " + std::to_string(other.n_));
  }
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& other) {
  require_compatible(other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& other) {
  require_compatible(other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

ExteriorElement ExteriorElement::operator-() const {
  ExteriorElement out = *this;
  for (auto& [idx, c] : out.terms_) c = -c;
  return out;
}

ExteriorElement operator*(const ParamPoly& c, const ExteriorElement& e) {
  ExteriorElement out(e.space_, e.n_);
  if (c.is_zero()) return out;
  for (const auto& [idx, coef] : e.terms_) out.add_term(idx, c * coef);
  return out;
}

namespace {

std::string monomial_text(Space space, const MultiIndex& idx) {
  std::string out;
  for (unsigned i : idx.indices()) {
    if (!out.empty()) out += '^';
    out += generator_prefix(space);
    out += std::to_string(i);
  }
  return out;
}

}  // namespace

std::string ExteriorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
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
    std::string coef_text = coef.needs_parentheses() ? "(" + coef.to_string() + ")" : coef.to_string();
    if (idx.empty()) {
      out += coef_text;
    } else if (coef == ParamPoly(1L)) {
      out += monomial_text(space_, idx);
    } else {
      out += coef_text + "*" + monomial_text(space_, idx);
    }
  }
  return out;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.space() != b.space() || a.ambient_dim() != b.ambient_dim()) {
    throw SpaceMismatch("wedge of elements from different spaces");
  }
  ExteriorElement out(a.space(), a.ambient_dim());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      auto merged = merge_indices(ia, ib);
      if (!merged) continue;
      ParamPoly c = ca * cb;
      out.add_term(merged->index, merged->sign > 0 ? c : -c);
    }
  }
  return out;
}

ParamPoly pairing(const ExteriorElement& omega, const ExteriorElement& u) {
  if (omega.space() != Space::cotangent || u.space() != Space::tangent ||
      omega.ambient_dim() != u.ambient_dim()) {
    throw SpaceMismatch("pairing needs a cotangent element and a tangent element of equal dimension");
  }
  ParamPoly out;
  for (const auto& [idx, c] : omega.terms()) {
    if (auto it = u.terms().find(idx); it != u.terms().end()) out += c * it->second;
  }
  return out;
}

int volume_sign(const MultiIndex& index, std::size_t n) {
  std::vector<unsigned> seq = index.indices();
  const MultiIndex rest = index.complement(n);
  seq.insert(seq.end(), rest.indices().begin(), rest.indices().end());
  return permutation_sign(seq);
}

ExteriorElement contract_volume(const ExteriorElement& u) {
  if (u.space() != Space::tangent) throw SpaceMismatch("contract_volume expects a tangent element");
  const std::size_t n = u.ambient_dim();
  ExteriorElement out(Space::cotangent, n);
  for (const auto& [idx, c] : u.terms()) {
    int s = volume_sign(idx, n);
    out.add_term(idx.complement(n), s > 0 ? c : -c);
  }
  return out;
}

ExteriorElement uncontract_volume(const ExteriorElement& omega) {
  if (omega.space() != Space::cotangent) {
    throw SpaceMismatch("uncontract_volume expects a cotangent element");
  }
  const std::size_t n = omega.ambient_dim();
  ExteriorElement out(Space::tangent, n);
  for (const auto& [idx, c] : omega.terms()) {
    MultiIndex source = idx.complement(n);
    int s = volume_sign(source, n);
    out.add_term(source, s > 0 ? c : -c);
  }
  return out;
}

}  // namespace poissonlike
