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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "poissonlike/param_poly.hpp"

namespace poissonlike {

/// Strictly increasing list of 1-based basis indices. The empty index is the
/// scalar slot.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws DegreeMismatch unless the indices are strictly increasing and >= 1.
  MultiIndex(std::initializer_list<unsigned> indices);
  explicit MultiIndex(std::vector<unsigned> indices);

  const std::vector<unsigned>& indices() const noexcept { return indices_; }
  std::size_t degree() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(unsigned i) const;
  unsigned max_index() const noexcept { return indices_.empty() ? 0 : indices_.back(); }

  /// Removes the index at `position` (0-based).
  MultiIndex without_position(std::size_t position) const;
  /// Indices of 1..n not in this index.
  MultiIndex complement(std::size_t n) const;

  /// Degree first, then lexicographic.
  std::strong_ordering operator<=>(const MultiIndex& other) const;
  bool operator==(const MultiIndex& other) const = default;

  /// `(1,2,4)`; `()` for the scalar slot.
  std::string to_string() const;

 private:
  std::vector<unsigned> indices_;
};

/// Sign and index of the wedge of two basis monomials; nullopt when they
/// share an index.
struct SignedIndex {
  int sign;
  MultiIndex index;
};
std::optional<SignedIndex> merge_indices(const MultiIndex& a, const MultiIndex& b);

/// Sign of the permutation that sorts `sequence` (entries must be distinct).
int permutation_sign(const std::vector<unsigned>& sequence);

/// All k-subsets of 1..n in lexicographic order.
std::vector<MultiIndex> basis_enum(std::size_t n, std::size_t k);

std::size_t binomial(std::size_t n, std::size_t k);

enum class Space { tangent, cotangent };

/// `tangent` / `cotangent`.
const char* space_name(Space s);
/// Generator prefix used in literals: `y` (tangent) or `z` (cotangent).
char generator_prefix(Space s);

/// Element of the exterior algebra of an n-dimensional space or its dual,
/// with ParamPoly coefficients. May mix degrees.
class ExteriorElement {
 public:
  using TermMap = std::map<MultiIndex, ParamPoly>;

  ExteriorElement(Space space, std::size_t n) : space_(space), n_(n) {}

  static ExteriorElement scalar(Space space, std::size_t n, const ParamPoly& c);
  static ExteriorElement monomial(Space space, std::size_t n, const MultiIndex& index,
                                  const ParamPoly& c = ParamPoly(1L));
  static ExteriorElement generator(Space space, std::size_t n, unsigned i);

  Space space() const noexcept { return space_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Degrees present (empty for zero).
  std::set<std::size_t> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  /// The single degree of a nonzero homogeneous element.
  std::optional<std::size_t> degree() const;

  ParamPoly coefficient(const MultiIndex& index) const;
  ExteriorElement homogeneous_part(std::size_t k) const;

  /// Adds c * basis(index). Throws IndexOutOfRange for indices beyond n.
  void add_term(const MultiIndex& index, const ParamPoly& c);

  ExteriorElement substitute(const Assignment& assignment) const;
  ExteriorElement substitute(const std::map<std::string, ParamPoly>& replacement) const;
  std::set<std::string> parameters() const;

  ExteriorElement& operator+=(const ExteriorElement& other);
  ExteriorElement& operator-=(const ExteriorElement& other);
  ExteriorElement operator-() const;
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(const ParamPoly& c, const ExteriorElement& e);
  bool operator==(const ExteriorElement& other) const = default;

  /// Literal form, e.g. `c1*y1^y2 - y3`.
  std::string to_string() const;

 private:
  void require_compatible(const ExteriorElement& other) const;

  Space space_;
  std::size_t n_;
  TermMap terms_;
};

/// Bilinear wedge with permutation signs. Throws SpaceMismatch.
ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

/// Natural pairing, <z_I, y_J> = [I == J]. Throws SpaceMismatch unless
/// `omega` is cotangent and `u` tangent over the same dimension.
ParamPoly pairing(const ExteriorElement& omega, const ExteriorElement& u);

/// y_I -> eps(I, I^c) z_{I^c}, the contraction <Vol, U> with the standard
/// volume form.
ExteriorElement contract_volume(const ExteriorElement& u);
/// Inverse of contract_volume: z_J -> eps(J^c, J) y_{J^c}.
ExteriorElement uncontract_volume(const ExteriorElement& omega);

/// Sign eps(I, I^c) of the permutation (I followed by its complement).
int volume_sign(const MultiIndex& index, std::size_t n);

}  // namespace poissonlike
