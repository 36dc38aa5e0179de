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

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "poissonlike/cohomology.hpp"
#include "poissonlike/exterior.hpp"
#include "poissonlike/operator_matrix.hpp"
#include "poissonlike/param_poly.hpp"

namespace poissonlike {

/// Multivector field (tangent side, frames y_i = d/dx_i) or differential
/// form (cotangent side, z_i = dx_i) on R^n with polynomial coefficients.
/// A basis key is x^e * y_I (resp. z_I); coefficients are ParamPoly.
class PolyMultiVector {
 public:
  using TermMap = std::map<BasisElement, ParamPoly>;

  PolyMultiVector(Space side, std::size_t n) : side_(side), n_(n) {}

  /// c * x^x * frame(idx). Throws IndexOutOfRange when `x` has the wrong
  /// length or idx exceeds n.
  static PolyMultiVector monomial(Space side, std::size_t n, std::vector<unsigned> x,
                                  const MultiIndex& idx, const ParamPoly& c = ParamPoly(1L));
  /// The coordinate function x_i (a 0-vector / 0-form).
  static PolyMultiVector coordinate(Space side, std::size_t n, unsigned i);
  /// Constant-coefficient lift of an exterior element.
  static PolyMultiVector from_exterior(const ExteriorElement& e);

  Space side() const noexcept { return side_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  ParamPoly coefficient(const BasisElement& b) const;

  void add_term(const BasisElement& b, const ParamPoly& c);

  /// Set of (polynomial degree k, exterior degree m) over the terms.
  std::set<std::pair<std::size_t, std::size_t>> bidegrees() const;

  PolyMultiVector substitute(const Assignment& assignment) const;
  PolyMultiVector substitute(const std::map<std::string, ParamPoly>& replacement) const;
  std::set<std::string> parameters() const;

  PolyMultiVector& operator+=(const PolyMultiVector& other);
  PolyMultiVector& operator-=(const PolyMultiVector& other);
  PolyMultiVector operator-() const;
  friend PolyMultiVector operator+(PolyMultiVector a, const PolyMultiVector& b) { return a += b; }
  friend PolyMultiVector operator-(PolyMultiVector a, const PolyMultiVector& b) { return a -= b; }
  friend PolyMultiVector operator*(const ParamPoly& c, const PolyMultiVector& v);
  bool operator==(const PolyMultiVector& other) const = default;

  /// `x1*x4*y1^y2 + C7*x2*x4*y1^y2 - x4^2*y3^y4`.
  std::string to_string() const;

 private:
  void require_compatible(const PolyMultiVector& other) const;

  Space side_;
  std::size_t n_;
  TermMap terms_;
};

/// C(n,m) * C(n-1+k, n-1); 0 when m > n or k < 0.
std::size_t dim_Ckm(std::size_t n, long k, std::size_t m);

/// Exponent vectors of total degree k in n variables, x1^k first and xn^k
/// last (descending lexicographic).
std::vector<std::vector<unsigned>> monomial_exponents(std::size_t n, std::size_t k);

/// Basis of C_k^m (or C^m_k): MultiIndex-major in lexicographic order, then
/// coordinate monomials as in monomial_exponents. Sorted under
/// BasisElement ordering.
std::vector<BasisElement> basis_Ckm(std::size_t n, std::size_t k, std::size_t m);

/// Schouten bracket of polynomial multivector fields (commuting frames,
/// [y_i, f] = df/dx_i). On f y_K (|K| = r) and g y_L (|L| = s):
///   [P,Q] = sum_i (P d/dy_i) ^ d_{x_i} Q - (-1)^((r-1)(s-1)) (Q d/dy_i) ^ d_{x_i} P
/// with right derivatives in the frames. Throws SideMismatch.
PolyMultiVector poly_schouten(const PolyMultiVector& a, const PolyMultiVector& b);

/// Coefficient-wise product with exterior signs. Throws SideMismatch.
PolyMultiVector poly_wedge(const PolyMultiVector& a, const PolyMultiVector& b);

/// Exterior derivative d(f z_K) = sum_i df/dx_i z_i ^ z_K. Throws
/// SideMismatch on tangent input.
PolyMultiVector poly_d(const PolyMultiVector& omega);

/// x^e y_I -> eps(I, I^c) x^e z_{I^c}, coefficient-wise contraction with
/// the standard volume form. Throws SideMismatch on cotangent input.
PolyMultiVector poly_contract_volume(const PolyMultiVector& u);

/// The fully general (h, m)-tensor sum_j C<j> * basis_Ckm(n,h,m)[j-1].
PolyMultiVector general_param_tensor(std::size_t n, std::size_t h, std::size_t m,
                                     const std::string& prefix = "C");

struct PoissonEquation {
  BasisElement target;
  ParamPoly equation;
};

struct PoissonSystem {
  /// Dimension of the space [pi,pi] lives in.
  std::size_t target_dim = 0;
  /// Nonzero coefficients of [pi,pi], in basis order.
  std::vector<PoissonEquation> equations;
};

/// Coefficients of poly_schouten(pi, pi). Throws DegreeMismatch unless pi
/// is bihomogeneous.
PoissonSystem poisson_system(const PolyMultiVector& pi);

/// Position (k, m) of a chain space.
using ChainSpace = std::pair<std::size_t, std::size_t>;

/// `C_k^m` (tangent) or `C^m_k` (cotangent).
std::string chain_space_label(Space side, const ChainSpace& s);

/// d_pi = [pi, .] on C_k^m -> C_{h+k-1}^{m+1} for each consecutive pair of
/// `chain`, substituted with `assignment` (unassigned parameters stay
/// symbolic). Throws DegreeMismatch for a malformed chain or pi not of
/// bidegree (h, 2), NotAComplex when [pi,pi] != 0 after substitution.
std::vector<OperatorMatrix> poly_dpi_matrices(const PolyMultiVector& pi, std::size_t h,
                                              const std::vector<ChainSpace>& chain,
                                              const Assignment& assignment);

/// The dual delta <Vol, U> -> <Vol, d_pi U> on C^{n-m}_k, one matrix per
/// consecutive pair of `chain` (given on the tangent side).
std::vector<OperatorMatrix> volume_dual_matrices(const PolyMultiVector& pi, std::size_t h,
                                                 const std::vector<ChainSpace>& chain,
                                                 const Assignment& assignment);

/// Exterior derivative matrices C^m_k -> C^{m+1}_{k-1} along `chain` (given
/// on the cotangent side). Throws DegreeMismatch for a malformed chain.
std::vector<OperatorMatrix> poly_d_matrices(std::size_t n, const std::vector<ChainSpace>& chain);

/// Complex with one slot per chain space (grade = position in the chain,
/// p = 1) and the given consecutive matrices.
GradedComplex chain_complex(const std::string& name, Space side, std::size_t n,
                            const std::vector<ChainSpace>& chain,
                            const std::vector<OperatorMatrix>& matrices);

/// Tensor file: {"n":4, "side":"tangent", "terms":[{"x":[1,0,0,1],
/// "idx":[1,2], "c":"1"}, ...]}. Throws ParseError.
PolyMultiVector parse_tensor_json(const nlohmann::json& j);
PolyMultiVector parse_tensor_text(std::string_view text);
PolyMultiVector load_tensor_file(const std::string& path);
nlohmann::json tensor_to_json(const PolyMultiVector& v);

}  // namespace poissonlike
