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

#include "poissonlike/rank.hpp"

#include <utility>

#include "poissonlike/errors.hpp"

namespace poissonlike {

std::size_t bareiss_rank(IntegerMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Integer& p = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer factor = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = p * m[i][j] - factor * m[rank][j];
        // Sylvester's identity makes this division exact.
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(const RationalMatrix& m) {
  IntegerMatrix ints;
  ints.reserve(m.size());
  for (const auto& row : m) {
    Integer lcm = 1;
    for (const auto& q : row) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& q : row) out.push_back(q.get_num() * (lcm / q.get_den()));
    ints.push_back(std::move(out));
  }
  return bareiss_rank(std::move(ints));
}

RationalMatrix transpose(const RationalMatrix& m) {
  if (m.empty()) return {};
  RationalMatrix out(m[0].size(), std::vector<Rational>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) out[c][r] = m[r][c];
  }
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t inner = a.empty() ? b.size() : a[0].size();
  if (inner != b.size()) throw ShapeMismatch("matrix product with incompatible shapes");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  RationalMatrix out(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

bool is_zero(const RationalMatrix& m) {
  for (const auto& row : m) {
    for (const auto& q : row) {
      if (q != 0) return false;
    }
  }
  return true;
}

}  // namespace poissonlike
