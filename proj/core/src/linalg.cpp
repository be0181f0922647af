// Copyright 2026 The spohn-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spohnkit/linalg.hpp"

#include <utility>

#include "spohnkit/errors.hpp"

namespace spohnkit {
namespace {

int ColumnCount(const Matrix& m, int cols) {
  if (!m.empty()) {
    const int c = static_cast<int>(m[0].size());
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != c) throw ArgumentError("ragged matrix");
    }
    if (cols >= 0 && cols != c) throw ArgumentError("column count mismatch");
    return c;
  }
  return cols < 0 ? 0 : cols;
}

}  // namespace

RrefResult Rref(Matrix m, int cols) {
  const int n = ColumnCount(m, cols);
  RrefResult out;
  std::size_t row = 0;
  for (int col = 0; col < n && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (int c = col; c < n; ++c) m[r][c] -= factor * m[row][c];
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

int BareissRank(const Matrix& input) {
  Matrix m = input;
  const int n = ColumnCount(m, -1);
  Rational prev = 1;
  std::size_t row = 0;
  for (int col = 0; col < n && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      for (int c = col + 1; c < n; ++c) {
        m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  return static_cast<int>(row);
}

std::vector<RationalVector> KernelBasis(const Matrix& m, int cols) {
  const RrefResult rref = Rref(m, cols);
  const int n = ColumnCount(m, cols);
  std::vector<bool> is_pivot(n, false);
  for (int c : rref.pivot_columns) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rref.pivot_columns.size(); ++r) {
      v[rref.pivot_columns[r]] = -rref.reduced[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> SolveLinear(const Matrix& a, const RationalVector& b, int cols) {
  const int n = ColumnCount(a, cols);
  if (b.size() != a.size()) throw ArgumentError("right-hand side size mismatch");
  Matrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const RrefResult rref = Rref(std::move(aug), n + 1);
  if (!rref.pivot_columns.empty() && rref.pivot_columns.back() == n) return std::nullopt;
  RationalVector x(n, Rational(0));
  for (std::size_t r = 0; r < rref.pivot_columns.size(); ++r) {
    x[rref.pivot_columns[r]] = rref.reduced[r][n];
  }
  return x;
}

RationalVector Multiply(const Matrix& m, const RationalVector& x) {
  RationalVector out(m.size(), Rational(0));
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != x.size()) throw ArgumentError("matrix-vector size mismatch");
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += m[r][c] * x[c];
  }
  return out;
}

}  // namespace spohnkit
