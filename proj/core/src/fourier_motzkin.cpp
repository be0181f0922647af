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

#include "spohnkit/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

#include "spohnkit/errors.hpp"

namespace spohnkit {
namespace {

// a.x >= b, stored as coefficients followed by the bound.
using Row = RationalVector;

// Scale by a positive factor so the first nonzero coefficient is +-1; this
// makes duplicate detection exact.
Row Normalize(Row row, int cols) {
  for (int c = 0; c < cols; ++c) {
    if (row[c] != 0) {
      const Rational scale = 1 / abs(row[c]);
      for (auto& x : row) x *= scale;
      break;
    }
  }
  return row;
}

struct RowLess {
  bool operator()(const Row& a, const Row& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace

std::optional<RationalVector> SolveInequalities(const Matrix& a, const RationalVector& b, int cols) {
  if (a.size() != b.size()) throw ArgumentError("inequality system size mismatch");
  std::vector<std::vector<Row>> stages(cols + 1);
  {
    std::set<Row, RowLess> unique;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (static_cast<int>(a[r].size()) != cols) throw ArgumentError("inequality row arity mismatch");
      Row row = a[r];
      row.push_back(b[r]);
      unique.insert(Normalize(std::move(row), cols));
    }
    stages[cols].assign(unique.begin(), unique.end());
  }
  // stages[k] only involves unknowns 0..k-1.
  for (int k = cols; k > 0; --k) {
    const int var = k - 1;
    std::vector<Row> lower, upper;
    std::set<Row, RowLess> next;
    for (const auto& row : stages[k]) {
      if (row[var] > 0) {
        lower.push_back(row);
      } else if (row[var] < 0) {
        upper.push_back(row);
      } else {
        next.insert(row);
      }
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        // lo[var] > 0, up[var] < 0: combine to cancel var.
        Row combined(cols + 1);
        for (int c = 0; c <= cols; ++c) combined[c] = -up[var] * lo[c] + lo[var] * up[c];
        combined[var] = 0;
        next.insert(Normalize(std::move(combined), cols));
      }
    }
    stages[k - 1].assign(next.begin(), next.end());
  }
  for (const auto& row : stages[0]) {
    if (row[cols] > 0) return std::nullopt;
  }
  // Back substitution: each unknown takes its tightest lower bound, or the
  // upper bound when unbounded below, or 0 when free.
  RationalVector x(cols, Rational(0));
  for (int k = 1; k <= cols; ++k) {
    const int var = k - 1;
    std::optional<Rational> lo, hi;
    for (const auto& row : stages[k]) {
      if (row[var] == 0) continue;
      Rational rest = row[cols];
      for (int c = 0; c < var; ++c) rest -= row[c] * x[c];
      const Rational bound = rest / row[var];
      if (row[var] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) throw InvariantViolation("Fourier-Motzkin back substitution failed");
    x[var] = lo ? *lo : (hi ? *hi : Rational(0));
  }
  const RationalVector ax = Multiply(a, x);
  for (std::size_t r = 0; r < ax.size(); ++r) {
    if (ax[r] < b[r]) throw InvariantViolation("Fourier-Motzkin witness violates a constraint");
  }
  return x;
}

std::optional<RationalVector> PositiveCombination(const std::vector<RationalVector>& basis, int n) {
  if (n == 0) return RationalVector{};
  if (basis.empty()) return std::nullopt;
  const int d = static_cast<int>(basis.size());
  Matrix k(n, RationalVector(d));
  for (int j = 0; j < d; ++j) {
    if (static_cast<int>(basis[j].size()) != n) throw ArgumentError("kernel vector arity mismatch");
    for (int r = 0; r < n; ++r) k[r][j] = basis[j][r];
  }
  const auto lambda = SolveInequalities(k, RationalVector(n, Rational(1)), d);
  if (!lambda) return std::nullopt;
  return Multiply(k, *lambda);
}

}  // namespace spohnkit
