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

#include <utility>

#include "spohnkit/errors.hpp"
#include "spohnkit/poly.hpp"

namespace spohnkit {
namespace {

MultiPoly BareissDeterminant(std::vector<std::vector<MultiPoly>> m, const MultiPoly& like) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::Constant(like, 1);
  bool negate = false;
  MultiPoly prev = MultiPoly::Constant(like, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].IsZero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].IsZero()) ++swap_row;
      if (swap_row == n) return MultiPoly(like.var_list(), {});
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = DivideExact(num, prev);
        if (!q) throw InvariantViolation("Bareiss step produced an inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly(like.var_list(), {});
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

MultiPoly Resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.IsZero() && g.IsZero()) throw ArgumentError("resultant of two zero polynomials");
  if (*f.var_list() != *g.var_list()) throw ArgumentError("polynomials over different variable lists");
  if (!f.Involves(var) && !g.Involves(var)) {
    throw ArgumentError("neither polynomial involves " + f.vars()[var]);
  }
  if (f.IsZero() || g.IsZero()) return MultiPoly(f.var_list(), {});
  const auto fc = f.CoefficientsIn(var);
  const auto gc = g.CoefficientsIn(var);
  const std::size_t m = fc.size() - 1;
  const std::size_t n = gc.size() - 1;
  const std::size_t size = m + n;
  const MultiPoly zero(f.var_list(), {});
  std::vector<std::vector<MultiPoly>> sylvester(size, std::vector<MultiPoly>(size, zero));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) sylvester[i][i + k] = fc[m - k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) sylvester[n + i][i + k] = gc[n - k];
  }
  return BareissDeterminant(std::move(sylvester), f);
}

}  // namespace spohnkit
