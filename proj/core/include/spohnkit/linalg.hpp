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

#ifndef SPOHNKIT_LINALG_HPP_
#define SPOHNKIT_LINALG_HPP_

#include <optional>
#include <vector>

#include "spohnkit/rational.hpp"

namespace spohnkit {

// Dense row-major matrix of exact rationals.
using Matrix = std::vector<RationalVector>;

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivot_columns;
  int rank() const { return static_cast<int>(pivot_columns.size()); }
};

// Reduced row echelon form over Q. `cols` is only needed for 0-row input.
RrefResult Rref(Matrix m, int cols = -1);

// Rank by fraction-free (Bareiss) elimination.
int BareissRank(const Matrix& m);

// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<RationalVector> KernelBasis(const Matrix& m, int cols);

// Some solution of a x = b (free variables set to 0), or nullopt.
std::optional<RationalVector> SolveLinear(const Matrix& a, const RationalVector& b, int cols);

RationalVector Multiply(const Matrix& m, const RationalVector& x);

}  // namespace spohnkit

#endif  // SPOHNKIT_LINALG_HPP_
