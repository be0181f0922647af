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

#ifndef SPOHNKIT_FOURIER_MOTZKIN_HPP_
#define SPOHNKIT_FOURIER_MOTZKIN_HPP_

#include <optional>
#include <vector>

#include "spohnkit/linalg.hpp"

namespace spohnkit {

// Decides {x : A x >= b} exactly by Fourier-Motzkin elimination and returns
// a feasible point on success. `cols` is the number of unknowns.
std::optional<RationalVector> SolveInequalities(const Matrix& a, const RationalVector& b, int cols);

// Given the columns of a kernel basis K (each of length n), decides whether
// some x = K lambda has every entry >= 1 and returns that x. With an empty
// basis the only kernel vector is 0, so the answer is nullopt (n > 0).
std::optional<RationalVector> PositiveCombination(const std::vector<RationalVector>& basis, int n);

}  // namespace spohnkit

#endif  // SPOHNKIT_FOURIER_MOTZKIN_HPP_
