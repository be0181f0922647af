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

#include <gtest/gtest.h>

#include <random>

#include "spohnkit/fourier_motzkin.hpp"
#include "spohnkit/linalg.hpp"
#include "test_support.hpp"

namespace spohnkit {
namespace {

using testing::Qs;

TEST(Linalg, RankAndKernel) {
  const Matrix m = {Qs({"1", "2", "3"}), Qs({"2", "4", "6"}), Qs({"0", "1", "1"})};
  EXPECT_EQ(BareissRank(m), 2);
  EXPECT_EQ(Rref(m).rank(), 2);
  const auto kernel = KernelBasis(m, 3);
  ASSERT_EQ(kernel.size(), 1u);
  for (const auto& v : Multiply(m, kernel[0])) EXPECT_EQ(v, 0);
}

TEST(Linalg, SolveLinear) {
  const Matrix a = {Qs({"1", "1"}), Qs({"1", "-1"})};
  EXPECT_EQ(SolveLinear(a, Qs({"3", "1"}), 2), Qs({"2", "1"}));
  const Matrix singular = {Qs({"1", "1"}), Qs({"2", "2"})};
  EXPECT_FALSE(SolveLinear(singular, Qs({"1", "3"}), 2).has_value());
}

TEST(Linalg, RandomKernelProperty) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m(3, RationalVector(5));
    for (auto& row : m) {
      for (auto& x : row) x = c(rng);
    }
    const auto kernel = KernelBasis(m, 5);
    EXPECT_EQ(static_cast<int>(kernel.size()), 5 - BareissRank(m));
    for (const auto& v : kernel) {
      for (const auto& x : Multiply(m, v)) EXPECT_EQ(x, 0);
    }
  }
}

TEST(FourierMotzkin, FeasibleAndInfeasible) {
  // x >= 1, y >= 1, x + y <= 3
  const Matrix a = {Qs({"1", "0"}), Qs({"0", "1"}), Qs({"-1", "-1"})};
  const auto x = SolveInequalities(a, Qs({"1", "1", "-3"}), 2);
  ASSERT_TRUE(x.has_value());
  EXPECT_GE((*x)[0], 1);
  EXPECT_GE((*x)[1], 1);
  EXPECT_LE((*x)[0] + (*x)[1], 3);
  EXPECT_FALSE(SolveInequalities(a, Qs({"2", "2", "-3"}), 2).has_value());
}

TEST(FourierMotzkin, PositiveCombination) {
  // span{(1,0,3,1), (0,1,0,0)} has a vector with every entry >= 1
  const auto w = PositiveCombination({Qs({"1", "0", "3", "1"}), Qs({"0", "1", "0", "0"})}, 4);
  ASSERT_TRUE(w.has_value());
  for (const auto& v : *w) EXPECT_GE(v, 1);
  EXPECT_FALSE(PositiveCombination({Qs({"1", "-1"})}, 2).has_value());
  EXPECT_FALSE(PositiveCombination({}, 3).has_value());
}

}  // namespace
}  // namespace spohnkit
