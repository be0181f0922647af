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

#include <cmath>
#include <random>

#include "spohnkit/spohn.hpp"
#include "test_support.hpp"

namespace spohnkit {
namespace {

using testing::P;
using testing::Qs;

// The display polynomial f_a written out from the payoff entries.
MultiPoly HandFa(const MultiPoly& z, const RationalVector& a) {
  const auto v = [&](int k) { return MultiPoly::Variable(z, k); };
  const auto c = [&](const Rational& x) { return MultiPoly::Constant(z, x); };
  return v(0) * (v(2) * c(a[0] - a[2]) + v(3) * c(a[0] - a[3])) + v(1) * (v(2) * c(a[1] - a[2]) + v(3) * c(a[1] - a[3]));
}

TEST(SpohnSystem, TwoByTwoEquationsMatchDisplayForm) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const GameForm g = testing::RandomGame(rng, {2, 2}, -5, 5);
    const SpohnSystem sys(g);
    ASSERT_EQ(sys.equations().size(), 2u);
    EXPECT_EQ(sys.equations()[0], -HandFa(sys.zero(), g.payoffs(0)));
    for (const auto& eq : sys.equations()) {
      EXPECT_TRUE(eq.IsZero() || (eq.IsHomogeneous() && eq.Degree() == 2));
    }
  }
}

TEST(SpohnSystem, PrisonersDilemmaEquation) {
  const SpohnSystem sys(testing::PrisonersDilemma());
  EXPECT_EQ(sys.equations()[0], P(sys.zero(), "p11*p21 - 3*p11*p22 + 9*p12*p21 + 5*p12*p22"));
  EXPECT_EQ(sys.w_planes().size(), 4u);
  EXPECT_EQ(sys.s().Degree(), 4);
}

TEST(SpohnSystem, ConstantPlayerHasZeroEquations) {
  const SpohnSystem sys(ParseGame(testing::ReadFixture("constant.json")));
  for (const auto& eq : sys.equations()) EXPECT_TRUE(eq.IsZero());
}

TEST(SpohnSystem, EquationCount) {
  std::mt19937 rng(52);
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {3, 2, 4}}) {
    const SpohnSystem sys(testing::RandomGame(rng, dims, -3, 3));
    std::size_t expected = 0;
    for (int d : dims) expected += d * (d - 1) / 2;
    EXPECT_EQ(sys.equations().size(), expected);
  }
}

TEST(OnSpohn, Examples) {
  const StrategyFormat f({2, 2});
  EXPECT_TRUE(OnSpohn(SpohnSystem(testing::BachOrStravinski()), JointStrategy(f, Qs({"2/9", "4/9", "1/9", "2/9"}))));
  const SpohnSystem sys114(testing::Game114());
  EXPECT_FALSE(OnSpohn(sys114, JointStrategy(f, Qs({"1/4", "1/4", "1/4", "1/4"}))));
  EXPECT_EQ(sys114.equations()[0].Evaluate(Qs({"1/4", "1/4", "1/4", "1/4"})), Fraction(1, 4));
}

TEST(OnSpohn, PureStrategiesAlwaysOnVariety) {
  std::mt19937 rng(53);
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 2, 2}}) {
    for (int trial = 0; trial < 30; ++trial) {
      const GameForm g = testing::RandomGame(rng, dims, -9, 9);
      const SpohnSystem sys(g);
      for (std::size_t cell = 0; cell < g.format().num_cells(); ++cell) {
        EXPECT_TRUE(OnSpohn(sys, JointStrategy::Pure(g.format(), g.format().Profile(cell))));
      }
    }
  }
}

TEST(InW, Examples) {
  const SpohnSystem sys(testing::PrisonersDilemma());
  const StrategyFormat& f = sys.format();
  const std::vector<int> first{0, 0};
  EXPECT_EQ(InW(sys, JointStrategy::Pure(f, first)), (std::vector<std::pair<int, int>>{{0, 1}, {1, 1}}));
  EXPECT_TRUE(InW(sys, JointStrategy(f, Qs({"1/4", "1/4", "1/4", "1/4"}))).empty());
  EXPECT_EQ(InW(sys, JointStrategy(f, Qs({"0", "0", "1/2", "1/2"}))), (std::vector<std::pair<int, int>>{{0, 0}}));
}

TEST(Jacobian, ClosedFormAtFirstPure) {
  std::mt19937 rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    const GameForm g = testing::RandomGame(rng, {2, 2}, -5, 5);
    const auto& a = g.payoffs(0);
    const auto& b = g.payoffs(1);
    const std::vector<int> first{0, 0};
    const JacobianMatrix j = Jacobian(g, JointStrategy::Pure(g.format(), first));
    EXPECT_EQ(j.entries[0], (RationalVector{0, 0, a[2] - a[0], a[3] - a[0]}));
    EXPECT_EQ(j.entries[1], (RationalVector{0, b[1] - b[0], 0, b[3] - b[0]}));
  }
}

TEST(Jacobian, SymbolicEqualsClosedForm) {
  std::mt19937 rng(55);
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 2, 2}, {2, 3}}) {
    for (int trial = 0; trial < 30; ++trial) {
      const GameForm g = testing::RandomGame(rng, dims, -5, 5);
      const SpohnSystem sys(g);
      const JointStrategy p = JointStrategy::Infer(g.format(), testing::RandomRationalPoint(rng, g.format().num_cells()));
      EXPECT_EQ(Jacobian(g, p).entries, SymbolicJacobian(sys, p).entries);
    }
  }
}

TEST(Jacobian, RankExamples) {
  const GameForm pd = testing::PrisonersDilemma();
  const std::vector<int> first{0, 0};
  const JointStrategy e11 = JointStrategy::Pure(pd.format(), first);
  const JacobianRank rk = RankAndKernel(Jacobian(pd, e11));
  EXPECT_EQ(rk.rank, 2);
  EXPECT_EQ(rk.kernel.size(), 2u);
  EXPECT_EQ(RankAndKernel(Jacobian(ParseGame(testing::ReadFixture("constant.json")), e11)).rank, 0);
  // a11 = a21 = a22 makes row 1 vanish at (1,1)
  EXPECT_LE(RankAndKernel(Jacobian(testing::Game2x2({4, 1, 4, 4}, {1, 2, 3, 5}), e11)).rank, 1);
}

TEST(Spohn, HomogeneityProperty) {
  std::mt19937 rng(56);
  for (int trial = 0; trial < 50; ++trial) {
    const GameForm g = testing::RandomGame(rng, {2, 3}, -5, 5);
    const SpohnSystem sys(g);
    const RationalVector p = testing::RandomRationalPoint(rng, 6);
    const Rational lambda = Fraction(trial - 25, 7);
    RationalVector q = p;
    for (auto& x : q) x *= lambda;
    for (const auto& eq : sys.equations()) EXPECT_EQ(eq.Evaluate(q), lambda * lambda * eq.Evaluate(p));
  }
}

TEST(Spohn, CellNamesForLargeFormats) {
  EXPECT_EQ(CellVariableNames(StrategyFormat({2, 2}))[1], "p12");
  EXPECT_EQ(CellVariableNames(StrategyFormat({10, 2}))[1], "p_1_2");
}

}  // namespace
}  // namespace spohnkit
