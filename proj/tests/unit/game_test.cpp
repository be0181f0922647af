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

#include "spohnkit/errors.hpp"
#include "spohnkit/game.hpp"
#include "test_support.hpp"

namespace spohnkit {
namespace {

using testing::Q;
using testing::Qs;

TEST(ParseGame, PrisonersDilemmaFixture) {
  const GameForm g = ParseGame(testing::ReadFixture("pd.json"));
  EXPECT_EQ(g.num_players(), 2);
  EXPECT_EQ(g.format().dims(), (std::vector<int>{2, 2}));
  EXPECT_EQ(g, testing::PrisonersDilemma());
}

TEST(ParseGame, ShapeMismatchIsValidationError) {
  EXPECT_THROW(ParseGame(testing::ReadFixture("shape_mismatch.json")), ValidationError);
}

TEST(ParseGame, RationalEntryIsExact) {
  const GameForm g = ParseGame(R"({"format":[2,2],"payoffs":[[[1,"1/3"],[0,0]],[[0,0],[0,0]]]})");
  EXPECT_EQ(g.payoff(0, 1), Fraction(1, 3));
}

TEST(ParseGame, HugeIntegersAsStringsSurvive) {
  const GameForm g =
      ParseGame(R"({"format":[2,2],"payoffs":[[["123456789012345678901234567890",0],[0,0]],[[0,0],[0,0]]]})");
  EXPECT_EQ(ToString(g.payoff(0, 0)), "123456789012345678901234567890");
}

TEST(ParseGame, SyntaxErrorReportsLine) {
  try {
    ParseGame("{\n\"format\": [2,2],\n\"payoffs\": [oops]\n}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseGame, FloatEntryNamesField) {
  try {
    ParseGame(R"({"format":[2,2],"payoffs":[[[1,0.5],[0,0]],[[0,0],[0,0]]]})");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "payoffs[0][0][1]");
  }
}

TEST(ParseGame, MissingKeyAndNonCanonicalRational) {
  EXPECT_THROW(ParseGame(R"({"format":[2,2]})"), ParseError);
  EXPECT_THROW(ParseGame(R"({"format":[2,2],"payoffs":[[[1,"2/4"],[0,0]],[[0,0],[0,0]]]})"), ParseError);
}

TEST(ParseGame, RoundTripThroughJson) {
  const GameForm g = ParseGame(testing::ReadFixture("three_player.json"));
  EXPECT_EQ(ParseGame(GameToJson(g)), g);
}

TEST(JointStrategy, RejectsZeroTensorAndBadSum) {
  const StrategyFormat f({2, 2});
  EXPECT_THROW(JointStrategy(f, Qs({"0", "0", "0", "0"}), Normalization::kProjective), ValidationError);
  EXPECT_THROW(JointStrategy(f, Qs({"1", "1", "0", "0"})), ValidationError);
  EXPECT_EQ(JointStrategy::Infer(f, Qs({"1", "1", "0", "0"})).normalization(), Normalization::kProjective);
}

TEST(Marginal, Examples) {
  const StrategyFormat f({2, 2});
  EXPECT_EQ(Marginal(JointStrategy(f, Qs({"1/4", "1/4", "1/4", "1/4"})), 0, 0), Q("1/2"));
  const std::vector<int> profile{0, 0};
  EXPECT_EQ(Marginal(JointStrategy::Pure(f, profile), 1, 1), 0);
  EXPECT_EQ(Marginal(JointStrategy(f, Qs({"2/9", "4/9", "1/9", "2/9"})), 0, 0), Q("2/3"));
  EXPECT_THROW(Marginal(JointStrategy::Pure(f, profile), 2, 0), ArgumentError);
}

TEST(ConditionalPayoff, Examples) {
  const GameForm pd = testing::PrisonersDilemma();
  const StrategyFormat& f = pd.format();
  // ((-2)(1/4) + (-10)(1/4)) / (1/2)
  EXPECT_EQ(ConditionalPayoff(pd, JointStrategy(f, Qs({"1/4", "1/4", "1/4", "1/4"})), 0, 0), -6);
  for (std::size_t cell = 0; cell < 4; ++cell) {
    const auto profile = f.Profile(cell);
    const JointStrategy p = JointStrategy::Pure(f, profile);
    for (int i = 0; i < 2; ++i) EXPECT_EQ(ConditionalPayoff(pd, p, i, profile[i]), pd.payoff(i, cell));
  }
  const std::vector<int> first{0, 0};
  try {
    ConditionalPayoff(pd, JointStrategy::Pure(f, first), 0, 1);
    FAIL() << "expected an undefined conditional payoff";
  } catch (const UndefinedConditionalPayoff& e) {
    EXPECT_EQ(e.player(), 0);
    EXPECT_EQ(e.strategy(), 1);
  }
}

TEST(TensorOfProduct, Examples) {
  EXPECT_EQ(TensorOfProduct(ProductStrategy({Qs({"0", "1"}), Qs({"1/2", "1/2"})})).coords(),
            Qs({"0", "0", "1/2", "1/2"}));
  EXPECT_EQ(TensorOfProduct(ProductStrategy({Qs({"1", "0"}), Qs({"1", "0"})})).coords(), Qs({"1", "0", "0", "0"}));
  EXPECT_EQ(TensorOfProduct(ProductStrategy({Qs({"2/3", "1/3"}), Qs({"1/3", "2/3"})})).coords(),
            Qs({"2/9", "4/9", "1/9", "2/9"}));
  EXPECT_THROW(ProductStrategy({Qs({"1/2", "1/3"})}), ValidationError);
}

TEST(CoreProperties, MarginalsSumToOne) {
  std::mt19937 rng(11);
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 2, 2}, {3, 2, 2}}) {
    const StrategyFormat f(dims);
    for (int trial = 0; trial < 50; ++trial) {
      const JointStrategy p(f, testing::RandomSimplexPoint(rng, f.num_cells()));
      for (int i = 0; i < f.num_players(); ++i) {
        Rational sum = 0;
        for (int k = 0; k < f.strategies(i); ++k) sum += Marginal(p, i, k);
        EXPECT_EQ(sum, 1);
      }
    }
  }
}

TEST(CoreProperties, ProductMarginalsReproduceFactors) {
  std::mt19937 rng(12);
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 2, 2}}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<RationalVector> dists;
      for (int d : dims) dists.push_back(testing::RandomSimplexPoint(rng, d));
      const JointStrategy p = TensorOfProduct(ProductStrategy(dists));
      for (std::size_t i = 0; i < dims.size(); ++i) {
        for (int k = 0; k < dims[i]; ++k) EXPECT_EQ(Marginal(p, static_cast<int>(i), k), dists[i][k]);
      }
    }
  }
}

TEST(CoreProperties, ConditionalPayoffIsScaleInvariant) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const GameForm g = testing::RandomGame(rng, {2, 3}, -5, 5);
    const JointStrategy p(g.format(), testing::RandomSimplexPoint(rng, g.format().num_cells()));
    const Rational lambda = Fraction(trial + 2, 7);
    const JointStrategy scaled = p.Scaled(lambda);
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < g.format().strategies(i); ++k) {
        EXPECT_EQ(ConditionalPayoff(g, scaled, i, k), ConditionalPayoff(g, p, i, k));
      }
    }
  }
}

}  // namespace
}  // namespace spohnkit
