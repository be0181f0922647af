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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "spohnkit/errors.hpp"
#include "spohnkit/univariate.hpp"
#include "test_support.hpp"

namespace spohnkit {
namespace {

using testing::Q;
using testing::Qs;

UniPoly FromRoots(const RationalVector& roots) {
  UniPoly out = UniPoly::Constant(1);
  for (const auto& r : roots) out = out * UniPoly(RationalVector{-r, 1});
  return out;
}

TEST(IsolateRealRoots, QuadraticFromSlice) {
  const UniPoly h(Qs({"3/4", "-6", "1"}));
  const auto boxes = IsolateRealRoots(h, 0, 1);
  ASSERT_EQ(boxes.size(), 1u);
  const double root = 3.0 - std::sqrt(33.0) / 2.0;
  EXPECT_LE(ToDouble(boxes[0].lo), root);
  EXPECT_GE(ToDouble(boxes[0].hi), root);
  EXPECT_NEAR(boxes[0].value, root, 1e-11);
  EXPECT_LE(Rational(boxes[0].hi - boxes[0].lo), DefaultRootWidth());
  EXPECT_EQ(boxes[0].multiplicity, 1);
}

TEST(IsolateRealRoots, NoRealRoots) {
  EXPECT_TRUE(IsolateRealRoots(UniPoly(Qs({"1", "0", "1"})), -10, 10).empty());
}

TEST(IsolateRealRoots, DoubleRootHint) {
  const auto boxes = IsolateRealRoots(FromRoots(Qs({"1/2", "1/2"})), 0, 1);
  ASSERT_EQ(boxes.size(), 1u);
  EXPECT_EQ(boxes[0].multiplicity, 2);
  EXPECT_LE(boxes[0].lo, Q("1/2"));
  EXPECT_GE(boxes[0].hi, Q("1/2"));
}

TEST(IsolateRealRoots, ZeroPolynomialSignals) {
  EXPECT_THROW(IsolateRealRoots(UniPoly(), 0, 1), IdenticallyZero);
}

TEST(IsolateRealRoots, RootAtEndpointsIncluded) {
  const auto boxes = IsolateRealRoots(FromRoots(Qs({"0", "1"})), 0, 1);
  ASSERT_EQ(boxes.size(), 2u);
  EXPECT_EQ(boxes[0].lo, 0);
  EXPECT_LE(boxes[1].lo, 1);
  EXPECT_GE(boxes[1].hi, 1);
}

TEST(IsolateRealRoots, PlantedRootsProperty) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12), count(1, 5), mult(1, 3), quad(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<Rational> planted;
    RationalVector with_mult;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
      const Rational r = Fraction(num(rng), den(rng));
      planted.insert(r);
      const int m = mult(rng);
      for (int j = 0; j < m; ++j) with_mult.push_back(r);
    }
    // An irreducible quadratic factor adds no real roots.
    UniPoly h = FromRoots(with_mult) * UniPoly(RationalVector{Rational(quad(rng)), 0, 1});
    const Rational lo = Fraction(-3, 2), hi = 2;
    const auto boxes = IsolateRealRoots(h, lo, hi);
    std::vector<Rational> inside;
    for (const auto& r : planted) {
      if (r >= lo && r <= hi) inside.push_back(r);
    }
    ASSERT_EQ(boxes.size(), inside.size());
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      EXPECT_LE(boxes[k].lo, inside[k]);
      EXPECT_GE(boxes[k].hi, inside[k]);
      EXPECT_LE(Rational(boxes[k].hi - boxes[k].lo), DefaultRootWidth());
      const auto expected_mult = std::count(with_mult.begin(), with_mult.end(), inside[k]);
      EXPECT_EQ(boxes[k].multiplicity, expected_mult);
    }
    // The Sturm count of the square-free part over a slightly larger
    // half-open interval agrees.
    const auto chain = SturmSequence(DivMod(h, Gcd(h, h.Derivative())).first);
    const Rational below = lo - Fraction(1, 1000000);
    EXPECT_EQ(CountDistinctRoots(chain, below, hi), static_cast<int>(boxes.size()));
  }
}

TEST(UniPoly, DivModGcdAndSquareFree) {
  const UniPoly a = FromRoots(Qs({"1", "2", "2", "-1/3"}));
  const UniPoly b = FromRoots(Qs({"2", "5"}));
  const auto [q, r] = DivMod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.Degree(), b.Degree());
  EXPECT_EQ(Gcd(a, b), FromRoots(Qs({"2"})));
  const auto sqf = SquareFreeDecomposition(a);
  int total = 0;
  for (const auto& [f, m] : sqf) total += f.Degree() * m;
  EXPECT_EQ(total, 4);
  EXPECT_THROW(DivMod(a, UniPoly()), ArgumentError);
}

}  // namespace
}  // namespace spohnkit
