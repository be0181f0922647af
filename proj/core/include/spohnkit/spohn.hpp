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

#ifndef SPOHNKIT_SPOHN_HPP_
#define SPOHNKIT_SPOHN_HPP_

#include <string>
#include <utility>
#include <vector>

#include "spohnkit/game.hpp"
#include "spohnkit/linalg.hpp"
#include "spohnkit/poly.hpp"

namespace spohnkit {

// Names of the cell variables in canonical order: "p11", "p12", ... when
// every strategy count is at most 9, otherwise "p_1_1", "p_1_2", ...
std::vector<std::string> CellVariableNames(const StrategyFormat& format);

// One row (k) of the matrix M_i: the marginal form p_{+..k..+} and the
// payoff form sum X^(i)_{..k..} p_{..k..}.
struct SpohnRow {
  MultiPoly marginal;
  MultiPoly payoff;
};

struct SpohnMatrix {
  int player = 0;
  std::vector<SpohnRow> rows;
};

// Minor index (i, k, k') with k < k'; 0-based.
struct MinorIndex {
  int player = 0;
  int k = 0;
  int k2 = 0;

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
  friend auto operator<=>(const MinorIndex&, const MinorIndex&) = default;
};

struct WPlane {
  int player = 0;
  int strategy = 0;
  MultiPoly form;
};

class SpohnSystem {
 public:
  explicit SpohnSystem(const GameForm& game);

  const GameForm& game() const { return game_; }
  const StrategyFormat& format() const { return game_.format(); }
  const std::vector<std::string>& variables() const { return zero_.vars(); }
  const MultiPoly& zero() const { return zero_; }
  const std::vector<SpohnMatrix>& matrices() const { return matrices_; }
  // eq_{i,k,k'} = m_k * B_{k'} - m_{k'} * A_k, in (i, k, k') order.
  const std::vector<MinorIndex>& indices() const { return indices_; }
  const std::vector<MultiPoly>& equations() const { return equations_; }
  const MultiPoly& equation(const MinorIndex& index) const;
  const std::vector<WPlane>& w_planes() const { return w_planes_; }
  // Product of all W forms.
  const MultiPoly& s() const { return s_; }

 private:
  GameForm game_;
  MultiPoly zero_;
  std::vector<SpohnMatrix> matrices_;
  std::vector<MinorIndex> indices_;
  std::vector<MultiPoly> equations_;
  std::vector<WPlane> w_planes_;
  MultiPoly s_;
};

bool OnSpohn(const SpohnSystem& sys, const JointStrategy& p);

// All (i, k) whose marginal vanishes at p, in (i, k) order.
std::vector<std::pair<int, int>> InW(const SpohnSystem& sys, const JointStrategy& p);

struct JacobianMatrix {
  std::vector<MinorIndex> rows;
  StrategyFormat format;
  Matrix entries;
};

// Jacobian of the minors at p from the closed-form entry formulas.
JacobianMatrix Jacobian(const GameForm& game, const JointStrategy& p);

// Jacobian obtained by differentiating the minors symbolically.
JacobianMatrix SymbolicJacobian(const SpohnSystem& sys, const JointStrategy& p);

struct JacobianRank {
  int rank = 0;
  std::vector<RationalVector> kernel;
};

JacobianRank RankAndKernel(const JacobianMatrix& j);

}  // namespace spohnkit

#endif  // SPOHNKIT_SPOHN_HPP_
