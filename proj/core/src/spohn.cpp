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

#include "spohnkit/spohn.hpp"

#include <algorithm>

#include "spohnkit/errors.hpp"

namespace spohnkit {

std::vector<std::string> CellVariableNames(const StrategyFormat& format) {
  const auto& dims = format.dims();
  const bool compact = std::all_of(dims.begin(), dims.end(), [](int d) { return d <= 9; });
  std::vector<std::string> names;
  names.reserve(format.num_cells());
  for (std::size_t cell = 0; cell < format.num_cells(); ++cell) {
    std::string name = "p";
    for (int j : format.Profile(cell)) {
      if (!compact) name += "_";
      name += std::to_string(j + 1);
    }
    names.push_back(std::move(name));
  }
  return names;
}

SpohnSystem::SpohnSystem(const GameForm& game)
    : game_(game), zero_(CellVariableNames(game.format())) {
  const auto& format = game_.format();
  s_ = MultiPoly::Constant(zero_, 1);
  for (int i = 0; i < format.num_players(); ++i) {
    SpohnMatrix matrix;
    matrix.player = i;
    matrix.rows.assign(format.strategies(i), SpohnRow{zero_, zero_});
    for (std::size_t cell = 0; cell < format.num_cells(); ++cell) {
      const int k = format.Profile(cell)[i];
      const MultiPoly x = MultiPoly::Variable(zero_, static_cast<int>(cell));
      matrix.rows[k].marginal += x;
      matrix.rows[k].payoff += game_.payoff(i, cell) * x;
    }
    for (int k = 0; k < format.strategies(i); ++k) {
      w_planes_.push_back({i, k, matrix.rows[k].marginal});
      s_ = s_ * matrix.rows[k].marginal;
    }
    for (int k = 0; k < format.strategies(i); ++k) {
      for (int k2 = k + 1; k2 < format.strategies(i); ++k2) {
        indices_.push_back({i, k, k2});
        equations_.push_back(matrix.rows[k].marginal * matrix.rows[k2].payoff -
                             matrix.rows[k2].marginal * matrix.rows[k].payoff);
      }
    }
    matrices_.push_back(std::move(matrix));
  }
}

const MultiPoly& SpohnSystem::equation(const MinorIndex& index) const {
  const auto it = std::find(indices_.begin(), indices_.end(), index);
  if (it == indices_.end()) throw ArgumentError("no such minor index");
  return equations_[it - indices_.begin()];
}

bool OnSpohn(const SpohnSystem& sys, const JointStrategy& p) {
  if (!(p.format() == sys.format())) throw ArgumentError("strategy format does not match the game");
  for (const auto& eq : sys.equations()) {
    if (eq.Evaluate(p.coords()) != 0) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> InW(const SpohnSystem& sys, const JointStrategy& p) {
  if (!(p.format() == sys.format())) throw ArgumentError("strategy format does not match the game");
  std::vector<std::pair<int, int>> out;
  for (const auto& plane : sys.w_planes()) {
    if (plane.form.Evaluate(p.coords()) == 0) out.emplace_back(plane.player, plane.strategy);
  }
  return out;
}

JacobianMatrix Jacobian(const GameForm& game, const JointStrategy& p) {
  const auto& format = game.format();
  if (!(p.format() == format)) throw ArgumentError("strategy format does not match the game");
  JacobianMatrix j;
  j.format = format;
  for (int i = 0; i < format.num_players(); ++i) {
    // Marginals m_k and payoff forms A_k at p.
    RationalVector m(format.strategies(i), Rational(0));
    RationalVector a(format.strategies(i), Rational(0));
    for (std::size_t cell = 0; cell < format.num_cells(); ++cell) {
      const int k = format.Profile(cell)[i];
      m[k] += p[cell];
      a[k] += game.payoff(i, cell) * p[cell];
    }
    for (int k = 0; k < format.strategies(i); ++k) {
      for (int k2 = k + 1; k2 < format.strategies(i); ++k2) {
        RationalVector row(format.num_cells(), Rational(0));
        for (std::size_t cell = 0; cell < format.num_cells(); ++cell) {
          const int r = format.Profile(cell)[i];
          const Rational& x = game.payoff(i, cell);
          if (r == k2) {
            row[cell] = m[k] * x - a[k];
          } else if (r == k) {
            row[cell] = a[k2] - m[k2] * x;
          }
        }
        j.rows.push_back({i, k, k2});
        j.entries.push_back(std::move(row));
      }
    }
  }
  return j;
}

JacobianMatrix SymbolicJacobian(const SpohnSystem& sys, const JointStrategy& p) {
  if (!(p.format() == sys.format())) throw ArgumentError("strategy format does not match the game");
  JacobianMatrix j;
  j.format = sys.format();
  j.rows = sys.indices();
  for (const auto& eq : sys.equations()) {
    RationalVector row;
    for (int v = 0; v < eq.num_vars(); ++v) row.push_back(eq.PartialDerivative(v).Evaluate(p.coords()));
    j.entries.push_back(std::move(row));
  }
  return j;
}

JacobianRank RankAndKernel(const JacobianMatrix& j) {
  const int cols = static_cast<int>(j.format.num_cells());
  JacobianRank out;
  out.rank = BareissRank(j.entries);
  out.kernel = KernelBasis(j.entries, cols);
  if (out.rank + static_cast<int>(out.kernel.size()) != cols) {
    throw InvariantViolation("rank and kernel dimension disagree");
  }
  return out;
}

}  // namespace spohnkit
