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

#ifndef SPOHNKIT_GAME_HPP_
#define SPOHNKIT_GAME_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spohnkit/rational.hpp"

namespace spohnkit {

// Strategy counts (d_1, ..., d_n). Cells of a joint tensor are stored in
// lexicographic order of the profile (j_1, ..., j_n), last index fastest;
// for 2x2 that is (p11, p12, p21, p22). All indices in the C++ API are
// 0-based; reports print them 1-based.
class StrategyFormat {
 public:
  StrategyFormat() = default;
  explicit StrategyFormat(std::vector<int> dims);

  int num_players() const { return static_cast<int>(dims_.size()); }
  int strategies(int player) const { return dims_.at(player); }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t num_cells() const { return num_cells_; }

  std::size_t CellIndex(std::span<const int> profile) const;
  std::vector<int> Profile(std::size_t cell) const;
  bool Is2x2() const { return dims_ == std::vector<int>{2, 2}; }

  friend bool operator==(const StrategyFormat&, const StrategyFormat&) = default;

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t num_cells_ = 0;
};

// A finite game in normal form: one exact payoff tensor per player.
class GameForm {
 public:
  GameForm(StrategyFormat format, std::vector<RationalVector> payoffs);

  // Convenience constructor for bimatrix games given row-major as
  // {x11, x12, x21, x22} for each player.
  static GameForm Bimatrix(const RationalVector& a, const RationalVector& b);

  const StrategyFormat& format() const { return format_; }
  int num_players() const { return format_.num_players(); }
  const RationalVector& payoffs(int player) const { return payoffs_.at(player); }
  const Rational& payoff(int player, std::size_t cell) const {
    return payoffs_.at(player).at(cell);
  }
  const Rational& payoff(int player, std::span<const int> profile) const {
    return payoff(player, format_.CellIndex(profile));
  }

  friend bool operator==(const GameForm&, const GameForm&) = default;

 private:
  StrategyFormat format_;
  std::vector<RationalVector> payoffs_;
};

enum class Normalization { kProjective, kAffineSumOne };

// A nonzero joint tensor p over the game's cells.
class JointStrategy {
 public:
  // Throws ValidationError for the zero tensor, for a size mismatch, or
  // when kAffineSumOne is requested and the coordinates do not sum to 1.
  JointStrategy(StrategyFormat format, RationalVector coords,
                Normalization normalization = Normalization::kAffineSumOne);

  // Chooses kAffineSumOne when the coordinates happen to sum to 1.
  static JointStrategy Infer(StrategyFormat format, RationalVector coords);
  static JointStrategy Pure(const StrategyFormat& format, std::span<const int> profile);

  const StrategyFormat& format() const { return format_; }
  const RationalVector& coords() const { return coords_; }
  const Rational& operator[](std::size_t cell) const { return coords_[cell]; }
  Normalization normalization() const { return normalization_; }

  Rational Sum() const;
  bool IsNonNegative() const;
  // Representative with coordinates summing to 1. Throws ValidationError
  // when the coordinate sum is zero.
  JointStrategy Normalized() const;
  JointStrategy Scaled(const Rational& factor) const;

  friend bool operator==(const JointStrategy&, const JointStrategy&) = default;

 private:
  StrategyFormat format_;
  RationalVector coords_;
  Normalization normalization_;
};

struct PureProfile {
  std::vector<int> choices;

  friend bool operator==(const PureProfile&, const PureProfile&) = default;
  friend auto operator<=>(const PureProfile&, const PureProfile&) = default;
};

// Independent mixing: one distribution per player.
class ProductStrategy {
 public:
  explicit ProductStrategy(std::vector<RationalVector> distributions);

  int num_players() const { return static_cast<int>(dists_.size()); }
  const RationalVector& distribution(int player) const { return dists_.at(player); }
  const std::vector<RationalVector>& distributions() const { return dists_; }
  StrategyFormat format() const;

  friend bool operator==(const ProductStrategy&, const ProductStrategy&) = default;

 private:
  std::vector<RationalVector> dists_;
};

// p_{+...+k+...+}: total mass on cells where player `player` plays `k`.
Rational Marginal(const JointStrategy& p, int player, int k);

// E^(player)_k(p). Throws UndefinedConditionalPayoff when the marginal is 0.
Rational ConditionalPayoff(const GameForm& game, const JointStrategy& p, int player, int k);

JointStrategy TensorOfProduct(const ProductStrategy& q);

// Parses the JSON game-file format. Throws ParseError or ValidationError.
GameForm ParseGame(std::string_view text);
// Serializes back to the same format; entries are integers when integral
// and "num/den" strings otherwise.
std::string GameToJson(const GameForm& game);

}  // namespace spohnkit

#endif  // SPOHNKIT_GAME_HPP_
