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

#include "spohnkit/game.hpp"

#include <numeric>

#include "spohnkit/errors.hpp"

namespace spohnkit {

StrategyFormat::StrategyFormat(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ValidationError("a game needs at least one player");
  for (int d : dims_) {
    if (d < 1) throw ValidationError("strategy counts must be positive");
  }
  strides_.assign(dims_.size(), 1);
  for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * static_cast<std::size_t>(dims_[i + 1]);
  }
  num_cells_ = strides_[0] * static_cast<std::size_t>(dims_[0]);
}

std::size_t StrategyFormat::CellIndex(std::span<const int> profile) const {
  if (profile.size() != dims_.size()) {
    throw ArgumentError("profile arity does not match the number of players");
  }
  std::size_t cell = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (profile[i] < 0 || profile[i] >= dims_[i]) {
      throw ArgumentError("strategy index out of range for player " + std::to_string(i + 1));
    }
    cell += strides_[i] * static_cast<std::size_t>(profile[i]);
  }
  return cell;
}

std::vector<int> StrategyFormat::Profile(std::size_t cell) const {
  if (cell >= num_cells_) throw ArgumentError("cell index out of range");
  std::vector<int> profile(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    profile[i] = static_cast<int>(cell / strides_[i]);
    cell %= strides_[i];
  }
  return profile;
}

GameForm::GameForm(StrategyFormat format, std::vector<RationalVector> payoffs)
    : format_(std::move(format)), payoffs_(std::move(payoffs)) {
  if (static_cast<int>(payoffs_.size()) != format_.num_players()) {
    throw ValidationError("expected " + std::to_string(format_.num_players()) +
                          " payoff tensors, got " + std::to_string(payoffs_.size()));
  }
  for (std::size_t i = 0; i < payoffs_.size(); ++i) {
    if (payoffs_[i].size() != format_.num_cells()) {
      throw ValidationError("payoff tensor of player " + std::to_string(i + 1) +
                            " does not match the format");
    }
  }
}

GameForm GameForm::Bimatrix(const RationalVector& a, const RationalVector& b) {
  return GameForm(StrategyFormat({2, 2}), {a, b});
}

JointStrategy::JointStrategy(StrategyFormat format, RationalVector coords,
                             Normalization normalization)
    : format_(std::move(format)), coords_(std::move(coords)), normalization_(normalization) {
  if (coords_.size() != format_.num_cells()) {
    throw ValidationError("joint strategy has " + std::to_string(coords_.size()) +
                          " coordinates, format needs " + std::to_string(format_.num_cells()));
  }
  bool all_zero = true;
  for (const auto& c : coords_) all_zero = all_zero && c == 0;
  if (all_zero) throw ValidationError("the zero tensor is not a joint strategy");
  if (normalization_ == Normalization::kAffineSumOne && Sum() != 1) {
    throw ValidationError("affine joint strategy must sum to 1, sums to " + ToString(Sum()));
  }
}

JointStrategy JointStrategy::Infer(StrategyFormat format, RationalVector coords) {
  Rational sum = std::accumulate(coords.begin(), coords.end(), Rational(0));
  const auto norm = sum == 1 ? Normalization::kAffineSumOne : Normalization::kProjective;
  return JointStrategy(std::move(format), std::move(coords), norm);
}

JointStrategy JointStrategy::Pure(const StrategyFormat& format, std::span<const int> profile) {
  RationalVector coords(format.num_cells(), Rational(0));
  coords[format.CellIndex(profile)] = 1;
  return JointStrategy(format, std::move(coords));
}

Rational JointStrategy::Sum() const {
  return std::accumulate(coords_.begin(), coords_.end(), Rational(0));
}

bool JointStrategy::IsNonNegative() const {
  for (const auto& c : coords_) {
    if (c < 0) return false;
  }
  return true;
}

JointStrategy JointStrategy::Normalized() const {
  const Rational sum = Sum();
  if (sum == 0) throw ValidationError("coordinates sum to zero; no affine representative");
  RationalVector out = coords_;
  for (auto& c : out) c /= sum;
  return JointStrategy(format_, std::move(out), Normalization::kAffineSumOne);
}

JointStrategy JointStrategy::Scaled(const Rational& factor) const {
  if (factor == 0) throw ArgumentError("scale factor must be nonzero");
  RationalVector out = coords_;
  for (auto& c : out) c *= factor;
  return JointStrategy(format_, std::move(out), Normalization::kProjective);
}

ProductStrategy::ProductStrategy(std::vector<RationalVector> distributions)
    : dists_(std::move(distributions)) {
  if (dists_.empty()) throw ValidationError("product strategy needs at least one player");
  for (std::size_t i = 0; i < dists_.size(); ++i) {
    if (dists_[i].empty()) throw ValidationError("empty distribution");
    Rational sum = 0;
    for (const auto& x : dists_[i]) {
      if (x < 0) {
        throw ValidationError("distribution of player " + std::to_string(i + 1) +
                              " has a negative entry");
      }
      sum += x;
    }
    if (sum != 1) {
      throw ValidationError("distribution of player " + std::to_string(i + 1) +
                            " sums to " + ToString(sum));
    }
  }
}

StrategyFormat ProductStrategy::format() const {
  std::vector<int> dims;
  dims.reserve(dists_.size());
  for (const auto& d : dists_) dims.push_back(static_cast<int>(d.size()));
  return StrategyFormat(std::move(dims));
}

Rational Marginal(const JointStrategy& p, int player, int k) {
  const auto& format = p.format();
  if (player < 0 || player >= format.num_players()) throw ArgumentError("player index out of range");
  if (k < 0 || k >= format.strategies(player)) throw ArgumentError("strategy index out of range");
  Rational total = 0;
  for (std::size_t cell = 0; cell < format.num_cells(); ++cell) {
    if (format.Profile(cell)[player] == k) total += p[cell];
  }
  return total;
}

Rational ConditionalPayoff(const GameForm& game, const JointStrategy& p, int player, int k) {
  if (!(game.format() == p.format())) throw ArgumentError("strategy format does not match the game");
  const Rational mass = Marginal(p, player, k);
  if (mass == 0) throw UndefinedConditionalPayoff(player, k);
  const auto& format = p.format();
  Rational weighted = 0;
  for (std::size_t cell = 0; cell < format.num_cells(); ++cell) {
    if (format.Profile(cell)[player] == k) weighted += game.payoff(player, cell) * p[cell];
  }
  return weighted / mass;
}

JointStrategy TensorOfProduct(const ProductStrategy& q) {
  const StrategyFormat format = q.format();
  RationalVector coords(format.num_cells());
  for (std::size_t cell = 0; cell < format.num_cells(); ++cell) {
    const auto profile = format.Profile(cell);
    Rational value = 1;
    for (int i = 0; i < format.num_players(); ++i) value *= q.distribution(i)[profile[i]];
    coords[cell] = value;
  }
  return JointStrategy(format, std::move(coords), Normalization::kAffineSumOne);
}

}  // namespace spohnkit
