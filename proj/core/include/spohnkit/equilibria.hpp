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

#ifndef SPOHNKIT_EQUILIBRIA_HPP_
#define SPOHNKIT_EQUILIBRIA_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spohnkit/classify2x2.hpp"
#include "spohnkit/game.hpp"
#include "spohnkit/spohn.hpp"

namespace spohnkit {

struct NashPoint {
  enum class Kind { kPure, kMixed };

  ProductStrategy product;
  JointStrategy joint;
  Kind kind = Kind::kPure;
};

NashPoint MakeNashPoint(const ProductStrategy& product, NashPoint::Kind kind);

// Every profile from which no player gains by a unilateral deviation
// (ties allowed), in lexicographic order.
std::vector<PureProfile> PureNash(const GameForm& game);

struct MixedNashResult {
  enum class Status { kNone, kUnique, kDegenerateFamily };

  Status status = Status::kNone;
  std::optional<NashPoint> point;
  std::string reason;
};

// Totally mixed equilibrium of a 2x2 game from the two indifference
// equations. Throws ArgumentError for other formats.
MixedNashResult MixedNash2x2(const GameForm& game);

// True iff the joint tensor of q lies on V. Also evaluates the rank-one
// form of the equations (equal expected payoffs of every pair of supported
// strategies) and throws InvariantViolation if the two disagree.
bool VerifyNashOnSpohn(const GameForm& game, const NashPoint& q);

struct TangentVerdict {
  PureProfile profile;
  int rank = 0;
  int required_rank = 0;
  bool smooth = false;
  bool positive_kernel = false;
  std::optional<RationalVector> witness;
  bool pure_de_certified = false;
  std::string reason;
};

// Exact decision of {J x = 0, x >= 1}; returns a witness on success.
std::optional<RationalVector> PositiveKernelExists(const JacobianMatrix& j);

// Smoothness means rank J = sum_i (d_i - 1) at the pure strategy.
TangentVerdict TangentCriterion(const GameForm& game, const PureProfile& profile);

enum class LowerBound { kYes, kNo, kIndeterminate };
enum class LimitVerdict { kYes, kNo, kUnknown };

std::string ToString(LowerBound v);
std::string ToString(LimitVerdict v);

struct DeMembership {
  bool on_spohn = false;
  bool in_w = false;
  std::vector<std::pair<int, int>> w_hits;  // (player, strategy), 0-based
  bool in_simplex = false;
  LowerBound lower_bound = LowerBound::kIndeterminate;
  bool upper_bound = false;
  LimitVerdict spohn_limit_de = LimitVerdict::kUnknown;
  std::vector<std::string> reasons;
};

// Three-valued DE membership. The classification is used for 2x2 games
// and may be null.
DeMembership DecideDeMembership(const GameForm& game, const JointStrategy& p,
                                const Classification2x2* classification);

}  // namespace spohnkit

#endif  // SPOHNKIT_EQUILIBRIA_HPP_
