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

#include "spohnkit/equilibria.hpp"

#include <algorithm>

#include "spohnkit/errors.hpp"
#include "spohnkit/fourier_motzkin.hpp"

namespace spohnkit {
namespace {

// Solution set of c * x = r restricted to the open interval (0, 1).
struct Indifference {
  enum class Kind { kIdentity, kNoSolution, kValue } kind;
  Rational value;
};

Indifference SolveIndifference(const Rational& coef, const Rational& rhs) {
  if (coef == 0) return {rhs == 0 ? Indifference::Kind::kIdentity : Indifference::Kind::kNoSolution, 0};
  const Rational v = rhs / coef;
  if (v <= 0 || v >= 1) return {Indifference::Kind::kNoSolution, v};
  return {Indifference::Kind::kValue, v};
}

std::string ProfileText(const PureProfile& profile) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.choices.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(profile.choices[i] + 1);
  }
  return out + ")";
}

}  // namespace

NashPoint MakeNashPoint(const ProductStrategy& product, NashPoint::Kind kind) {
  return NashPoint{product, TensorOfProduct(product), kind};
}

std::vector<PureProfile> PureNash(const GameForm& game) {
  const auto& format = game.format();
  std::vector<PureProfile> out;
  for (std::size_t cell = 0; cell < format.num_cells(); ++cell) {
    const auto profile = format.Profile(cell);
    bool stable = true;
    for (int i = 0; i < format.num_players() && stable; ++i) {
      auto deviation = profile;
      for (int k = 0; k < format.strategies(i) && stable; ++k) {
        deviation[i] = k;
        if (game.payoff(i, deviation) > game.payoff(i, cell)) stable = false;
      }
    }
    if (stable) out.push_back({profile});
  }
  return out;
}

MixedNashResult MixedNash2x2(const GameForm& game) {
  if (!game.format().Is2x2()) throw ArgumentError("mixed equilibria are computed for 2x2 games only");
  const auto& a = game.payoffs(0);
  const auto& b = game.payoffs(1);
  // x = probability of row 1 making player 2 indifferent; y = probability
  // of column 1 making player 1 indifferent.
  const Indifference x = SolveIndifference(b[0] - b[2] - b[1] + b[3], b[3] - b[2]);
  const Indifference y = SolveIndifference(a[0] - a[1] - a[2] + a[3], a[3] - a[1]);
  MixedNashResult out;
  if (x.kind == Indifference::Kind::kNoSolution || y.kind == Indifference::Kind::kNoSolution) {
    out.status = MixedNashResult::Status::kNone;
    out.reason = x.kind == Indifference::Kind::kNoSolution
                     ? "no mix of player 1 in (0,1) makes player 2 indifferent"
                     : "no mix of player 2 in (0,1) makes player 1 indifferent";
    return out;
  }
  if (x.kind == Indifference::Kind::kIdentity || y.kind == Indifference::Kind::kIdentity) {
    out.status = MixedNashResult::Status::kDegenerateFamily;
    out.reason = "an indifference equation holds identically; totally mixed equilibria form a family";
    return out;
  }
  out.status = MixedNashResult::Status::kUnique;
  out.point = MakeNashPoint(ProductStrategy({{x.value, 1 - x.value}, {y.value, 1 - y.value}}),
                            NashPoint::Kind::kMixed);
  out.reason = "unique solution of the indifference equations in the open square";
  return out;
}

bool VerifyNashOnSpohn(const GameForm& game, const NashPoint& q) {
  if (!(q.joint == TensorOfProduct(q.product))) {
    throw ArgumentError("joint strategy is not the tensor of the product strategy");
  }
  const auto& format = game.format();
  if (!(q.joint.format() == format)) throw ArgumentError("strategy format does not match the game");
  const bool on = OnSpohn(SpohnSystem(game), q.joint);

  bool rank_one = true;
  for (int i = 0; i < format.num_players(); ++i) {
    // Expected payoff of each own strategy against the others' product.
    RationalVector expected(format.strategies(i), Rational(0));
    for (std::size_t cell = 0; cell < format.num_cells(); ++cell) {
      const auto profile = format.Profile(cell);
      Rational weight = 1;
      for (int m = 0; m < format.num_players(); ++m) {
        if (m != i) weight *= q.product.distribution(m)[profile[m]];
      }
      expected[profile[i]] += game.payoff(i, cell) * weight;
    }
    const auto& own = q.product.distribution(i);
    for (int k = 0; k < format.strategies(i); ++k) {
      for (int k2 = k + 1; k2 < format.strategies(i); ++k2) {
        if (own[k] > 0 && own[k2] > 0 && expected[k] != expected[k2]) rank_one = false;
      }
    }
  }
  if (on != rank_one) throw InvariantViolation("Spohn equations and rank-one characterization disagree");
  return on;
}

std::optional<RationalVector> PositiveKernelExists(const JacobianMatrix& j) {
  const int n = static_cast<int>(j.format.num_cells());
  auto witness = PositiveCombination(KernelBasis(j.entries, n), n);
  if (witness) {
    const RationalVector image = Multiply(j.entries, *witness);
    const bool in_kernel = std::all_of(image.begin(), image.end(), [](const Rational& v) { return v == 0; });
    const bool positive = std::all_of(witness->begin(), witness->end(), [](const Rational& v) { return v >= 1; });
    if (!in_kernel || !positive) throw InvariantViolation("positive kernel witness failed its check");
  }
  return witness;
}

TangentVerdict TangentCriterion(const GameForm& game, const PureProfile& profile) {
  const auto& format = game.format();
  const JointStrategy p = JointStrategy::Pure(format, profile.choices);
  const JacobianMatrix j = Jacobian(game, p);
  const JacobianRank rk = RankAndKernel(j);
  TangentVerdict out;
  out.profile = profile;
  out.rank = rk.rank;
  for (int d : format.dims()) out.required_rank += d - 1;
  out.smooth = out.rank == out.required_rank;
  out.witness = PositiveKernelExists(j);
  out.positive_kernel = out.witness.has_value();
  out.pure_de_certified = out.smooth && out.positive_kernel;
  const std::string where = "at " + ProfileText(profile) + ": ";
  if (out.pure_de_certified) {
    out.reason = where + "smooth point with a strictly positive tangent vector; certified pure DE";
  } else if (!out.smooth) {
    out.reason = where + "Jacobian rank " + std::to_string(out.rank) + " differs from " +
                 std::to_string(out.required_rank) + "; criterion not applicable";
  } else {
    out.reason = where + "smooth, but the tangent space has no strictly positive vector";
  }
  return out;
}

std::string ToString(LowerBound v) {
  switch (v) {
    case LowerBound::kYes: return "yes";
    case LowerBound::kNo: return "no";
    case LowerBound::kIndeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::string ToString(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::kYes: return "yes";
    case LimitVerdict::kNo: return "no";
    case LimitVerdict::kUnknown: return "unknown";
  }
  return "unknown";
}

DeMembership DecideDeMembership(const GameForm& game, const JointStrategy& p,
                                const Classification2x2* classification) {
  const SpohnSystem sys(game);
  DeMembership out;
  out.on_spohn = OnSpohn(sys, p);
  out.w_hits = InW(sys, p);
  out.in_w = !out.w_hits.empty();
  out.in_simplex = p.IsNonNegative() && p.Sum() == 1;
  out.upper_bound = out.on_spohn && out.in_simplex;

  auto& why = out.reasons;
  why.push_back(out.on_spohn ? "all Spohn equations vanish at p" : "some Spohn equation is nonzero at p");
  why.push_back(out.in_simplex ? "p lies in the probability simplex"
                               : "p is not a probability distribution (negative entry or sum not 1)");
  if (out.in_w) {
    std::string hits;
    for (const auto& [i, k] : out.w_hits) {
      if (!hits.empty()) hits += ", ";
      hits += "(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")";
    }
    why.push_back("p lies in W: vanishing marginals " + hits);
  } else {
    why.push_back("p is outside W: every conditional payoff is defined");
  }

  if (!out.upper_bound) {
    out.lower_bound = LowerBound::kNo;
    why.push_back("lower bound no: p is not a non-negative real point of V");
  } else if (!out.in_w) {
    out.lower_bound = LowerBound::kYes;
    why.push_back("lower bound yes: p lies on V outside W");
  } else if (classification == nullptr) {
    out.lower_bound = LowerBound::kIndeterminate;
    why.push_back("lower bound indeterminate: p lies in W and no structural classification is available");
  } else if (classification->generic) {
    out.lower_bound = LowerBound::kYes;
    why.push_back("lower bound yes: the game is generic, so no component of V lies in W");
  } else if (classification->lower_bound_equals_spohn) {
    out.lower_bound = LowerBound::kYes;
    why.push_back("lower bound yes: in case " + CaseLabel(classification->case_label) +
                  " no component of V lies in W");
  } else if (classification->case_label == Case2x2::kC3d) {
    out.lower_bound = LowerBound::kIndeterminate;
    why.push_back("lower bound indeterminate: the components of this C3d curve are not computed");
  } else {
    bool any = false, yes = false, all_in_w = true;
    for (const auto& c : classification->known_components) {
      const bool through = std::all_of(c.generators.begin(), c.generators.end(),
                                       [&p](const MultiPoly& g) { return g.Evaluate(p.coords()) == 0; });
      if (!through) continue;
      any = true;
      if (!c.in_w && c.resolved) yes = true;
      if (!c.in_w) all_in_w = false;
    }
    if (yes) {
      out.lower_bound = LowerBound::kYes;
      why.push_back("lower bound yes: p lies on an irreducible component of V not contained in W");
    } else if (any && all_in_w) {
      out.lower_bound = LowerBound::kNo;
      why.push_back("lower bound no: every component of V through p is contained in W");
    } else {
      out.lower_bound = LowerBound::kIndeterminate;
      why.push_back("lower bound indeterminate: a component through p is not resolved");
    }
  }

  if (!out.in_w && out.upper_bound) {
    out.spohn_limit_de = LimitVerdict::kYes;
    why.push_back("limit DE yes: outside W the conditional payoffs are equal at p itself");
  } else if (!out.upper_bound) {
    out.spohn_limit_de = LimitVerdict::kNo;
    why.push_back("limit DE no: every DE is a non-negative real point of V");
  } else {
    out.spohn_limit_de = LimitVerdict::kUnknown;
    why.push_back("limit DE unknown: p lies in W and boundary limits are not analysed");
  }
  if (out.lower_bound == LowerBound::kYes && !out.upper_bound) {
    throw InvariantViolation("lower bound yes without upper bound");
  }
  return out;
}

}  // namespace spohnkit
