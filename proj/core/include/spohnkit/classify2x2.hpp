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

#ifndef SPOHNKIT_CLASSIFY2X2_HPP_
#define SPOHNKIT_CLASSIFY2X2_HPP_

#include <array>
#include <string>
#include <vector>

#include "spohnkit/game.hpp"
#include "spohnkit/poly.hpp"
#include "spohnkit/spohn.hpp"

namespace spohnkit {

// Structural cases of the Spohn variety V of a 2x2 game.
//   C1            both payoff tables constant, V = P^3
//   C2a / C2b     one table constant; V is an irreducible quadric / two planes
//   C3a           f_a and f_b proportional (the Segre quadric)
//   C3b-*         f_a and f_b both reducible; "plane-line" when they share
//                 a linear factor, "two-lines" otherwise
//   C3c           exactly one of f_a, f_b reducible
//   C3d           both irreducible and not proportional
enum class Case2x2 { kC1, kC2a, kC2b, kC3a, kC3bPlaneLine, kC3bTwoLines, kC3c, kC3d };

std::string CaseLabel(Case2x2 c);
// True for the cases in which V has a two-dimensional component.
bool IsSurfaceCase(Case2x2 c);

struct Component {
  // "space", "quadric", "plane", "line" or "conic".
  std::string kind;
  std::vector<MultiPoly> generators;
  // Contained in some W plane.
  bool in_w = false;
  // Known to be an irreducible component of V. A conic V(L, q) whose
  // restricted quadratic form is singular splits into lines that are not
  // resolved further.
  bool resolved = true;
};

// A positive-dimensional part of V inside one W plane, as found by the
// case analysis of the plane p11+p21 and its index-permuted analogues.
struct InWEntry {
  int player = 0;    // W plane p_{+k} of player 2 or p_{k+} of player 1, 0-based
  int strategy = 0;
  MultiPoly plane;
  std::string trigger;  // e.g. "b11 = b21"
  std::string kind;     // "conic" or "line"
  std::vector<MultiPoly> generators;
  // The set contains an irreducible component of V. False in the surface
  // cases where the set is a curve on a two-dimensional component.
  bool contains_v_component = false;
};

struct GenericityResult {
  bool generic = true;
  // Violated inequalities, e.g. "a11 ≠ a12".
  std::vector<std::string> violations;
};

struct Classification2x2 {
  Case2x2 case_label = Case2x2::kC3d;
  MultiPoly fa;  // -eq_{1,1,2}
  MultiPoly fb;  // -eq_{2,1,2}
  bool fa_reducible = false;
  bool fb_reducible = false;
  // Linear factors multiplying exactly to fa (fb) when reducible, else the
  // polynomial itself (empty when identically zero).
  std::vector<MultiPoly> fa_factors;
  std::vector<MultiPoly> fb_factors;
  // Truth values of the nine payoff-equality conditions (i) to (ix), in order.
  std::array<bool, 9> conditions{};
  // Which test fixed the case, e.g. how the C2a/C2b branch was decided.
  std::string branch_note;
  std::vector<Component> known_components;
  std::vector<InWEntry> components_in_w;
  bool generic = true;
  std::vector<std::string> violations;
  // No irreducible component of V lies in W, so V equals the closure of
  // V minus W and the non-negative real points of V are exactly the DE.
  bool lower_bound_equals_spohn = true;
};

// All functions throw ArgumentError for a game that is not 2x2.
Classification2x2 Classify(const GameForm& game);
GenericityResult GenericityCheck(const GameForm& game);
std::vector<InWEntry> ComponentsInW(const GameForm& game);

// V(generators) is contained in V: every Spohn equation is a certified
// member of the ideal of the generators at the given cofactor degree bound.
bool VerifyComponent(const SpohnSystem& sys, const std::vector<MultiPoly>& generators,
                     int degree_bound);

// A conic V(plane, q) is irreducible iff the ternary quadratic form obtained
// by restricting q to the plane is nonsingular. `plane` must be linear.
bool ConicIsIrreducible(const MultiPoly& plane, const MultiPoly& q);

}  // namespace spohnkit

#endif  // SPOHNKIT_CLASSIFY2X2_HPP_
