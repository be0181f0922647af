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

#include "spohnkit/classify2x2.hpp"

#include <algorithm>

#include "spohnkit/errors.hpp"
#include "spohnkit/linalg.hpp"

namespace spohnkit {
namespace {

constexpr int kP11 = 0;
constexpr int kP12 = 1;
constexpr int kP21 = 2;
constexpr int kP22 = 3;

void Require2x2(const GameForm& game) {
  if (!game.format().Is2x2()) throw ArgumentError("the 2x2 classification needs a 2x2 game");
}

// Payoff entries x_ij of one player, 1-based as in the usual notation.
struct Table {
  Rational x11, x12, x21, x22;

  explicit Table(const RationalVector& v) : x11(v[0]), x12(v[1]), x21(v[2]), x22(v[3]) {}
  bool Constant() const { return x11 == x12 && x11 == x21 && x11 == x22; }
};

RationalVector LinearCoefficients(const MultiPoly& f) {
  if (f.Degree() > 1 || f.ConstantTerm() != 0) throw ArgumentError("expected a linear form");
  RationalVector out(f.num_vars());
  for (int v = 0; v < f.num_vars(); ++v) {
    Exponent e(f.num_vars(), 0);
    e[v] = 1;
    out[v] = f.Coefficient(e);
  }
  return out;
}

MultiPoly LinearForm(const MultiPoly& like, const RationalVector& c) {
  MultiPoly out(like.var_list(), {});
  for (int v = 0; v < like.num_vars(); ++v) {
    if (c[v] != 0) out += c[v] * MultiPoly::Variable(like, v);
  }
  return out;
}

int SpanRank(const std::vector<MultiPoly>& forms) {
  Matrix m;
  for (const auto& f : forms) m.push_back(LinearCoefficients(f));
  return BareissRank(m);
}

bool SameSpan(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  std::vector<MultiPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int r = SpanRank(both);
  return r == SpanRank(a) && r == SpanRank(b);
}

// Some W form vanishes on the linear space cut out by `forms`.
bool LinearSpaceInW(const SpohnSystem& sys, const std::vector<MultiPoly>& forms) {
  const int r = SpanRank(forms);
  for (const auto& w : sys.w_planes()) {
    std::vector<MultiPoly> with = forms;
    with.push_back(w.form);
    if (SpanRank(with) == r) return true;
  }
  return false;
}

bool IsWForm(const SpohnSystem& sys, const MultiPoly& f) {
  return std::any_of(sys.w_planes().begin(), sys.w_planes().end(),
                     [&f](const WPlane& w) { return Proportional(f, w.form); });
}

// Factors of a reducible bilinear payoff polynomial. For player 1 the form
// is bilinear in (p11, p12) x (p21, p22); it splits iff a11 = a12 or
// a21 = a22. For player 2 it is bilinear in (p11, p21) x (p12, p22) and
// splits iff b11 = b21 or b12 = b22. The product of the returned factors is
// exactly f.
std::vector<MultiPoly> FactorPlayer1(const MultiPoly& z, const Table& a) {
  const RationalVector zero4(4, Rational(0));
  if (a.x11 == a.x12) {
    RationalVector w = zero4, l = zero4;
    w[kP11] = 1;
    w[kP12] = 1;
    l[kP21] = a.x11 - a.x21;
    l[kP22] = a.x11 - a.x22;
    return {LinearForm(z, w), LinearForm(z, l)};
  }
  RationalVector l = zero4, w = zero4;
  l[kP11] = a.x11 - a.x21;
  l[kP12] = a.x12 - a.x21;
  w[kP21] = 1;
  w[kP22] = 1;
  return {LinearForm(z, l), LinearForm(z, w)};
}

std::vector<MultiPoly> FactorPlayer2(const MultiPoly& z, const Table& b) {
  const RationalVector zero4(4, Rational(0));
  if (b.x11 == b.x21) {
    RationalVector w = zero4, l = zero4;
    w[kP11] = 1;
    w[kP21] = 1;
    l[kP12] = b.x11 - b.x12;
    l[kP22] = b.x11 - b.x22;
    return {LinearForm(z, w), LinearForm(z, l)};
  }
  RationalVector l = zero4, w = zero4;
  l[kP11] = b.x11 - b.x12;
  l[kP21] = b.x21 - b.x12;
  w[kP12] = 1;
  w[kP22] = 1;
  return {LinearForm(z, l), LinearForm(z, w)};
}

MultiPoly Product(const std::vector<MultiPoly>& factors, const MultiPoly& like) {
  MultiPoly out = MultiPoly::Constant(like, 1);
  for (const auto& f : factors) out = out * f;
  return out;
}

std::vector<InWEntry> TriggerEntries(const SpohnSystem& sys, const Table& a, const Table& b,
                                     const MultiPoly& fa, const MultiPoly& fb) {
  const MultiPoly& z = sys.zero();
  auto var = [&z](int v) { return MultiPoly::Variable(z, v); };
  const MultiPoly w11_12 = var(kP11) + var(kP12);
  const MultiPoly w21_22 = var(kP21) + var(kP22);
  const MultiPoly w11_21 = var(kP11) + var(kP21);
  const MultiPoly w12_22 = var(kP12) + var(kP22);
  std::vector<InWEntry> out;
  auto add = [&out](int player, int strategy, const MultiPoly& plane, bool fires,
                    std::string trigger, std::string kind, std::vector<MultiPoly> gens) {
    if (!fires) return;
    out.push_back({player, strategy, plane, std::move(trigger), std::move(kind), std::move(gens), false});
  };
  // Plane p11+p12 (player 1, strategy 1) and plane p21+p22 (player 1, strategy 2).
  add(0, 0, w11_12, a.x11 == a.x12, "a11 = a12", "conic", {w11_12, fb});
  add(0, 0, w11_12, b.x21 == b.x22, "b21 = b22", "line", {var(kP11), var(kP12)});
  add(0, 0, w11_12, b.x11 == b.x12 && b.x21 == b.x22, "b11 = b12 and b21 = b22", "line",
      {w11_12, w21_22});
  add(0, 1, w21_22, a.x21 == a.x22, "a21 = a22", "conic", {w21_22, fb});
  add(0, 1, w21_22, b.x11 == b.x12, "b11 = b12", "line", {var(kP21), var(kP22)});
  add(0, 1, w21_22, b.x11 == b.x12 && b.x21 == b.x22, "b11 = b12 and b21 = b22", "line",
      {w21_22, w11_12});
  // Plane p11+p21 (player 2, strategy 1) and plane p12+p22 (player 2, strategy 2).
  add(1, 0, w11_21, b.x11 == b.x21, "b11 = b21", "conic", {w11_21, fa});
  add(1, 0, w11_21, a.x12 == a.x22, "a12 = a22", "line", {var(kP11), var(kP21)});
  add(1, 0, w11_21, a.x11 == a.x21 && a.x12 == a.x22, "a11 = a21 and a12 = a22", "line",
      {w11_21, w12_22});
  add(1, 1, w12_22, b.x12 == b.x22, "b12 = b22", "conic", {w12_22, fa});
  add(1, 1, w12_22, a.x11 == a.x21, "a11 = a21", "line", {var(kP12), var(kP22)});
  add(1, 1, w12_22, a.x11 == a.x21 && a.x12 == a.x22, "a11 = a21 and a12 = a22", "line",
      {w12_22, w11_21});
  return out;
}

// Every generator of `set` lies in the ideal of the linear component, so
// the set contains that component.
bool ContainsComponent(const std::vector<MultiPoly>& set, const Component& component) {
  if (component.generators.empty()) {
    return std::all_of(set.begin(), set.end(), [](const MultiPoly& g) { return g.IsZero(); });
  }
  for (const auto& g : set) {
    if (g.IsZero()) continue;
    if (!IdealMembershipBounded(g, component.generators, std::max(g.Degree() - 1, 0))) return false;
  }
  return true;
}

}  // namespace

std::string CaseLabel(Case2x2 c) {
  switch (c) {
    case Case2x2::kC1: return "C1";
    case Case2x2::kC2a: return "C2a";
    case Case2x2::kC2b: return "C2b";
    case Case2x2::kC3a: return "C3a";
    case Case2x2::kC3bPlaneLine: return "C3b-plane-line";
    case Case2x2::kC3bTwoLines: return "C3b-two-lines";
    case Case2x2::kC3c: return "C3c";
    case Case2x2::kC3d: return "C3d";
  }
  return "unknown";
}

bool IsSurfaceCase(Case2x2 c) {
  return c == Case2x2::kC1 || c == Case2x2::kC2a || c == Case2x2::kC2b || c == Case2x2::kC3a ||
         c == Case2x2::kC3bPlaneLine;
}

GenericityResult GenericityCheck(const GameForm& game) {
  Require2x2(game);
  const Table a(game.payoffs(0));
  const Table b(game.payoffs(1));
  GenericityResult out;
  auto check = [&out](const Rational& x, const Rational& y, const char* text) {
    if (x == y) out.violations.emplace_back(text);
  };
  check(a.x11, a.x12, "a11 ≠ a12");
  check(a.x11, a.x21, "a11 ≠ a21");
  check(a.x22, a.x21, "a22 ≠ a21");
  check(a.x22, a.x12, "a22 ≠ a12");
  check(b.x11, b.x12, "b11 ≠ b12");
  check(b.x11, b.x21, "b11 ≠ b21");
  check(b.x22, b.x21, "b22 ≠ b21");
  check(b.x22, b.x12, "b22 ≠ b12");
  out.generic = out.violations.empty();
  return out;
}

bool ConicIsIrreducible(const MultiPoly& plane, const MultiPoly& q) {
  const RationalVector l = LinearCoefficients(plane);
  int pivot = -1;
  for (int v = 0; v < plane.num_vars(); ++v) {
    if (l[v] != 0) {
      pivot = v;
      break;
    }
  }
  if (pivot < 0) throw ArgumentError("zero plane");
  MultiPoly repl(plane.var_list(), {});
  for (int v = 0; v < plane.num_vars(); ++v) {
    if (v != pivot && l[v] != 0) repl -= (l[v] / l[pivot]) * MultiPoly::Variable(plane, v);
  }
  const MultiPoly restricted = q.SubstituteLinear({{pivot, repl}});
  if (restricted.IsZero()) return false;
  std::vector<int> rest;
  for (int v = 0; v < plane.num_vars(); ++v) {
    if (v != pivot) rest.push_back(v);
  }
  Matrix sym(rest.size(), RationalVector(rest.size(), Rational(0)));
  for (const auto& [e, c] : restricted.terms()) {
    std::vector<int> idx;
    for (std::size_t r = 0; r < rest.size(); ++r) {
      for (int k = 0; k < e[rest[r]]; ++k) idx.push_back(static_cast<int>(r));
    }
    if (idx.size() != 2) throw ArgumentError("conic needs a quadratic form");
    if (idx[0] == idx[1]) {
      sym[idx[0]][idx[0]] += c;
    } else {
      sym[idx[0]][idx[1]] += c / 2;
      sym[idx[1]][idx[0]] += c / 2;
    }
  }
  return BareissRank(sym) == static_cast<int>(rest.size());
}

Classification2x2 Classify(const GameForm& game) {
  Require2x2(game);
  const SpohnSystem sys(game);
  const Table a(game.payoffs(0));
  const Table b(game.payoffs(1));
  const MultiPoly& z = sys.zero();

  Classification2x2 out;
  out.fa = -sys.equations()[0];
  out.fb = -sys.equations()[1];
  out.conditions = {
      a.x11 == a.x21 && a.x12 == a.x22 && b.x11 == b.x12 && b.x21 == b.x22,
      a.x11 == a.x21 && a.x11 == a.x22,
      a.x12 == a.x21 && a.x12 == a.x22,
      a.x11 == a.x22 && a.x12 == a.x22,
      a.x11 == a.x21 && a.x12 == a.x21,
      b.x11 == b.x12 && b.x11 == b.x22,
      b.x21 == b.x12 && b.x21 == b.x22,
      b.x11 == b.x22 && b.x21 == b.x22,
      b.x11 == b.x12 && b.x21 == b.x12,
  };

  const bool a_const = a.Constant();
  const bool b_const = b.Constant();
  out.fa_reducible = !a_const && (a.x11 == a.x12 || a.x21 == a.x22);
  out.fb_reducible = !b_const && (b.x11 == b.x21 || b.x12 == b.x22);
  if (out.fa_reducible) {
    out.fa_factors = FactorPlayer1(z, a);
  } else if (!out.fa.IsZero()) {
    out.fa_factors = {out.fa};
  }
  if (out.fb_reducible) {
    out.fb_factors = FactorPlayer2(z, b);
  } else if (!out.fb.IsZero()) {
    out.fb_factors = {out.fb};
  }
  if (!(Product(out.fa_factors, z) == (out.fa.IsZero() ? MultiPoly::Constant(z, 1) : out.fa)) ||
      !(Product(out.fb_factors, z) == (out.fb.IsZero() ? MultiPoly::Constant(z, 1) : out.fb))) {
    throw InvariantViolation("payoff polynomial factors do not multiply back");
  }

  auto add_component = [&out](std::string kind, std::vector<MultiPoly> gens, bool in_w,
                              bool resolved = true) {
    out.known_components.push_back({std::move(kind), std::move(gens), in_w, resolved});
  };

  if (a_const && b_const) {
    out.case_label = Case2x2::kC1;
    out.branch_note = "both payoff tables constant; both equations vanish identically";
    add_component("space", {}, false);
  } else if (a_const || b_const) {
    const bool reducible = a_const ? out.fb_reducible : out.fa_reducible;
    const auto& factors = a_const ? out.fb_factors : out.fa_factors;
    const std::string which = a_const ? "f_b" : "f_a";
    const std::string test = a_const ? "b11 = b21 or b12 = b22" : "a11 = a12 or a21 = a22";
    if (reducible) {
      out.case_label = Case2x2::kC2b;
      out.branch_note = std::string(a_const ? "A" : "B") + " constant; " + which +
                        " splits into two linear factors since " + test;
      for (const auto& f : factors) add_component("plane", {f}, IsWForm(sys, f));
    } else {
      out.case_label = Case2x2::kC2a;
      out.branch_note = std::string(a_const ? "A" : "B") + " constant; " + which +
                        " is irreducible since not (" + test + ")";
      add_component("quadric", {a_const ? out.fb : out.fa}, false);
    }
  } else if (out.conditions[0]) {
    out.case_label = Case2x2::kC3a;
    out.branch_note = "f_a and f_b are proportional";
    add_component("quadric", {out.fa}, false);
  } else if (out.fa_reducible && out.fb_reducible) {
    int shared_a = -1, shared_b = -1;
    for (int i = 0; i < 2 && shared_a < 0; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (Proportional(out.fa_factors[i], out.fb_factors[j])) {
          shared_a = i;
          shared_b = j;
          break;
        }
      }
    }
    if (shared_a >= 0) {
      out.case_label = Case2x2::kC3bPlaneLine;
      out.branch_note = "f_a and f_b share the linear factor " + out.fa_factors[shared_a].ToString();
      add_component("plane", {out.fa_factors[shared_a]}, IsWForm(sys, out.fa_factors[shared_a]));
      std::vector<MultiPoly> line = {out.fa_factors[1 - shared_a], out.fb_factors[1 - shared_b]};
      const bool in_w = LinearSpaceInW(sys, line);
      add_component("line", std::move(line), in_w);
    } else {
      out.case_label = Case2x2::kC3bTwoLines;
      out.branch_note = "f_a and f_b both split with no common factor";
      for (const auto& fa : out.fa_factors) {
        for (const auto& fb : out.fb_factors) {
          std::vector<MultiPoly> line = {fa, fb};
          const bool seen = std::any_of(out.known_components.begin(), out.known_components.end(),
                                        [&line](const Component& c) { return SameSpan(c.generators, line); });
          if (seen) continue;
          const bool in_w = LinearSpaceInW(sys, line);
          add_component("line", std::move(line), in_w);
        }
      }
    }
  } else if (out.fa_reducible || out.fb_reducible) {
    out.case_label = Case2x2::kC3c;
    const auto& planes = out.fa_reducible ? out.fa_factors : out.fb_factors;
    const MultiPoly& q = out.fa_reducible ? out.fb : out.fa;
    out.branch_note = out.fa_reducible ? "f_a splits, f_b is irreducible" : "f_b splits, f_a is irreducible";
    for (const auto& plane : planes) {
      add_component("conic", {plane, q}, IsWForm(sys, plane), ConicIsIrreducible(plane, q));
    }
  } else {
    out.case_label = Case2x2::kC3d;
    out.branch_note = "f_a and f_b are irreducible and not proportional";
  }

  out.components_in_w = TriggerEntries(sys, a, b, out.fa, out.fb);
  const bool curve_case = out.case_label == Case2x2::kC3bTwoLines ||
                          out.case_label == Case2x2::kC3c || out.case_label == Case2x2::kC3d;
  const bool linear_case = out.case_label == Case2x2::kC2b || out.case_label == Case2x2::kC3bPlaneLine;
  for (auto& entry : out.components_in_w) {
    if (curve_case) {
      entry.contains_v_component = true;
    } else if (linear_case) {
      entry.contains_v_component =
          std::any_of(out.known_components.begin(), out.known_components.end(),
                      [&entry](const Component& c) { return c.resolved && ContainsComponent(entry.generators, c); });
    }
  }

  const GenericityResult generic = GenericityCheck(game);
  out.generic = generic.generic;
  out.violations = generic.violations;
  if (out.generic != out.components_in_w.empty()) {
    throw InvariantViolation("genericity check and in-W analysis disagree");
  }

  switch (out.case_label) {
    case Case2x2::kC1:
    case Case2x2::kC2a:
    case Case2x2::kC3a:
      out.lower_bound_equals_spohn = true;
      break;
    case Case2x2::kC2b:
    case Case2x2::kC3bPlaneLine:
    case Case2x2::kC3bTwoLines:
      out.lower_bound_equals_spohn =
          std::none_of(out.known_components.begin(), out.known_components.end(),
                       [](const Component& c) { return c.in_w; });
      break;
    case Case2x2::kC3c:
    case Case2x2::kC3d:
      out.lower_bound_equals_spohn = out.components_in_w.empty();
      break;
  }
  return out;
}

std::vector<InWEntry> ComponentsInW(const GameForm& game) { return Classify(game).components_in_w; }

bool VerifyComponent(const SpohnSystem& sys, const std::vector<MultiPoly>& generators,
                     int degree_bound) {
  if (generators.empty()) {
    return std::all_of(sys.equations().begin(), sys.equations().end(),
                       [](const MultiPoly& eq) { return eq.IsZero(); });
  }
  for (const auto& eq : sys.equations()) {
    if (!IdealMembershipBounded(eq, generators, degree_bound)) return false;
  }
  return true;
}

}  // namespace spohnkit
