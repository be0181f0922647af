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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spohnkit/classify2x2.hpp"
#include "spohnkit/equilibria.hpp"
#include "spohnkit/poly.hpp"
#include "spohnkit/sampler.hpp"
#include "spohnkit/spohn.hpp"
#include "spohnkit_cli/cli.hpp"
#include "test_support.hpp"

namespace spohnkit {
namespace {

using testing::P;

// Pinned tolerances.
constexpr int kCertificateBound1 = 1;
constexpr int kCertificateBound2 = 2;
constexpr double kFdStep = 1e-6;
constexpr double kFdRelTol = 1e-6;
constexpr double kEndpointTol = 1e-2;
constexpr double kResidualTol = 1e-9;
constexpr double kDegreeFraction = 0.90;

struct Outcome {
  bool ok = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Test-side evaluation of the minors from marginal masses and expected
// payoff sums: m_k U_k' - m_k' U_k for every player and pair k < k'.
struct MinorOracle {
  const GameForm& g;

  Rational Mass(int player, int k, const RationalVector& p) const {
    Rational m = 0;
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (g.format().Profile(c)[player] == k) m += p[c];
    }
    return m;
  }
  Rational Utility(int player, int k, const RationalVector& p) const {
    Rational u = 0;
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (g.format().Profile(c)[player] == k) u += p[c] * g.payoff(player, c);
    }
    return u;
  }
  Rational Value(const MinorIndex& ix, const RationalVector& p) const {
    return Mass(ix.player, ix.k, p) * Utility(ix.player, ix.k2, p) -
           Mass(ix.player, ix.k2, p) * Utility(ix.player, ix.k, p);
  }
  // Gradient of Value in the cell coordinates.
  RationalVector Gradient(const MinorIndex& ix, const RationalVector& p) const {
    const Rational mk = Mass(ix.player, ix.k, p), mk2 = Mass(ix.player, ix.k2, p);
    const Rational uk = Utility(ix.player, ix.k, p), uk2 = Utility(ix.player, ix.k2, p);
    RationalVector grad(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) {
      const int s = g.format().Profile(c)[ix.player];
      const Rational& u = g.payoff(ix.player, c);
      if (s == ix.k) grad[c] = uk2 - mk2 * u;
      if (s == ix.k2) grad[c] = mk * u - uk;
    }
    return grad;
  }
};

std::vector<MinorIndex> AllMinors(const StrategyFormat& f) {
  std::vector<MinorIndex> out;
  for (int i = 0; i < f.num_players(); ++i) {
    for (int k = 0; k < f.strategies(i); ++k) {
      for (int k2 = k + 1; k2 < f.strategies(i); ++k2) out.push_back({i, k, k2});
    }
  }
  return out;
}

Outcome Criterion1() {
  Outcome o;
  const SpohnSystem sys(testing::PrisonersDilemma());
  const MultiPoly& z = sys.zero();
  if (!VerifyComponent(sys, {P(z, "p12 - p21"), P(z, "p11*p21 + 9*p21^2 - 3*p11*p22 + 5*p21*p22")},
                       kCertificateBound1)) {
    o.Fail("component (p12 - p21, ...) not certified");
  }
  if (!VerifyComponent(sys, {P(z, "p11 - 5*p22"), P(z, "9*p12*p21 + 5*p12*p22 + 5*p21*p22 - 15*p22^2")},
                       kCertificateBound1)) {
    o.Fail("component (p11 - 5*p22, ...) not certified");
  }
  return o;
}

Outcome Criterion2() {
  Outcome o;
  const GameForm g = testing::MissingComponent();
  const SpohnSystem sys(g);
  const MultiPoly& z = sys.zero();
  // The two ideals in parameter form, specialised to this game.
  const Rational a1 = 1, a2 = -3, b1 = -1, b2 = 2, c = 0;
  const auto k = [&z](const Rational& x) { return MultiPoly::Constant(z, x); };
  const MultiPoly p11 = MultiPoly::Variable(z, 0), p12 = MultiPoly::Variable(z, 1);
  const MultiPoly p21 = MultiPoly::Variable(z, 2), p22 = MultiPoly::Variable(z, 3);
  const std::vector<MultiPoly> ideal_p = {
      p11 + p12, k(b1) * p12 * p12 + k(b1) * p12 * p22 + k(b2) * p21 * p22 - k(b2) * p12 * p22 -
                     k(c) * p12 * p12 - k(c) * p21 * p22};
  const std::vector<MultiPoly> ideal_q = {
      k(a1) * p21 - k(a1) * p22 + k(a2) * p22,
      k(b1) * p11 * p12 + k(b1) * p11 * p22 - k(b2) * p11 * p22 - k(b2) * p21 * p22 - k(c) * p11 * p12 +
          k(c) * p21 * p22};
  for (const auto& eq : sys.equations()) {
    if (!IdealMembershipBounded(eq, ideal_p, kCertificateBound2)) o.Fail("equation not in P: " + eq.ToString());
    if (!IdealMembershipBounded(eq, ideal_q, kCertificateBound2)) o.Fail("equation not in Q: " + eq.ToString());
  }
  const auto in_w = ComponentsInW(g);
  const bool flagged = std::any_of(in_w.begin(), in_w.end(), [&](const InWEntry& e) {
    return e.plane == p11 + p12 && e.contains_v_component;
  });
  if (!flagged) o.Fail("p11 + p12 component not flagged");
  return o;
}

// One forced equality per genericity inequality and the W plane it must
// trigger, in cells (p11, p12, p21, p22).
struct Family {
  int player;
  int x, y;
  std::vector<int> plane_cells;
};

Outcome Criterion3() {
  Outcome o;
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const GameForm g = testing::RandomGame(rng, {2, 2}, -3, 3);
    if (GenericityCheck(g).generic && !ComponentsInW(g).empty()) {
      o.Fail("generic game with a component in W");
      break;
    }
  }
  const std::vector<Family> families = {
      {0, 0, 1, {0, 1}}, {0, 2, 3, {2, 3}}, {0, 0, 2, {1, 3}}, {0, 1, 3, {0, 2}},
      {1, 0, 1, {2, 3}}, {1, 2, 3, {0, 1}}, {1, 0, 2, {0, 2}}, {1, 1, 3, {1, 3}},
  };
  std::uniform_int_distribution<int> entry(-3, 3);
  for (const auto& fam : families) {
    for (int trial = 0; trial < 100; ++trial) {
      RationalVector a(4), b(4);
      for (int c = 0; c < 4; ++c) {
        a[c] = entry(rng);
        b[c] = entry(rng);
      }
      RationalVector& t = fam.player == 0 ? a : b;
      t[fam.y] = t[fam.x];
      const GameForm g = GameForm::Bimatrix(a, b);
      const SpohnSystem sys(g);
      const MultiPoly plane =
          MultiPoly::Variable(sys.zero(), fam.plane_cells[0]) + MultiPoly::Variable(sys.zero(), fam.plane_cells[1]);
      bool hit = false;
      for (const auto& e : ComponentsInW(g)) {
        if (!(e.plane == plane)) continue;
        hit = true;
        if (!VerifyComponent(sys, e.generators, kCertificateBound1)) o.Fail("flagged set not inside V: " + e.trigger);
      }
      if (!hit) {
        o.Fail("family " + std::to_string(fam.player) + ":" + std::to_string(fam.x) + std::to_string(fam.y) +
               " did not trigger " + plane.ToString());
      }
      if (GenericityCheck(g).generic) o.Fail("forced game reported generic");
    }
  }
  return o;
}

// Pure equilibria by direct best-response comparison.
std::vector<PureProfile> OraclePure(const GameForm& g) {
  std::vector<PureProfile> out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const bool row_best = g.payoff(0, 2 * r + c) >= g.payoff(0, 2 * (1 - r) + c);
      const bool col_best = g.payoff(1, 2 * r + c) >= g.payoff(1, 2 * r + (1 - c));
      if (row_best && col_best) out.push_back(PureProfile{{r, c}});
    }
  }
  return out;
}

Outcome Criterion4() {
  Outcome o;
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 1000 && o.ok; ++trial) {
    const GameForm g = testing::RandomGame(rng, {2, 2}, -5, 5);
    const SpohnSystem sys(g);
    const auto pure = OraclePure(g);
    if (pure != PureNash(g)) o.Fail("pure equilibria differ from the oracle");
    for (const auto& pr : pure) {
      if (!OnSpohn(sys, JointStrategy::Pure(g.format(), pr.choices))) o.Fail("pure equilibrium off V");
    }
    const auto& a = g.payoffs(0);
    const auto& b = g.payoffs(1);
    const Rational da = a[0] - a[1] - a[2] + a[3], db = b[0] - b[2] - b[1] + b[3];
    const MixedNashResult lib = MixedNash2x2(g);
    if (da == 0 || db == 0) continue;
    const Rational q = (a[3] - a[1]) / da;  // column weight on strategy 1
    const Rational r = (b[3] - b[2]) / db;  // row weight on strategy 1
    const bool interior = q > 0 && q < 1 && r > 0 && r < 1;
    if (interior != (lib.status == MixedNashResult::Status::kUnique)) {
      o.Fail("mixed equilibrium status differs from the oracle");
      continue;
    }
    if (!interior) continue;
    const RationalVector tensor = {r * q, r * (1 - q), (1 - r) * q, (1 - r) * (1 - q)};
    if (lib.point->joint.coords() != tensor) o.Fail("mixed equilibrium differs from the oracle");
    if (!OnSpohn(sys, JointStrategy(g.format(), tensor))) o.Fail("mixed equilibrium off V");
    if (!VerifyNashOnSpohn(g, *lib.point)) o.Fail("VerifyNashOnSpohn false");
  }
  return o;
}

bool ClosedFormCertified(const GameForm& g, int r, int c) {
  const auto a = [&](int i, int j) { return g.payoff(0, 2 * i + j); };
  const auto b = [&](int i, int j) { return g.payoff(1, 2 * i + j); };
  const int r2 = 1 - r, c2 = 1 - c;
  return (a(r, c) - a(r2, c)) * (a(r, c) - a(r2, c2)) < 0 && (b(r, c) - b(r, c2)) * (b(r, c) - b(r2, c2)) < 0;
}

Outcome Criterion5() {
  Outcome o;
  std::mt19937 rng(5151);
  int games = 0;
  while (games < 1000) {
    const GameForm g = testing::RandomGame(rng, {2, 2}, -5, 5);
    // Relevant payoffs distinct: within each table's rows (player 1) and
    // columns (player 2), and across the diagonals.
    const auto& a = g.payoffs(0);
    const auto& b = g.payoffs(1);
    if (std::set<Rational>(a.begin(), a.end()).size() < 4 || std::set<Rational>(b.begin(), b.end()).size() < 4) {
      continue;
    }
    ++games;
    for (int cell = 0; cell < 4; ++cell) {
      const TangentVerdict v = TangentCriterion(g, PureProfile{{cell / 2, cell % 2}});
      if (v.pure_de_certified != ClosedFormCertified(g, cell / 2, cell % 2)) {
        o.Fail("disagreement at cell " + std::to_string(cell));
      }
    }
  }
  const GameForm pd = testing::PrisonersDilemma();
  for (int cell = 0; cell < 4; ++cell) {
    const bool expected = cell == 0 || cell == 3;
    if (TangentCriterion(pd, PureProfile{{cell / 2, cell % 2}}).pure_de_certified != expected) {
      o.Fail("PD certification pattern wrong");
    }
  }
  return o;
}

Outcome Criterion6() {
  Outcome o;
  std::mt19937 rng(6161);
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 2, 2}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const GameForm g = testing::RandomGame(rng, dims, -5, 5);
      const SpohnSystem sys(g);
      const RationalVector x = testing::RandomRationalPoint(rng, g.format().num_cells());
      const JointStrategy p = JointStrategy::Infer(g.format(), x);
      const JacobianMatrix closed = Jacobian(g, p);
      const JacobianMatrix symbolic = SymbolicJacobian(sys, p);
      if (closed.entries != symbolic.entries) o.Fail("symbolic and closed-form Jacobians differ");
      const MinorOracle oracle{g};
      if (closed.rows != AllMinors(g.format())) o.Fail("unexpected row order");
      for (std::size_t r = 0; r < closed.rows.size(); ++r) {
        if (closed.entries[r] != oracle.Gradient(closed.rows[r], x)) o.Fail("Jacobian differs from oracle gradient");
        std::vector<double> xd(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) xd[k] = x[k].get_d();
        for (std::size_t k = 0; k < x.size(); ++k) {
          std::vector<double> plus = xd, minus = xd;
          plus[k] += kFdStep;
          minus[k] -= kFdStep;
          const double fd = (sys.equations()[r].Evaluate(plus) - sys.equations()[r].Evaluate(minus)) / (2 * kFdStep);
          const double exact = closed.entries[r][k].get_d();
          if (std::abs(fd - exact) > kFdRelTol * std::max(1.0, std::abs(exact))) {
            o.Fail("finite difference mismatch " + std::to_string(fd) + " vs " + std::to_string(exact));
          }
        }
      }
    }
  }
  return o;
}

double MaxDiff(const Point4& a, const Point4& b) {
  double d = 0;
  for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

Outcome Criterion7() {
  Outcome o;
  SliceConfig cfg;
  cfg.slices = 200;
  const CurveSample pd = SampleCurve(testing::PrisonersDilemma(), cfg);
  if (pd.segments.size() != 2) o.Fail("PD segments: " + std::to_string(pd.segments.size()));
  const Point4 e11{1, 0, 0, 0}, e22{0, 0, 0, 1};
  bool found = false;
  for (const auto& seg : pd.segments) {
    const Point4& u = pd.points[seg.front()].p;
    const Point4& v = pd.points[seg.back()].p;
    found = found || (MaxDiff(u, e11) <= kEndpointTol && MaxDiff(v, e22) <= kEndpointTol) ||
            (MaxDiff(u, e22) <= kEndpointTol && MaxDiff(v, e11) <= kEndpointTol);
  }
  if (!found) o.Fail("no PD segment from (1,0,0,0) to (0,0,0,1)");
  for (const auto& pt : pd.points) {
    if (pt.residual > kResidualTol) o.Fail("PD residual " + std::to_string(pt.residual));
  }
  const CurveSample bos = SampleCurve(testing::BachOrStravinski(), cfg);
  if (bos.isolated.size() != 2 || bos.segments.size() != 2) {
    o.Fail("BoS isolated/segments: " + std::to_string(bos.isolated.size()) + "/" +
           std::to_string(bos.segments.size()));
  }
  return o;
}

Outcome Criterion8() {
  Outcome o;
  SliceConfig cfg;
  cfg.slices = 200;
  const CurveSample s = SampleCurve(testing::Game114(), cfg);
  const auto fours = std::count(s.eliminant_degrees.begin(), s.eliminant_degrees.end(), 4);
  const double fraction = static_cast<double>(fours) / static_cast<double>(s.eliminant_degrees.size());
  if (fraction < kDegreeFraction) o.Fail("degree-4 fraction " + std::to_string(fraction));
  return o;
}

Outcome Criterion9() {
  Outcome o;
  std::mt19937 rng(9191);
  const std::vector<std::vector<int>> formats = {{2, 2}, {2, 3}, {2, 2, 2}};
  for (int trial = 0; trial < 1000; ++trial) {
    const GameForm g = testing::RandomGame(rng, formats[trial % 3], -9, 9);
    const SpohnSystem sys(g);
    const MinorOracle oracle{g};
    for (std::size_t cell = 0; cell < g.format().num_cells(); ++cell) {
      const JointStrategy e = JointStrategy::Pure(g.format(), g.format().Profile(cell));
      if (!OnSpohn(sys, e)) o.Fail("pure strategy off V");
      for (const auto& ix : AllMinors(g.format())) {
        if (oracle.Value(ix, e.coords()) != 0) o.Fail("oracle minor nonzero at a pure strategy");
      }
    }
  }
  return o;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome Criterion10() {
  Outcome o;
  const std::string tmp = std::filesystem::temp_directory_path().string();
  for (const char* name : {"pd.json", "bos.json", "game114.json", "missing_component.json", "constant.json",
                           "three_player.json"}) {
    const std::string fixture = testing::FixturePath(name);
    const std::string out = tmp + "/spohnkit_acceptance_" + name;
    std::vector<std::vector<std::string>> runs = {{"analyze", fixture, "--tangent"}};
    if (std::string(name) != "three_player.json") {
      runs.push_back({"analyze", fixture, "--points", "1,0,0,0;1/4,1/4,1/4,1/4", "--sample", "200", "--out", out});
      runs.push_back({"analyze", fixture, "--sample", "50", "--out", out, "--format", "csv"});
    }
    for (const auto& args : runs) {
      std::string reports[2], files[2];
      for (int rep = 0; rep < 2; ++rep) {
        std::ostringstream so, se;
        const int code = cli::RunCli(args, so, se);
        if (code != 0) o.Fail(std::string(name) + ": exit " + std::to_string(code) + " " + se.str());
        reports[rep] = so.str();
        files[rep] = Slurp(out);
      }
      if (reports[0] != reports[1]) o.Fail(std::string(name) + ": report differs between runs");
      if (files[0] != files[1]) o.Fail(std::string(name) + ": sample file differs between runs");
    }
    std::filesystem::remove(out);
  }
  return o;
}

}  // namespace
}  // namespace spohnkit

int main() {
  using spohnkit::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 PD components certified at bound 1", spohnkit::Criterion1},
      {"2 missing-component ideals and in-W flag", spohnkit::Criterion2},
      {"3 genericity and forced W triggers", spohnkit::Criterion3},
      {"4 Nash equilibria lie on V", spohnkit::Criterion4},
      {"5 tangent criterion matches closed form", spohnkit::Criterion5},
      {"6 Jacobian symbolic, closed form, finite differences", spohnkit::Criterion6},
      {"7 PD and BoS curve samples", spohnkit::Criterion7},
      {"8 game 114 eliminant degree", spohnkit::Criterion8},
      {"9 pure strategies lie on V", spohnkit::Criterion9},
      {"10 deterministic reports and sample files", spohnkit::Criterion10},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %s (%.2fs)%s%s\n", outcome.ok ? "PASS" : "FAIL", name, secs,
                outcome.ok ? "" : ": ", outcome.detail.c_str());
    if (!outcome.ok) ++failures;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              total);
  return failures == 0 ? 0 : 1;
}
