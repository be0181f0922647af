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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "spohnkit/errors.hpp"
#include "spohnkit/poly.hpp"
#include "spohnkit/sampler.hpp"
#include "spohnkit/spohn.hpp"
#include "spohnkit/univariate.hpp"

namespace spohnkit {
namespace {

constexpr int kP22 = 3;

// Polynomial in y with coefficients in Q[x]; index = power of y.
using BiPoly = std::vector<UniPoly>;

void TrimBi(BiPoly& f) {
  while (!f.empty() && f.back().IsZero()) f.pop_back();
}

BiPoly ToBi(const MultiPoly& f, int ix, int iy) {
  BiPoly out(std::max(f.DegreeIn(iy) + 1, 0));
  std::vector<RationalVector> dense(out.size());
  for (const auto& [e, c] : f.terms()) {
    auto& row = dense[e[iy]];
    if (static_cast<int>(row.size()) <= e[ix]) row.resize(e[ix] + 1, Rational(0));
    row[e[ix]] = c;
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = UniPoly(dense[k]);
  TrimBi(out);
  return out;
}

MultiPoly FromBi(const BiPoly& f, const MultiPoly& like, int ix, int iy) {
  MultiPoly::Terms terms;
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (int j = 0; j <= f[k].Degree(); ++j) {
      Exponent e(like.num_vars(), 0);
      e[ix] = j;
      e[iy] = static_cast<int>(k);
      terms.emplace(std::move(e), f[k].coeffs()[j]);
    }
  }
  return MultiPoly(like.var_list(), std::move(terms));
}

UniPoly Content(const BiPoly& f) {
  UniPoly g;
  for (const auto& c : f) g = Gcd(g, c);
  return g;
}

BiPoly DivideByContent(const BiPoly& f, const UniPoly& content) {
  BiPoly out;
  for (const auto& c : f) out.push_back(DivMod(c, content).first);
  return out;
}

// Pseudo-remainder of a by b in y.
BiPoly PseudoRemainder(BiPoly a, const BiPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const UniPoly lead_a = a.back();
    for (auto& c : a) c = b.back() * c;
    for (int k = 0; k <= db; ++k) a[k + shift] = a[k + shift] - lead_a * b[k];
    TrimBi(a);
  }
  return a;
}

// gcd in Q[x][y] by the primitive polynomial remainder sequence.
BiPoly BivariateGcd(BiPoly a, BiPoly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const UniPoly ca = Content(a);
  const UniPoly cb = Content(b);
  const UniPoly content = Gcd(ca, cb);
  a = DivideByContent(a, ca);
  b = DivideByContent(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  BiPoly primitive{UniPoly::Constant(1)};
  while (true) {
    if (b.size() <= 1) break;
    BiPoly r = PseudoRemainder(a, b);
    if (r.empty()) {
      primitive = b;
      break;
    }
    a = std::move(b);
    b = DivideByContent(r, Content(r));
  }
  for (auto& c : primitive) c = content * c;
  return primitive;
}

struct Frame {
  int s;       // slice coordinate
  int ix, iy;  // free coordinates, ix < iy
  long double t;
  std::array<long double, 4> Embed(long double x, long double y) const {
    std::array<long double, 4> p{};
    p[s] = t;
    p[ix] = x;
    p[iy] = y;
    p[kP22] = 1.0L - t - x - y;
    return p;
  }
};

long double Residual(const std::vector<MultiPoly>& eqs, const std::array<long double, 4>& p) {
  const std::vector<long double> v(p.begin(), p.end());
  long double r = 0;
  for (const auto& eq : eqs) r = std::max(r, std::fabs(eq.Evaluate(v)));
  return r;
}

// Clamps tiny negative coordinates, renormalizes, and keeps the point only
// if it still satisfies the residual tolerance.
std::optional<SlicePoint> Finalize(std::array<long double, 4> p, const std::vector<MultiPoly>& eqs,
                                   const SliceConfig& cfg) {
  for (auto& x : p) {
    if (x < -static_cast<long double>(cfg.boundary_tol)) return std::nullopt;
    if (x < 0) x = 0;
  }
  const long double sum = p[0] + p[1] + p[2] + p[3];
  for (auto& x : p) x /= sum;
  const long double r = Residual(eqs, p);
  if (!(r <= cfg.residual_tol)) return std::nullopt;
  SlicePoint out;
  for (int k = 0; k < 4; ++k) out.p[k] = static_cast<double>(p[k]);
  out.residual = static_cast<double>(r);
  return out;
}

long double CoefficientScale(const MultiPoly& f) {
  long double m = 1;
  for (const auto& [e, c] : f.terms()) m = std::max(m, std::fabs(ToLongDouble(c)));
  return m;
}

std::vector<long double> RootValues(const UniPoly& h, const Rational& lo, const Rational& hi) {
  std::vector<long double> out;
  for (const auto& box : IsolateRealRoots(h, lo, hi)) {
    if (box.IsExact()) {
      out.push_back(ToLongDouble(box.lo));
    } else {
      out.push_back(ToLongDouble((box.lo + box.hi) / 2));
    }
  }
  return out;
}

// Common real zeros of two coprime polynomials in (x, y).
std::vector<std::array<long double, 2>> SolveZeroDimensional(const MultiPoly& f, const MultiPoly& g,
                                                             int ix, int iy, const Rational& lo,
                                                             const Rational& hi, int* eliminant_degree) {
  std::vector<std::array<long double, 2>> out;
  if (f.IsZero() || g.IsZero()) return out;
  if (f.IsConstant() || g.IsConstant()) return out;
  const bool has_y = f.Involves(iy) || g.Involves(iy);
  const bool has_x = f.Involves(ix) || g.Involves(ix);
  if (!has_x || !has_y) return out;  // coprime univariate pair: no common root
  const MultiPoly hx = Resultant(f, g, iy);
  const MultiPoly hy = Resultant(f, g, ix);
  if (hx.IsZero() || hy.IsZero()) throw InvariantViolation("eliminant vanishes for coprime slice equations");
  if (eliminant_degree != nullptr) *eliminant_degree = hx.DegreeIn(ix);
  if (hx.IsConstant() || hy.IsConstant()) return out;
  const auto xs = RootValues(hx.ToUniPoly(ix), lo, hi);
  const auto ys = RootValues(hy.ToUniPoly(iy), lo, hi);

  const MultiPoly fx = f.PartialDerivative(ix), fy = f.PartialDerivative(iy);
  const MultiPoly gx = g.PartialDerivative(ix), gy = g.PartialDerivative(iy);
  const long double scale = std::max(CoefficientScale(f), CoefficientScale(g));
  auto eval = [&](const MultiPoly& p, long double x, long double y) {
    std::vector<long double> v(4, 0.0L);
    v[ix] = x;
    v[iy] = y;
    return p.Evaluate(v);
  };
  auto residual = [&](long double x, long double y) {
    return std::max(std::fabs(eval(f, x, y)), std::fabs(eval(g, x, y))) / scale;
  };
  for (long double x0 : xs) {
    for (long double y0 : ys) {
      if (residual(x0, y0) > 1e-6L) continue;
      long double x = x0, y = y0;
      long double best = residual(x, y);
      for (int iter = 0; iter < 8 && best > 0; ++iter) {
        const long double a = eval(fx, x, y), b = eval(fy, x, y);
        const long double c = eval(gx, x, y), d = eval(gy, x, y);
        const long double det = a * d - b * c;
        if (std::fabs(det) < 1e-14L * scale * scale) break;
        const long double u = eval(f, x, y), v = eval(g, x, y);
        const long double nx = x - (d * u - b * v) / det;
        const long double ny = y - (-c * u + a * v) / det;
        const long double r = residual(nx, ny);
        if (!(r < best)) break;
        x = nx;
        y = ny;
        best = r;
      }
      out.push_back({x, y});
    }
  }
  return out;
}

void SortAndDedupe(SliceResult& result, double tol) {
  std::vector<int> order(result.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return result.points[a].p < result.points[b].p; });
  std::vector<int> remap(result.points.size(), -1);
  std::vector<SlicePoint> sorted;
  for (int idx : order) {
    const auto& cand = result.points[idx];
    int found = -1;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      double d = 0;
      for (int c = 0; c < 4; ++c) d = std::max(d, std::fabs(sorted[k].p[c] - cand.p[c]));
      if (d <= tol) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(sorted.size());
      sorted.push_back(cand);
    } else if (cand.residual < sorted[found].residual) {
      sorted[found].residual = cand.residual;
    }
    remap[idx] = found;
  }
  std::vector<std::pair<int, int>> links;
  for (const auto& [a, b] : result.in_slice_links) {
    int u = remap[a], v = remap[b];
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    links.emplace_back(u, v);
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  result.points = std::move(sorted);
  result.in_slice_links = std::move(links);
}

// Greedy nearest-neighbour links between two columns of points.
void LinkColumns(const std::vector<int>& left, const std::vector<int>& right,
                 const std::vector<SlicePoint>& points, double radius,
                 std::vector<std::pair<int, int>>& links) {
  struct Cand {
    double d;
    int a, b;
  };
  std::vector<Cand> cands;
  for (int a : left) {
    for (int b : right) {
      double d = 0;
      for (int c = 0; c < 4; ++c) d += (points[a].p[c] - points[b].p[c]) * (points[a].p[c] - points[b].p[c]);
      d = std::sqrt(d);
      if (d <= radius) cands.push_back({d, a, b});
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.d < y.d; });
  std::vector<int> used_a, used_b;
  for (const auto& c : cands) {
    if (std::find(used_a.begin(), used_a.end(), c.a) != used_a.end()) continue;
    if (std::find(used_b.begin(), used_b.end(), c.b) != used_b.end()) continue;
    used_a.push_back(c.a);
    used_b.push_back(c.b);
    links.emplace_back(c.a, c.b);
  }
}

}  // namespace

void SliceConfig::Validate() const {
  if (slices < 2) throw ArgumentError("need at least 2 slices");
  if (slice_variable != 0 && slice_variable != 1) throw ArgumentError("slice variable must be p11 or p12");
  if (!(residual_tol > 0) || !(boundary_tol > 0)) throw ArgumentError("tolerances must be positive");
  if (!(link_radius_factor > 0)) throw ArgumentError("link radius factor must be positive");
  if (surface_grid < 1) throw ArgumentError("surface grid must be positive");
  if (!(min_refine_step > 0)) throw ArgumentError("refinement step must be positive");
}

SliceResult SliceSolve(const GameForm& game, const Rational& t_in, const SliceConfig& cfg) {
  Rational t = t_in;
  t.canonicalize();
  if (!game.format().Is2x2()) throw ArgumentError("the sampler needs a 2x2 game");
  if (t < 0 || t > 1) throw ArgumentError("slice parameter must lie in [0, 1]");
  cfg.Validate();
  const SpohnSystem sys(game);
  const std::vector<MultiPoly>& eqs = sys.equations();
  Frame frame;
  frame.s = cfg.slice_variable;
  frame.ix = frame.s == 0 ? 1 : 0;
  frame.iy = 2;
  frame.t = ToLongDouble(t);

  SliceResult result;
  result.t = t;
  if (t == 1) {
    std::array<long double, 4> vertex{};
    vertex[frame.s] = 1;
    if (auto pt = Finalize(vertex, eqs, cfg)) result.points.push_back(*pt);
    return result;
  }

  const MultiPoly& z = sys.zero();
  const MultiPoly x = MultiPoly::Variable(z, frame.ix);
  const MultiPoly y = MultiPoly::Variable(z, frame.iy);
  const MultiPoly tc = MultiPoly::Constant(z, t);
  const std::map<int, MultiPoly> subst = {{frame.s, tc}, {kP22, MultiPoly::Constant(z, 1 - t) - x - y}};
  const MultiPoly f = eqs[0].SubstituteLinear(subst);
  const MultiPoly g = eqs[1].SubstituteLinear(subst);
  if (f.IsZero() && g.IsZero()) {
    result.positive_dimensional = true;
    return result;
  }

  const Rational tol = Rational(1) / Rational(mpz_class("10000000"));
  const Rational lo = -tol;
  const Rational hi = 1 + tol;
  const BiPoly common = BivariateGcd(ToBi(f, frame.ix, frame.iy), ToBi(g, frame.ix, frame.iy));
  const MultiPoly c = FromBi(common, z, frame.ix, frame.iy);

  MultiPoly fr = f, gr = g;
  if (c.Degree() >= 1) {
    result.degenerate = true;
    auto qf = DivideExact(f, c);
    auto qg = DivideExact(g, c);
    if (!qf || !qg) throw InvariantViolation("slice gcd does not divide the slice equations");
    fr = *qf;
    gr = *qg;

    const int n = cfg.slices;
    const Rational width = 1 - t;
    const double radius = cfg.link_radius_factor / n;
    const UniPoly content = Content(common);
    const BiPoly primitive = DivideByContent(common, content);
    // Vertical lines x = x0 from the content.
    if (content.Degree() >= 1) {
      for (long double x0 : RootValues(content, lo, hi)) {
        int prev = -1;
        for (int j = 0; j <= n; ++j) {
          const long double yv = ToLongDouble(width * j / n);
          auto pt = Finalize(frame.Embed(x0, yv), eqs, cfg);
          if (!pt) {
            prev = -1;
            continue;
          }
          result.points.push_back(*pt);
          const int idx = static_cast<int>(result.points.size()) - 1;
          if (prev >= 0) result.in_slice_links.emplace_back(prev, idx);
          prev = idx;
        }
      }
    }
    // The remaining curve, sampled column by column.
    if (primitive.size() >= 2) {
      std::vector<int> previous_column;
      for (int j = 0; j <= n; ++j) {
        const Rational xj = width * j / n;
        RationalVector coeffs;
        for (const auto& cf : primitive) coeffs.push_back(cf.Evaluate(xj));
        const UniPoly column(coeffs);
        std::vector<int> current;
        if (column.Degree() >= 1) {
          for (const auto& box : IsolateRealRoots(column, lo, hi)) {
            long double yv = ToLongDouble((box.lo + box.hi) / 2);
            const UniPoly dcol = column.Derivative();
            for (int iter = 0; iter < 4 && !box.IsExact(); ++iter) {
              const long double d = dcol.Evaluate(yv);
              if (d == 0) break;
              yv -= column.Evaluate(yv) / d;
            }
            auto pt = Finalize(frame.Embed(ToLongDouble(xj), yv), eqs, cfg);
            if (!pt) continue;
            result.points.push_back(*pt);
            current.push_back(static_cast<int>(result.points.size()) - 1);
          }
        }
        LinkColumns(previous_column, current, result.points, radius, result.in_slice_links);
        previous_column = std::move(current);
      }
    }
  }

  const auto zeros = SolveZeroDimensional(fr, gr, frame.ix, frame.iy, lo, hi,
                                          result.degenerate ? nullptr : &result.eliminant_degree);
  for (const auto& [xv, yv] : zeros) {
    if (result.degenerate) {
      std::vector<long double> v(4, 0.0L);
      v[frame.ix] = xv;
      v[frame.iy] = yv;
      // Points on the shared curve are already covered by the sub-grid.
      if (std::fabs(c.Evaluate(v)) <= 1e-9L * CoefficientScale(c)) continue;
    }
    if (auto pt = Finalize(frame.Embed(xv, yv), eqs, cfg)) result.points.push_back(*pt);
  }
  SortAndDedupe(result, 1e-9);
  return result;
}

}  // namespace spohnkit
