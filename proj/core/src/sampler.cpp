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
#include <map>
#include <numeric>
#include <set>

#include "spohnkit/classify2x2.hpp"
#include "spohnkit/errors.hpp"
#include "spohnkit/sampler.hpp"
#include "spohnkit/spohn.hpp"
#include "spohnkit/univariate.hpp"

namespace spohnkit {
namespace {

using Edge = std::pair<int, int>;

double Distance(const Point4& a, const Point4& b) {
  double d = 0;
  for (int c = 0; c < 4; ++c) d += (a[c] - b[c]) * (a[c] - b[c]);
  return std::sqrt(d);
}

double MaxNorm(const Point4& a, const Point4& b) {
  double d = 0;
  for (int c = 0; c < 4; ++c) d = std::max(d, std::fabs(a[c] - b[c]));
  return d;
}

// Greedy bijective nearest-neighbour matching within `radius`.
std::vector<Edge> GreedyMatch(const std::vector<SlicePoint>& a, const std::vector<SlicePoint>& b,
                              double radius) {
  struct Cand {
    double d;
    int i, j;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = Distance(a[i].p, b[j].p);
      if (d <= radius) cands.push_back({d, static_cast<int>(i), static_cast<int>(j)});
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.d < y.d; });
  std::vector<bool> used_a(a.size()), used_b(b.size());
  std::vector<Edge> out;
  for (const auto& c : cands) {
    if (used_a[c.i] || used_b[c.j]) continue;
    used_a[c.i] = used_b[c.j] = true;
    out.emplace_back(c.i, c.j);
  }
  return out;
}

// Pairs unmatched points of one slice that sit on the two branches of a fold.
void PairFolds(const std::vector<SlicePoint>& pts, const std::vector<bool>& matched, int offset,
               double radius, std::vector<Edge>& out) {
  std::vector<SlicePoint> rest;
  std::vector<int> ids;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!matched[i]) {
      rest.push_back(pts[i]);
      ids.push_back(static_cast<int>(i));
    }
  }
  struct Cand {
    double d;
    int i, j;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      const double d = Distance(rest[i].p, rest[j].p);
      if (d <= radius) cands.push_back({d, static_cast<int>(i), static_cast<int>(j)});
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.d < y.d; });
  std::vector<bool> used(rest.size());
  for (const auto& c : cands) {
    if (used[c.i] || used[c.j]) continue;
    used[c.i] = used[c.j] = true;
    out.emplace_back(offset + ids[c.i], offset + ids[c.j]);
  }
}

struct LinkResult {
  // Local ids: a's points, then b's points, then `extras`.
  std::vector<Edge> edges;
  // Curve ends found while refining between the two slices.
  std::vector<SlicePoint> extras;
};

class Linker {
 public:
  Linker(const GameForm& game, const SliceConfig& cfg, double radius)
      : game_(game), cfg_(cfg), radius_(radius) {}

  LinkResult Link(const SliceResult& a, const SliceResult& b) const {
    const int na = static_cast<int>(a.points.size());
    const int nb = static_cast<int>(b.points.size());
    const auto match = GreedyMatch(a.points, b.points, radius_);
    std::vector<bool> ma(na), mb(nb);
    LinkResult out;
    for (const auto& [i, j] : match) {
      ma[i] = mb[j] = true;
      out.edges.emplace_back(i, na + j);
    }
    const bool complete = std::all_of(ma.begin(), ma.end(), [](bool v) { return v; }) &&
                          std::all_of(mb.begin(), mb.end(), [](bool v) { return v; });
    if (complete || a.degenerate || b.degenerate || a.positive_dimensional || b.positive_dimensional) {
      return out;
    }
    if (ToDouble(b.t - a.t) <= cfg_.min_refine_step) {
      PairFolds(a.points, ma, 0, radius_, out.edges);
      PairFolds(b.points, mb, na, radius_, out.edges);
      return out;
    }
    const SliceResult mid = SliceSolve(game_, (a.t + b.t) / 2, cfg_);
    if (mid.degenerate || mid.positive_dimensional) return out;
    const int nm = static_cast<int>(mid.points.size());
    const LinkResult left = Link(a, mid);
    const LinkResult right = Link(mid, b);
    const int nl = static_cast<int>(left.extras.size());
    // Working ids: a | mid | b | left extras | right extras.
    const int base_b = na + nm, base_l = base_b + nb, base_r = base_l + nl;
    std::vector<SlicePoint> working;
    for (const auto* part : {&a.points, &mid.points, &b.points, &left.extras, &right.extras}) {
      working.insert(working.end(), part->begin(), part->end());
    }
    std::vector<std::vector<int>> adj(working.size());
    auto connect = [&](int u, int v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    };
    for (const auto& [u, v] : left.edges) {
      auto map = [&](int x) { return x < na ? x : x < na + nm ? x : base_l + (x - na - nm); };
      connect(map(u), map(v));
    }
    for (const auto& [u, v] : right.edges) {
      auto map = [&](int x) { return x < nm ? na + x : x < nm + nb ? base_b + (x - nm) : base_r + (x - nm - nb); };
      connect(map(u), map(v));
    }
    auto is_mid = [&](int v) { return v >= na && v < base_b; };
    // Output ids: a | b | extras, where extras are the old ones followed by
    // mid points at which a path stops.
    std::vector<int> out_id(working.size(), -1);
    for (int v = 0; v < na; ++v) out_id[v] = v;
    for (int v = 0; v < nb; ++v) out_id[base_b + v] = na + v;
    for (int v = base_l; v < static_cast<int>(working.size()); ++v) {
      out_id[v] = na + nb + static_cast<int>(out.extras.size());
      out.extras.push_back(working[v]);
    }
    auto id_of = [&](int v) {
      if (out_id[v] < 0) {
        out_id[v] = na + nb + static_cast<int>(out.extras.size());
        out.extras.push_back(working[v]);
      }
      return out_id[v];
    };
    std::set<Edge> contracted;
    for (int start = 0; start < static_cast<int>(working.size()); ++start) {
      if (is_mid(start)) continue;
      for (int first : adj[start]) {
        int prev = start, cur = first;
        std::set<int> seen{start};
        while (is_mid(cur) && !seen.count(cur)) {
          seen.insert(cur);
          int next = -1;
          for (int w : adj[cur]) {
            if (w != prev && !seen.count(w)) {
              next = w;
              break;
            }
          }
          if (next < 0) break;
          prev = cur;
          cur = next;
        }
        if (cur == start) continue;
        int u = id_of(start), v = id_of(cur);
        if (u > v) std::swap(u, v);
        contracted.insert({u, v});
      }
    }
    out.edges.assign(contracted.begin(), contracted.end());
    return out;
  }

 private:
  const GameForm& game_;
  const SliceConfig& cfg_;
  double radius_;
};

struct Graph {
  std::vector<CurvePoint> nodes;
  std::set<Edge> edges;

  int AddNode(int slice, const SlicePoint& p, double tol) {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (MaxNorm(nodes[k].p, p.p) <= tol) return static_cast<int>(k);
    }
    nodes.push_back({slice, p.p, p.residual, -1});
    return static_cast<int>(nodes.size()) - 1;
  }
  void AddEdge(int u, int v) {
    if (u == v) return;
    if (u > v) std::swap(u, v);
    edges.insert({u, v});
  }
};

struct SliceRun {
  std::vector<SliceResult> slices;
  int degenerate = 0;
};

SliceRun RunSlices(const GameForm& game, const SliceConfig& cfg) {
  SliceRun run;
  for (int k = 0; k <= cfg.slices; ++k) {
    run.slices.push_back(SliceSolve(game, Fraction(k, cfg.slices), cfg));
    if (run.slices.back().degenerate) ++run.degenerate;
  }
  return run;
}

void AddRun(const GameForm& game, const SliceConfig& cfg, const SliceRun& run, Graph& graph,
            double dedupe_tol) {
  const double radius = cfg.link_radius_factor / cfg.slices;
  std::vector<std::vector<int>> ids(run.slices.size());
  for (std::size_t k = 0; k < run.slices.size(); ++k) {
    for (const auto& pt : run.slices[k].points) {
      ids[k].push_back(graph.AddNode(static_cast<int>(k), pt, dedupe_tol));
    }
    for (const auto& [u, v] : run.slices[k].in_slice_links) graph.AddEdge(ids[k][u], ids[k][v]);
  }
  const Linker linker(game, cfg, radius);
  for (std::size_t k = 0; k + 1 < run.slices.size(); ++k) {
    const int na = static_cast<int>(ids[k].size());
    const int nb = static_cast<int>(ids[k + 1].size());
    const LinkResult link = linker.Link(run.slices[k], run.slices[k + 1]);
    std::vector<int> extra_ids;
    for (const auto& pt : link.extras) extra_ids.push_back(graph.AddNode(static_cast<int>(k), pt, dedupe_tol));
    auto global = [&](int x) {
      return x < na ? ids[k][x] : x < na + nb ? ids[k + 1][x - na] : extra_ids[x - na - nb];
    };
    for (const auto& [u, v] : link.edges) graph.AddEdge(global(u), global(v));
  }
}

// Orders nodes by (slice, coordinates) and remaps the edges.
void Canonicalize(Graph& graph) {
  std::vector<int> order(graph.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = graph.nodes[a];
    const auto& y = graph.nodes[b];
    if (x.slice != y.slice) return x.slice < y.slice;
    return x.p < y.p;
  });
  std::vector<int> remap(order.size());
  std::vector<CurvePoint> nodes;
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = static_cast<int>(k);
    nodes.push_back(graph.nodes[order[k]]);
  }
  std::set<Edge> edges;
  for (auto [u, v] : graph.edges) {
    u = remap[u];
    v = remap[v];
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  graph.nodes = std::move(nodes);
  graph.edges = std::move(edges);
}

// Splits the graph into maximal trails. At a branch node the incident edges
// are paired so that each trail continues in the most nearly straight
// direction.
void BuildSegments(const Graph& graph, CurveSample& out) {
  const int n = static_cast<int>(graph.nodes.size());
  const std::vector<Edge> edges(graph.edges.begin(), graph.edges.end());
  std::vector<std::vector<int>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(static_cast<int>(e));
    incident[edges[e].second].push_back(static_cast<int>(e));
  }
  auto other = [&](int e, int v) { return edges[e].first == v ? edges[e].second : edges[e].first; };
  // partner[v][e] = edge continuing e through v.
  std::vector<std::map<int, int>> partner(n);
  for (int v = 0; v < n; ++v) {
    auto inc = incident[v];
    if (inc.size() == 2) {
      partner[v][inc[0]] = inc[1];
      partner[v][inc[1]] = inc[0];
      continue;
    }
    if (inc.size() < 3) continue;
    auto direction = [&](int e) {
      Point4 d;
      const auto& p = graph.nodes[v].p;
      const auto& q = graph.nodes[other(e, v)].p;
      double norm = 0;
      for (int c = 0; c < 4; ++c) {
        d[c] = q[c] - p[c];
        norm += d[c] * d[c];
      }
      norm = std::sqrt(norm);
      for (auto& x : d) x = norm > 0 ? x / norm : 0;
      return d;
    };
    while (inc.size() >= 2) {
      double best = 2;
      std::size_t bi = 0, bj = 1;
      for (std::size_t i = 0; i < inc.size(); ++i) {
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
          const Point4 di = direction(inc[i]), dj = direction(inc[j]);
          double dot = 0;
          for (int c = 0; c < 4; ++c) dot += di[c] * dj[c];
          if (dot < best - 1e-12) {
            best = dot;
            bi = i;
            bj = j;
          }
        }
      }
      partner[v][inc[bi]] = inc[bj];
      partner[v][inc[bj]] = inc[bi];
      inc.erase(inc.begin() + bj);
      inc.erase(inc.begin() + bi);
    }
  }

  std::vector<bool> used(edges.size());
  auto walk = [&](int start_node, int start_edge) {
    std::vector<int> trail{start_node};
    int v = start_node, e = start_edge;
    while (e >= 0 && !used[e]) {
      used[e] = true;
      v = other(e, v);
      trail.push_back(v);
      auto it = partner[v].find(e);
      e = it == partner[v].end() ? -1 : it->second;
    }
    return trail;
  };
  // Open trails start at edge ends without a partner.
  for (int v = 0; v < n; ++v) {
    for (int e : incident[v]) {
      if (!used[e] && !partner[v].count(e)) out.segments.push_back(walk(v, e));
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!used[e]) out.segments.push_back(walk(edges[e].first, static_cast<int>(e)));
  }
  for (int v = 0; v < n; ++v) {
    if (incident[v].empty()) out.isolated.push_back(v);
  }
}

CurveSample SampleSurface(const GameForm& game, const SliceConfig& cfg, Case2x2 label) {
  CurveSample out;
  out.case_label = CaseLabel(label);
  out.slices = cfg.surface_grid;
  out.slice_variable = 0;
  out.surface = true;
  const SpohnSystem sys(game);
  const auto& eqs = sys.equations();
  const int n = cfg.surface_grid;
  const Rational tol = Rational(1) / Rational(mpz_class("10000000"));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const Rational p11(i, n), p12(j, n);
      const Rational rest = 1 - p11 - p12;
      // p21 = z, p22 = rest - z
      std::vector<UniPoly> restricted;
      for (const auto& eq : eqs) {
        const MultiPoly& z = sys.zero();
        const MultiPoly var = MultiPoly::Variable(z, 2);
        const MultiPoly sub = eq.SubstituteLinear({{0, MultiPoly::Constant(z, p11)},
                                                   {1, MultiPoly::Constant(z, p12)},
                                                   {3, MultiPoly::Constant(z, rest) - var}});
        restricted.push_back(sub.ToUniPoly(2));
      }
      std::vector<Rational> zs;
      const UniPoly g = Gcd(restricted[0], restricted[1]);
      if (g.IsZero()) {
        for (int k = 0; Fraction(k, n) <= rest; ++k) zs.push_back(Fraction(k, n));
      } else if (g.Degree() >= 1) {
        for (const auto& box : IsolateRealRoots(g, -tol, rest + tol)) zs.push_back((box.lo + box.hi) / 2);
      }
      for (const auto& zv : zs) {
        Point4 p{ToDouble(p11), ToDouble(p12), ToDouble(zv), ToDouble(rest - zv)};
        bool ok = true;
        for (auto& x : p) {
          if (x < -cfg.boundary_tol) ok = false;
          if (x < 0) x = 0;
        }
        if (!ok) continue;
        const std::vector<long double> v(p.begin(), p.end());
        long double r = 0;
        for (const auto& eq : eqs) r = std::max(r, std::fabs(eq.Evaluate(v)));
        if (!(r <= cfg.residual_tol)) continue;
        out.points.push_back({i, p, static_cast<double>(r), -1});
      }
    }
  }
  std::stable_sort(out.points.begin(), out.points.end(), [](const CurvePoint& a, const CurvePoint& b) {
    if (a.slice != b.slice) return a.slice < b.slice;
    return a.p < b.p;
  });
  return out;
}

}  // namespace

CurveSample SampleCurve(const GameForm& game, const SliceConfig& cfg) {
  if (!game.format().Is2x2()) throw ArgumentError("the sampler needs a 2x2 game");
  cfg.Validate();
  const Classification2x2 cls = Classify(game);
  if (IsSurfaceCase(cls.case_label)) return SampleSurface(game, cfg, cls.case_label);

  CurveSample out;
  out.case_label = CaseLabel(cls.case_label);
  out.slices = cfg.slices;
  out.slice_variable = cfg.slice_variable;

  constexpr double kDedupe = 1e-8;
  Graph graph;
  const SliceRun primary = RunSlices(game, cfg);
  for (const auto& s : primary.slices) out.eliminant_degrees.push_back(s.eliminant_degree);
  out.degenerate_slices = primary.degenerate;
  AddRun(game, cfg, primary, graph, kDedupe);
  if (primary.degenerate > cfg.fallback_fraction * (cfg.slices + 1)) {
    SliceConfig alt = cfg;
    alt.slice_variable = 1 - cfg.slice_variable;
    const SliceRun secondary = RunSlices(game, alt);
    AddRun(game, alt, secondary, graph, kDedupe);
    out.used_fallback = true;
  }

  // Pure strategies always lie on V.
  for (int c = 0; c < 4; ++c) {
    SlicePoint pt;
    pt.p = {0, 0, 0, 0};
    pt.p[c] = 1;
    graph.AddNode(c == cfg.slice_variable ? cfg.slices : 0, pt, kDedupe);
  }

  Canonicalize(graph);
  out.points = graph.nodes;
  BuildSegments(graph, out);
  for (std::size_t s = 0; s < out.segments.size(); ++s) {
    for (int v : out.segments[s]) {
      if (out.points[v].segment < 0) out.points[v].segment = static_cast<int>(s);
    }
  }
  return out;
}

}  // namespace spohnkit
