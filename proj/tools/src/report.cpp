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
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "spohnkit/classify2x2.hpp"
#include "spohnkit/equilibria.hpp"
#include "spohnkit/errors.hpp"
#include "spohnkit/sampler.hpp"
#include "spohnkit/spohn.hpp"
#include "spohnkit_cli/cli.hpp"

namespace spohnkit::cli {
namespace {

using nlohmann::json;

json Rationals(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(ToString(x));
  return out;
}

json OneBased(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

json Machine(const MultiPoly& f) {
  json out = json::array();
  for (const auto& [e, c] : f.MachineForm()) out.push_back({e, c});
  return out;
}

json Polys(const std::vector<MultiPoly>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.ToString());
  return out;
}

std::string FormatText(const StrategyFormat& format) {
  std::string out;
  for (int d : format.dims()) out += (out.empty() ? "" : "x") + std::to_string(d);
  return out;
}

bool IsConstant(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == v.front(); });
}

std::vector<std::string> EquationNotes(const GameForm& game, const SpohnSystem& sys) {
  std::vector<std::string> notes;
  for (int i = 0; i < game.num_players(); ++i) {
    if (IsConstant(game.payoffs(i))) {
      notes.push_back("payoff table of player " + std::to_string(i + 1) +
                      " is constant; its equations vanish identically");
    }
  }
  const auto& eqs = sys.equations();
  if (!eqs.empty() && std::all_of(eqs.begin(), eqs.end(), [](const MultiPoly& f) { return f.IsZero(); })) {
    notes.push_back(game.format().Is2x2() ? "case C1: V is the whole projective space"
                                          : "V is the whole projective space");
  }
  return notes;
}

std::string MinorName(const MinorIndex& idx) {
  return "eq(" + std::to_string(idx.player + 1) + "," + std::to_string(idx.k + 1) + "," +
         std::to_string(idx.k2 + 1) + ")";
}

std::string Round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json ConditionalPayoffs(const GameForm& game, const JointStrategy& p) {
  json out = json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    json row = json::array();
    for (int k = 0; k < game.format().strategies(i); ++k) {
      if (Marginal(p, i, k) == 0) {
        row.push_back(nullptr);
      } else {
        row.push_back(ToString(ConditionalPayoff(game, p, i, k)));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

json ComponentJson(const Component& c) {
  return {{"kind", c.kind}, {"generators", Polys(c.generators)}, {"in_w", c.in_w}, {"resolved", c.resolved}};
}

json NashJson(const GameForm& game, const NashPoint& q) {
  json out;
  json product = json::array();
  for (const auto& d : q.product.distributions()) product.push_back(Rationals(d));
  out["product"] = std::move(product);
  out["joint"] = Rationals(q.joint.coords());
  out["on_spohn"] = VerifyNashOnSpohn(game, q);
  return out;
}

}  // namespace

std::vector<JointStrategy> ParsePoints(const StrategyFormat& format, const std::vector<std::string>& points,
                                       const std::vector<std::string>& order) {
  const auto names = CellVariableNames(format);
  std::vector<std::size_t> position(names.size());
  if (order.empty()) {
    for (std::size_t k = 0; k < names.size(); ++k) position[k] = k;
  } else {
    if (order.size() != names.size()) throw ArgumentError("--order must list every coordinate exactly once");
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto it = std::find(names.begin(), names.end(), order[k]);
      if (it == names.end()) throw ArgumentError("unknown coordinate '" + order[k] + "' in --order");
      position[k] = static_cast<std::size_t>(it - names.begin());
    }
    auto sorted = position;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ArgumentError("--order repeats a coordinate");
    }
  }
  std::vector<JointStrategy> out;
  for (const auto& text : points) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != names.size()) {
      throw ArgumentError("point '" + text + "' needs " + std::to_string(names.size()) + " coordinates");
    }
    RationalVector coords(names.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto s = parts[k];
      s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
      try {
        coords[position[k]] = ParseRational(s);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0, "--points");
      }
    }
    out.push_back(JointStrategy::Infer(format, coords));
  }
  return out;
}

json EquationsReport(const GameForm& game) {
  const SpohnSystem sys(game);
  json out;
  out["format"] = game.format().dims();
  out["variables"] = sys.variables();
  json eqs = json::array();
  for (std::size_t e = 0; e < sys.indices().size(); ++e) {
    const auto& idx = sys.indices()[e];
    const auto& f = sys.equations()[e];
    eqs.push_back({{"index", {idx.player + 1, idx.k + 1, idx.k2 + 1}},
                   {"text", f.ToString() + " = 0"},
                   {"machine", Machine(f)},
                   {"identically_zero", f.IsZero()}});
  }
  out["equations"] = std::move(eqs);
  json planes = json::array();
  for (const auto& w : sys.w_planes()) {
    planes.push_back({{"player", w.player + 1}, {"strategy", w.strategy + 1}, {"form", w.form.ToString()}});
  }
  out["w_planes"] = std::move(planes);
  out["s"] = sys.s().ToString();
  out["notes"] = EquationNotes(game, sys);
  return out;
}

std::string EquationsText(const GameForm& game) {
  const SpohnSystem sys(game);
  std::ostringstream os;
  os << "format: " << FormatText(game.format()) << "\n";
  os << "variables:";
  for (const auto& v : sys.variables()) os << " " << v;
  os << "\nequations:\n";
  for (std::size_t e = 0; e < sys.indices().size(); ++e) {
    os << "  " << MinorName(sys.indices()[e]) << ": " << sys.equations()[e].ToString() << " = 0\n";
  }
  os << "W planes:\n";
  std::string product;
  for (const auto& w : sys.w_planes()) {
    os << "  (" << w.player + 1 << "," << w.strategy + 1 << "): " << w.form.ToString() << "\n";
    product += (product.empty() ? "" : "*") + ("(" + w.form.ToString() + ")");
  }
  os << "s = " << product << "\n";
  for (const auto& note : EquationNotes(game, sys)) os << "note: " << note << "\n";
  return os.str();
}

json ClassificationReport(const GameForm& game) {
  const Classification2x2 c = Classify(game);
  static const char* kNumerals[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
  json conditions;
  for (int k = 0; k < 9; ++k) conditions[kNumerals[k]] = c.conditions[k];
  json known = json::array();
  for (const auto& comp : c.known_components) known.push_back(ComponentJson(comp));
  json in_w = json::array();
  for (const auto& e : c.components_in_w) {
    in_w.push_back({{"player", e.player + 1},
                    {"strategy", e.strategy + 1},
                    {"plane", e.plane.ToString()},
                    {"trigger", e.trigger},
                    {"kind", e.kind},
                    {"generators", Polys(e.generators)},
                    {"contains_v_component", e.contains_v_component}});
  }
  return {{"case", CaseLabel(c.case_label)},
          {"fa", c.fa.ToString()},
          {"fb", c.fb.ToString()},
          {"fa_reducible", c.fa_reducible},
          {"fb_reducible", c.fb_reducible},
          {"fa_factors", Polys(c.fa_factors)},
          {"fb_factors", Polys(c.fb_factors)},
          {"conditions", conditions},
          {"branch_note", c.branch_note},
          {"known_components", known},
          {"components_in_w", in_w},
          {"generic", c.generic},
          {"violations", c.violations},
          {"lower_bound_equals_spohn", c.lower_bound_equals_spohn}};
}

std::string ClassificationText(const GameForm& game) {
  const json r = ClassificationReport(game);
  std::ostringstream os;
  os << "case: " << r["case"].get<std::string>() << "\n";
  os << "f_a = " << r["fa"].get<std::string>() << "\n";
  os << "f_b = " << r["fb"].get<std::string>() << "\n";
  auto factors = [&](const char* name, const char* key, const char* flag) {
    os << name << (r[flag].get<bool>() ? " factors:" : " (irreducible):");
    for (const auto& f : r[key]) os << " (" << f.get<std::string>() << ")";
    os << "\n";
  };
  factors("f_a", "fa_factors", "fa_reducible");
  factors("f_b", "fb_factors", "fb_reducible");
  os << "conditions:";
  for (const auto& [k, v] : r["conditions"].items()) {
    if (v.get<bool>()) os << " (" << k << ")";
  }
  os << "\n";
  if (!r["branch_note"].get<std::string>().empty()) os << "note: " << r["branch_note"].get<std::string>() << "\n";
  os << "generic: " << (r["generic"].get<bool>() ? "true" : "false") << "\n";
  for (const auto& v : r["violations"]) os << "  violated: " << v.get<std::string>() << "\n";
  os << "components in W:" << (r["components_in_w"].empty() ? " none" : "") << "\n";
  for (const auto& e : r["components_in_w"]) {
    os << "  plane " << e["plane"].get<std::string>() << ", trigger " << e["trigger"].get<std::string>() << ", "
       << e["kind"].get<std::string>() << " V(";
    bool first = true;
    for (const auto& g : e["generators"]) {
      os << (first ? "" : ", ") << g.get<std::string>();
      first = false;
    }
    os << ")" << (e["contains_v_component"].get<bool>() ? "" : " [lies on a surface component]") << "\n";
  }
  os << "known components:\n";
  for (const auto& comp : r["known_components"]) {
    os << "  " << comp["kind"].get<std::string>() << " V(";
    bool first = true;
    for (const auto& g : comp["generators"]) {
      os << (first ? "" : ", ") << g.get<std::string>();
      first = false;
    }
    os << ")" << (comp["in_w"].get<bool>() ? " in W" : "") << (comp["resolved"].get<bool>() ? "" : " unresolved")
       << "\n";
  }
  os << "lower bound equals Spohn points: " << (r["lower_bound_equals_spohn"].get<bool>() ? "true" : "false")
     << "\n";
  return os.str();
}

json AnalyzeReport(const GameForm& game, const AnalyzeOptions& options, std::string* plot_file) {
  const auto& format = game.format();
  const bool is2x2 = format.Is2x2();
  json out;
  out["game"] = json::parse(GameToJson(game));
  const json eq = EquationsReport(game);
  out["equations"] = eq["equations"];
  out["w_planes"] = eq["w_planes"];
  out["notes"] = eq["notes"];

  std::optional<Classification2x2> classification;
  if (is2x2) {
    classification = Classify(game);
    out["classification"] = ClassificationReport(game);
  }

  json nash;
  json pure = json::array();
  for (const auto& profile : PureNash(game)) {
    std::vector<RationalVector> dists;
    for (int i = 0; i < format.num_players(); ++i) {
      RationalVector d(format.strategies(i), Rational(0));
      d[profile.choices[i]] = 1;
      dists.push_back(std::move(d));
    }
    json entry = NashJson(game, MakeNashPoint(ProductStrategy(dists), NashPoint::Kind::kPure));
    entry["profile"] = OneBased(profile.choices);
    entry["reason"] = "no player gains by a unilateral deviation";
    pure.push_back(std::move(entry));
  }
  nash["pure"] = std::move(pure);
  if (is2x2) {
    const MixedNashResult mixed = MixedNash2x2(game);
    static const char* kStatus[] = {"none", "unique", "degenerate-family"};
    json m = {{"status", kStatus[static_cast<int>(mixed.status)]}, {"reason", mixed.reason}};
    if (mixed.point) m.update(NashJson(game, *mixed.point));
    nash["mixed"] = std::move(m);
  }
  out["nash"] = std::move(nash);

  if (options.tangent) {
    json table = json::array();
    for (std::size_t cell = 0; cell < format.num_cells(); ++cell) {
      const TangentVerdict v = TangentCriterion(game, PureProfile{format.Profile(cell)});
      json row = {{"profile", OneBased(v.profile.choices)},
                  {"rank", v.rank},
                  {"required_rank", v.required_rank},
                  {"smooth", v.smooth},
                  {"positive_kernel", v.positive_kernel},
                  {"pure_de_certified", v.pure_de_certified},
                  {"reason", v.reason}};
      row["witness"] = v.witness ? Rationals(*v.witness) : json(nullptr);
      table.push_back(std::move(row));
    }
    out["tangent"] = std::move(table);
  }

  if (!options.points.empty()) {
    json pts = json::array();
    const auto joints = ParsePoints(format, options.points, options.order);
    for (std::size_t k = 0; k < joints.size(); ++k) {
      const auto& p = joints[k];
      const DeMembership d = DecideDeMembership(game, p, classification ? &*classification : nullptr);
      json hits = json::array();
      for (const auto& [i, s] : d.w_hits) hits.push_back({i + 1, s + 1});
      pts.push_back({{"input", options.points[k]},
                     {"p", Rationals(p.coords())},
                     {"on_spohn", d.on_spohn},
                     {"in_w", d.in_w},
                     {"w_hits", hits},
                     {"in_simplex", d.in_simplex},
                     {"upper_bound", d.upper_bound},
                     {"lower_bound", ToString(d.lower_bound)},
                     {"spohn_limit_de", ToString(d.spohn_limit_de)},
                     {"reasons", d.reasons},
                     {"conditional_payoffs", ConditionalPayoffs(game, p)}});
    }
    out["points"] = std::move(pts);
    out["point_order"] = options.order.empty() ? CellVariableNames(format) : options.order;
  }

  if (options.sample_slices) {
    if (!is2x2) throw ArgumentError("--sample needs a 2x2 game");
    SliceConfig cfg;
    cfg.slices = *options.sample_slices;
    const CurveSample s = SampleCurve(game, cfg);
    double max_residual = 0;
    for (const auto& pt : s.points) max_residual = std::max(max_residual, pt.residual);
    std::map<std::string, int> histogram;
    for (int d : s.eliminant_degrees) ++histogram[std::to_string(d)];
    json summary = {{"slices", s.slices},
                    {"case", s.case_label},
                    {"points", s.points.size()},
                    {"segments", s.segments.size()},
                    {"isolated", s.isolated.size()},
                    {"surface", s.surface},
                    {"max_residual", Round12(max_residual)},
                    {"degenerate_slices", s.degenerate_slices},
                    {"used_fallback", s.used_fallback},
                    {"eliminant_degrees", histogram}};
    if (!options.out_path.empty()) {
      summary["file"] = options.out_path;
      summary["format"] = options.format;
      if (plot_file != nullptr) *plot_file = EmitPlotData(game, s, options.format);
    } else {
      summary["file"] = nullptr;
    }
    out["sample"] = std::move(summary);
  }
  return out;
}

}  // namespace spohnkit::cli
