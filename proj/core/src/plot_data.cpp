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
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "spohnkit/errors.hpp"
#include "spohnkit/sampler.hpp"

namespace spohnkit {
namespace {

using nlohmann::json;

double Round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

std::string Format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", Round12(x));
  return buf;
}

// Rounded copy with points reordered by (slice, coordinates).
CurveSample Rounded(const CurveSample& in) {
  CurveSample out = in;
  for (auto& pt : out.points) {
    for (auto& x : pt.p) x = Round12(x);
    pt.residual = Round12(pt.residual);
  }
  std::vector<int> order(out.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = out.points[a];
    const auto& y = out.points[b];
    if (x.slice != y.slice) return x.slice < y.slice;
    return x.p < y.p;
  });
  std::vector<int> remap(order.size());
  std::vector<CurvePoint> points;
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = static_cast<int>(k);
    points.push_back(out.points[order[k]]);
  }
  out.points = std::move(points);
  for (auto& seg : out.segments) {
    for (auto& v : seg) v = remap[v];
  }
  for (auto& v : out.isolated) v = remap[v];
  std::sort(out.isolated.begin(), out.isolated.end());
  return out;
}

std::string VariableName(int v) { return v == 0 ? "p11" : "p12"; }

}  // namespace

std::string EmitPlotData(const GameForm& game, const CurveSample& sample, const std::string& format) {
  if (format != "json" && format != "csv") throw ArgumentError("unknown plot format '" + format + "'");
  const CurveSample s = Rounded(sample);
  if (format == "csv") {
    std::ostringstream os;
    os << "slice,p11,p12,p21,p22,residual,segment_id\n";
    for (const auto& pt : s.points) {
      os << pt.slice;
      for (double x : pt.p) os << ',' << Format12(x);
      os << ',' << Format12(pt.residual) << ',' << pt.segment << '\n';
    }
    return os.str();
  }

  json doc;
  doc["game"] = json::parse(GameToJson(game));
  doc["case"] = s.case_label;
  doc["surface"] = s.surface;
  doc["config"] = {{"slices", s.slices},
                   {"slice_variable", VariableName(s.slice_variable)},
                   {"used_fallback", s.used_fallback},
                   {"degenerate_slices", s.degenerate_slices}};
  doc["eliminant_degrees"] = s.eliminant_degrees;
  json points = json::array();
  double max_residual = 0, sum_residual = 0;
  for (const auto& pt : s.points) {
    points.push_back({{"slice", pt.slice}, {"p", pt.p}, {"residual", pt.residual}, {"segment", pt.segment}});
    max_residual = std::max(max_residual, pt.residual);
    sum_residual += pt.residual;
  }
  doc["points"] = std::move(points);
  doc["segments"] = s.segments;
  doc["isolated"] = s.isolated;
  doc["residual_stats"] = {
      {"count", s.points.size()},
      {"max", max_residual},
      {"mean", Round12(s.points.empty() ? 0.0 : sum_residual / s.points.size())}};
  return doc.dump() + "\n";
}

PlotData LoadPlotJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid plot file: ") + e.what(), 0, "");
  }
  try {
    CurveSample s;
    s.case_label = doc.at("case").get<std::string>();
    s.surface = doc.at("surface").get<bool>();
    const auto& cfg = doc.at("config");
    s.slices = cfg.at("slices").get<int>();
    s.slice_variable = cfg.at("slice_variable").get<std::string>() == "p12" ? 1 : 0;
    s.used_fallback = cfg.at("used_fallback").get<bool>();
    s.degenerate_slices = cfg.at("degenerate_slices").get<int>();
    s.eliminant_degrees = doc.at("eliminant_degrees").get<std::vector<int>>();
    for (const auto& pt : doc.at("points")) {
      s.points.push_back({pt.at("slice").get<int>(), pt.at("p").get<Point4>(), pt.at("residual").get<double>(),
                          pt.at("segment").get<int>()});
    }
    s.segments = doc.at("segments").get<std::vector<std::vector<int>>>();
    s.isolated = doc.at("isolated").get<std::vector<int>>();
    return PlotData{ParseGame(doc.at("game").dump()), std::move(s)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed plot file: ") + e.what(), 0, "");
  }
}

}  // namespace spohnkit
