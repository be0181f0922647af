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

#ifndef SPOHNKIT_SAMPLER_HPP_
#define SPOHNKIT_SAMPLER_HPP_

#include <array>
#include <string>
#include <vector>

#include "spohnkit/game.hpp"
#include "spohnkit/rational.hpp"

namespace spohnkit {

using Point4 = std::array<double, 4>;

struct SliceConfig {
  int slices = 200;
  // Fixed coordinate of each slice plane: 0 (p11) or 1 (p12). p22 is always
  // eliminated through the sum constraint.
  int slice_variable = 0;
  double residual_tol = 1e-9;
  double boundary_tol = 1e-7;
  double link_radius_factor = 5.0;
  // Grid resolution per axis for surface cases.
  int surface_grid = 30;
  // Rerun with p12 slices when more than this fraction of slices is degenerate.
  double fallback_fraction = 0.10;
  // Smallest slice step used when refining a failed link.
  double min_refine_step = 1e-5;

  void Validate() const;
};

struct SlicePoint {
  Point4 p;
  double residual = 0.0;
};

struct SliceResult {
  Rational t;
  std::vector<SlicePoint> points;
  // Both restricted equations vanish identically on the slice plane.
  bool positive_dimensional = false;
  // The restricted equations share a curve; its points were sampled on a
  // sub-grid and are chained by `in_slice_links`.
  bool degenerate = false;
  std::vector<std::pair<int, int>> in_slice_links;
  // Degree of the eliminant in the first free coordinate; -1 when no
  // eliminant was formed.
  int eliminant_degree = -1;
};

// Real points of V in the slice {slice_variable = t} of the simplex. Throws
// ArgumentError for a non-2x2 game or t outside [0, 1].
SliceResult SliceSolve(const GameForm& game, const Rational& t, const SliceConfig& cfg = {});

struct CurvePoint {
  int slice = 0;
  Point4 p{};
  double residual = 0.0;
  int segment = -1;  // first segment through the point, -1 if none
};

struct CurveSample {
  std::string case_label;
  int slices = 0;
  int slice_variable = 0;
  std::vector<CurvePoint> points;
  std::vector<std::vector<int>> segments;
  std::vector<int> isolated;
  bool surface = false;
  // Per slice index; -1 where no eliminant was formed.
  std::vector<int> eliminant_degrees;
  int degenerate_slices = 0;
  bool used_fallback = false;
};

// Samples the real curve of V in the simplex: slices, links neighbours,
// assembles segments and isolated points. Surface cases sample a grid
// instead and set `surface`.
CurveSample SampleCurve(const GameForm& game, const SliceConfig& cfg = {});

// Plot file contents for format "json" or "csv". Points are rounded to 12
// significant digits and ordered by (slice, coordinates); throws
// ArgumentError for any other format.
std::string EmitPlotData(const GameForm& game, const CurveSample& sample, const std::string& format);

struct PlotData {
  GameForm game;
  CurveSample sample;
};

// Reads back a JSON plot file written by EmitPlotData.
PlotData LoadPlotJson(const std::string& text);

}  // namespace spohnkit

#endif  // SPOHNKIT_SAMPLER_HPP_
