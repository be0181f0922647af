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

#ifndef SPOHNKIT_CLI_CLI_HPP_
#define SPOHNKIT_CLI_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "spohnkit/game.hpp"

namespace spohnkit::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInput = 3,
  kInternal = 4,
};

struct AnalyzeOptions {
  // Raw point strings, e.g. "1,0,0,0" or "1/2,0,0,1/2".
  std::vector<std::string> points;
  // Coordinate order of the points; empty means canonical.
  std::vector<std::string> order;
  bool tangent = false;
  std::optional<int> sample_slices;
  std::string out_path;
  std::string format = "json";
};

// Reads the points in the declared order and returns canonical joint
// strategies. Throws ArgumentError for a bad order or arity and
// ParseError for a bad coordinate.
std::vector<JointStrategy> ParsePoints(const StrategyFormat& format, const std::vector<std::string>& points,
                                       const std::vector<std::string>& order);

nlohmann::json EquationsReport(const GameForm& game);
nlohmann::json ClassificationReport(const GameForm& game);
// Full report; when sampling with an output path the plot file contents are
// returned through `plot_file`.
nlohmann::json AnalyzeReport(const GameForm& game, const AnalyzeOptions& options, std::string* plot_file);

std::string EquationsText(const GameForm& game);
std::string ClassificationText(const GameForm& game);

// Entry point shared by the executable and the tests; args excludes argv[0].
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spohnkit::cli

#endif  // SPOHNKIT_CLI_CLI_HPP_
