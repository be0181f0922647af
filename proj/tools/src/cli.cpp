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
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "spohnkit/errors.hpp"
#include "spohnkit_cli/cli.hpp"

namespace spohnkit::cli {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read game file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> SplitList(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dependency equilibria and the Spohn variety of finite games", "spohn-kit"};
  app.require_subcommand(1);

  std::string file;
  bool json_output = false;
  auto* equations = app.add_subcommand("equations", "Print the Spohn equations, W planes and s");
  equations->add_option("file", file, "Game file (JSON)")->required();
  equations->add_flag("--json", json_output, "Emit JSON instead of text");

  auto* classify = app.add_subcommand("classify", "Classify a 2x2 game");
  classify->add_option("file", file, "Game file (JSON)")->required();
  classify->add_flag("--json", json_output, "Emit JSON instead of text");

  AnalyzeOptions options;
  std::vector<std::string> point_args;
  std::string order;
  int sample = 0;
  auto* analyze = app.add_subcommand("analyze", "Full JSON report");
  analyze->add_option("file", file, "Game file (JSON)")->required();
  analyze->add_option("--points", point_args,
                      "Joint strategies as comma-separated coordinates; separate several with ';'");
  analyze->add_flag("--tangent", options.tangent, "Tangent criterion at every pure strategy");
  auto* sample_opt = analyze->add_option("--sample", sample, "Sample the real curve with N slices")
                         ->check(CLI::Range(2, 100000));
  analyze->add_option("--out", options.out_path, "Write the curve sample to this file");
  analyze->add_option("--format", options.format, "Sample file format")->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--order", order, "Coordinate order of --points, e.g. p11,p21,p12,p22");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    const GameForm game = ParseGame(ReadFile(file));
    if (equations->parsed()) {
      out << (json_output ? EquationsReport(game).dump(2) + "\n" : EquationsText(game));
      return kOk;
    }
    if (classify->parsed()) {
      if (!game.format().Is2x2()) {
        err << "usage error: classify needs a 2x2 game\n";
        return kUsage;
      }
      out << (json_output ? ClassificationReport(game).dump(2) + "\n" : ClassificationText(game));
      return kOk;
    }
    for (const auto& arg : point_args) {
      for (auto& p : SplitList(arg, ';')) options.points.push_back(p);
    }
    options.order = SplitList(order, ',');
    if (*sample_opt) options.sample_slices = sample;
    if (!options.out_path.empty() && !options.sample_slices) {
      err << "usage error: --out needs --sample\n";
      return kUsage;
    }
    std::string plot;
    const auto report = AnalyzeReport(game, options, &plot);
    if (!options.out_path.empty()) {
      std::ofstream f(options.out_path, std::ios::binary);
      if (!f || !(f << plot)) {
        err << "error: cannot write '" << options.out_path << "'\n";
        return kInternal;
      }
    }
    out << report.dump(2) << "\n";
    return kOk;
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kInput;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kInput;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace spohnkit::cli
