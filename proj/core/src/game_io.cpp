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
#include <string>

#include "json.hpp"
#include "spohnkit/errors.hpp"
#include "spohnkit/game.hpp"

namespace spohnkit {
namespace {

using nlohmann::json;

std::size_t LineOfOffset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

Rational ParseEntry(const json& value, const std::string& field) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(mpz_class(std::to_string(value.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_number_float()) {
    throw ParseError("non-integer number; write rationals as \"num/den\" strings", 0, field);
  }
  if (value.is_string()) {
    try {
      return ParseRational(value.get<std::string>(), /*require_canonical=*/true);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0, field);
    }
  }
  throw ParseError("expected an integer or a \"num/den\" string", 0, field);
}

void ReadTensor(const json& node, const std::vector<int>& dims, std::size_t depth,
                const std::string& field, RationalVector& out) {
  if (depth == dims.size()) {
    out.push_back(ParseEntry(node, field));
    return;
  }
  if (!node.is_array()) throw ParseError("expected an array", 0, field);
  if (node.size() != static_cast<std::size_t>(dims[depth])) {
    throw ValidationError("shape mismatch in " + field + ": expected " +
                          std::to_string(dims[depth]) + " entries at depth " +
                          std::to_string(depth + 1) + ", found " + std::to_string(node.size()));
  }
  for (std::size_t j = 0; j < node.size(); ++j) {
    ReadTensor(node[j], dims, depth + 1, field + "[" + std::to_string(j) + "]", out);
  }
}

json EntryToJson(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) return value.get_num().get_si();
  return ToString(value);
}

json TensorToJson(const RationalVector& values, const std::vector<int>& dims, std::size_t depth,
                  std::size_t& next) {
  if (depth == dims.size()) return EntryToJson(values[next++]);
  json arr = json::array();
  for (int j = 0; j < dims[depth]; ++j) arr.push_back(TensorToJson(values, dims, depth + 1, next));
  return arr;
}

}  // namespace

GameForm ParseGame(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), LineOfOffset(text, e.byte == 0 ? 0 : e.byte - 1), "");
  }
  if (!doc.is_object()) throw ParseError("top level must be an object", 1, "");
  if (!doc.contains("format")) throw ParseError("missing key", 0, "format");
  if (!doc.contains("payoffs")) throw ParseError("missing key", 0, "payoffs");

  const json& fmt = doc["format"];
  if (!fmt.is_array() || fmt.empty()) throw ParseError("expected a non-empty array", 0, "format");
  std::vector<int> dims;
  for (std::size_t i = 0; i < fmt.size(); ++i) {
    const std::string field = "format[" + std::to_string(i) + "]";
    if (!fmt[i].is_number_integer()) throw ParseError("expected an integer", 0, field);
    const auto d = fmt[i].get<std::int64_t>();
    if (d < 1 || d > 1024) throw ValidationError(field + " must be a positive strategy count");
    dims.push_back(static_cast<int>(d));
  }
  StrategyFormat format(dims);

  const json& pay = doc["payoffs"];
  if (!pay.is_array()) throw ParseError("expected an array", 0, "payoffs");
  if (pay.size() != dims.size()) {
    throw ValidationError("expected " + std::to_string(dims.size()) + " payoff tensors, found " +
                          std::to_string(pay.size()));
  }
  std::vector<RationalVector> payoffs(dims.size());
  for (std::size_t i = 0; i < pay.size(); ++i) {
    payoffs[i].reserve(format.num_cells());
    ReadTensor(pay[i], dims, 0, "payoffs[" + std::to_string(i) + "]", payoffs[i]);
  }
  return GameForm(std::move(format), std::move(payoffs));
}

std::string GameToJson(const GameForm& game) {
  nlohmann::ordered_json doc;
  doc["format"] = game.format().dims();
  json pay = json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    std::size_t next = 0;
    pay.push_back(TensorToJson(game.payoffs(i), game.format().dims(), 0, next));
  }
  doc["payoffs"] = pay;
  return doc.dump();
}

}  // namespace spohnkit
