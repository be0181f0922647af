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

#include "spohnkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace spohnkit {
namespace {

bool IsIntegerText(std::string_view text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view text) {
  if (!IsIntegerText(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Rational ParseRational(std::string_view text, bool require_canonical) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(ParseInteger(text));
  }
  const mpz_class num = ParseInteger(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (require_canonical && (den_text.empty() || den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("denominator must be a positive integer: '" +
                                std::string(text) + "'");
  }
  const mpz_class den = ParseInteger(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  if (require_canonical && (value.get_num() != num || value.get_den() != den)) {
    throw std::invalid_argument("fraction not in lowest terms: '" + std::string(text) + "'");
  }
  return value;
}

std::string ToString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double ToDouble(const Rational& value) { return value.get_d(); }

long double ToLongDouble(const Rational& value) {
  // Two-term split keeps ~106 bits, more than long double holds.
  mpf_class exact(value, 256);
  const double hi = exact.get_d();
  mpf_class rest(exact - hi, 256);
  const double lo = rest.get_d();
  return static_cast<long double>(hi) + static_cast<long double>(lo);
}

int Sign(const Rational& value) { return sgn(value); }

Rational Fraction(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace spohnkit
