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

#ifndef SPOHNKIT_RATIONAL_HPP_
#define SPOHNKIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace spohnkit {

// Exact rational scalar used everywhere outside the sampler.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "n" or "n/d". With `require_canonical` the fraction must be in
// lowest terms with d > 0 (the game-file contract); otherwise any nonzero
// denominator is accepted and the result is canonicalized.
// Throws std::invalid_argument on malformed text.
Rational ParseRational(std::string_view text, bool require_canonical = false);

// Canonical text: "n" for integers, "n/d" otherwise.
std::string ToString(const Rational& value);

double ToDouble(const Rational& value);
long double ToLongDouble(const Rational& value);

int Sign(const Rational& value);

// num/den in lowest terms. mpq_class(num, den) does not canonicalize, and
// GMP arithmetic on non-canonical operands is undefined.
Rational Fraction(long num, long den);

}  // namespace spohnkit

#endif  // SPOHNKIT_RATIONAL_HPP_
