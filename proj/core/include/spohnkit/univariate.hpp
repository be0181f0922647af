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

#ifndef SPOHNKIT_UNIVARIATE_HPP_
#define SPOHNKIT_UNIVARIATE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "spohnkit/rational.hpp"

namespace spohnkit {

// Dense univariate polynomial over Q; coeffs()[k] multiplies x^k. Leading
// zeros are always trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(RationalVector coeffs);
  static UniPoly Constant(const Rational& c);
  static UniPoly X();

  const RationalVector& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int Degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  Rational Coeff(int k) const;
  const Rational& Leading() const { return coeffs_.back(); }

  Rational Evaluate(const Rational& x) const;
  long double Evaluate(long double x) const;
  int SignAt(const Rational& x) const { return Sign(Evaluate(x)); }

  UniPoly Derivative() const;
  UniPoly Monic() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string ToString(const std::string& var = "x") const;

 private:
  void Trim();
  RationalVector coeffs_;
};

// Quotient and remainder; throws ArgumentError on division by zero.
std::pair<UniPoly, UniPoly> DivMod(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly Gcd(const UniPoly& a, const UniPoly& b);

// Yun's algorithm: returns (factor, multiplicity) pairs of monic,
// pairwise coprime square-free factors. Throws IdenticallyZero.
std::vector<std::pair<UniPoly, int>> SquareFreeDecomposition(const UniPoly& f);

// Canonical Sturm chain of a nonzero polynomial.
std::vector<UniPoly> SturmSequence(const UniPoly& f);
int SignVariations(const std::vector<UniPoly>& chain, const Rational& x);
// Number of distinct real roots in the half-open interval (lo, hi].
int CountDistinctRoots(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi);

// 10^-12, the default refinement width.
Rational DefaultRootWidth();

struct RootBox {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  // Midpoint of the box and the width bound |root - value| <= error_bound.
  double value = 0.0;
  double error_bound = 0.0;

  bool IsExact() const { return lo == hi; }
};

// Isolates every distinct real root in the closed interval [lo, hi] and
// refines each box to width <= max_width. Boxes are sorted, pairwise
// disjoint and each holds exactly one root in (lo, hi]; a box with
// lo == hi is an exact rational root. Throws IdenticallyZero for h = 0.
std::vector<RootBox> IsolateRealRoots(const UniPoly& h, const Rational& lo, const Rational& hi,
                                      const Rational& max_width = DefaultRootWidth());

}  // namespace spohnkit

#endif  // SPOHNKIT_UNIVARIATE_HPP_
