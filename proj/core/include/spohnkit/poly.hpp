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

#ifndef SPOHNKIT_POLY_HPP_
#define SPOHNKIT_POLY_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spohnkit/rational.hpp"
#include "spohnkit/univariate.hpp"

namespace spohnkit {

using Exponent = std::vector<int>;

// Graded lexicographic order on exponents: higher total degree first, ties by
// lexicographic comparison with the first variable most significant.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Polynomial over Q in a fixed, ordered list of named variables. Two
// polynomials combine only when their variable lists are equal.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, GrlexGreater>;
  using VarList = std::shared_ptr<const std::vector<std::string>>;

  MultiPoly() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(VarList vars, Terms terms);

  static MultiPoly Constant(const MultiPoly& like, const Rational& c);
  static MultiPoly Variable(const MultiPoly& like, int var);

  const std::vector<std::string>& vars() const { return *vars_; }
  const VarList& var_list() const { return vars_; }
  int num_vars() const { return static_cast<int>(vars_->size()); }
  int VarIndex(const std::string& name) const;
  const Terms& terms() const { return terms_; }

  bool IsZero() const { return terms_.empty(); }
  bool IsConstant() const;
  // Total degree; -1 for the zero polynomial.
  int Degree() const;
  int DegreeIn(int var) const;
  bool Involves(int var) const { return DegreeIn(var) > 0; }
  bool IsHomogeneous() const;
  Rational Coefficient(const Exponent& e) const;
  Rational ConstantTerm() const { return Coefficient(Exponent(num_vars(), 0)); }
  std::pair<Exponent, Rational> LeadingTerm() const;

  Rational Evaluate(const RationalVector& point) const;
  double Evaluate(const std::vector<double>& point) const;
  long double Evaluate(const std::vector<long double>& point) const;

  MultiPoly PartialDerivative(int var) const;
  MultiPoly PartialDerivative(const std::string& var) const { return PartialDerivative(VarIndex(var)); }

  // General substitution var -> replacement (replacements in the same
  // variable list). Throws ArgumentError on a circular assignment.
  MultiPoly Substitute(const std::map<int, MultiPoly>& assignments) const;
  // As Substitute, but every replacement must have degree <= 1.
  MultiPoly SubstituteLinear(const std::map<int, MultiPoly>& assignments) const;

  // Coefficients c_k (in the remaining variables) with f = sum_k c_k var^k.
  std::vector<MultiPoly> CoefficientsIn(int var) const;
  static MultiPoly FromCoefficientsIn(const MultiPoly& like, int var,
                                      const std::vector<MultiPoly>& coeffs);
  // Requires that only `var` occurs.
  UniPoly ToUniPoly(int var) const;
  static MultiPoly FromUniPoly(const MultiPoly& like, int var, const UniPoly& u);

  // Makes the leading coefficient 1 (zero stays zero).
  MultiPoly Monic() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  MultiPoly Pow(int k) const;

  // Canonical text, e.g. "p11*p21 - 3*p11*p22 + 1/2*p22^2".
  std::string ToString() const;
  // (exponent vector, coefficient text) pairs in grlex order.
  std::vector<std::pair<Exponent, std::string>> MachineForm() const;

 private:
  void CheckCompatible(const MultiPoly& other) const;
  void AddTerm(const Exponent& e, const Rational& c);

  VarList vars_;
  Terms terms_;
};

// Exact quotient f / g when g divides f, otherwise nullopt.
std::optional<MultiPoly> DivideExact(const MultiPoly& f, const MultiPoly& g);

// f and g differ by a nonzero rational factor (or are both zero).
bool Proportional(const MultiPoly& f, const MultiPoly& g);

// Sylvester resultant with respect to var (f-rows first), computed by
// Bareiss elimination. Throws ArgumentError if both are zero or neither
// involves var.
MultiPoly Resultant(const MultiPoly& f, const MultiPoly& g, int var);

// Cofactors u_j with f = sum u_j g_j and deg u_j <= degree_bound, if the
// linear system on coefficients has a solution. nullopt means "not found at
// this bound", never a proof of non-membership. Throws ArgumentError for an
// empty generator list.
std::optional<std::vector<MultiPoly>> IdealMembershipBounded(
    const MultiPoly& f, const std::vector<MultiPoly>& generators, int degree_bound);

}  // namespace spohnkit

#endif  // SPOHNKIT_POLY_HPP_
