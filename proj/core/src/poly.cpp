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

#include "spohnkit/poly.hpp"

#include <algorithm>
#include <numeric>

#include "spohnkit/errors.hpp"

namespace spohnkit {
namespace {

int TotalDegree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = TotalDegree(a);
  const int db = TotalDegree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(std::vector<std::string> vars)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {}

MultiPoly::MultiPoly(VarList vars, Terms terms) : vars_(std::move(vars)) {
  if (!vars_) throw ArgumentError("null variable list");
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != num_vars()) throw ArgumentError("exponent arity mismatch");
    if (c != 0) terms_.emplace(e, c);
  }
}

MultiPoly MultiPoly::Constant(const MultiPoly& like, const Rational& c) {
  Terms t;
  t.emplace(Exponent(like.num_vars(), 0), c);
  return MultiPoly(like.vars_, std::move(t));
}

MultiPoly MultiPoly::Variable(const MultiPoly& like, int var) {
  if (var < 0 || var >= like.num_vars()) throw ArgumentError("variable index out of range");
  Exponent e(like.num_vars(), 0);
  e[var] = 1;
  Terms t;
  t.emplace(std::move(e), Rational(1));
  return MultiPoly(like.vars_, std::move(t));
}

int MultiPoly::VarIndex(const std::string& name) const {
  const auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) throw ArgumentError("unknown variable '" + name + "'");
  return static_cast<int>(it - vars_->begin());
}

bool MultiPoly::IsConstant() const {
  return terms_.empty() || (terms_.size() == 1 && TotalDegree(terms_.begin()->first) == 0);
}

int MultiPoly::Degree() const {
  if (terms_.empty()) return -1;
  return TotalDegree(terms_.begin()->first);
}

int MultiPoly::DegreeIn(int var) const {
  if (var < 0 || var >= num_vars()) throw ArgumentError("variable index out of range");
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MultiPoly::IsHomogeneous() const {
  for (const auto& [e, c] : terms_) {
    if (TotalDegree(e) != Degree()) return false;
  }
  return true;
}

Rational MultiPoly::Coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Exponent, Rational> MultiPoly::LeadingTerm() const {
  if (terms_.empty()) throw ArgumentError("zero polynomial has no leading term");
  return *terms_.begin();
}

Rational MultiPoly::Evaluate(const RationalVector& point) const {
  if (static_cast<int>(point.size()) != num_vars()) throw ArgumentError("point arity mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < num_vars(); ++v) {
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    }
    total += term;
  }
  return total;
}

double MultiPoly::Evaluate(const std::vector<double>& point) const {
  std::vector<long double> wide(point.begin(), point.end());
  return static_cast<double>(Evaluate(wide));
}

long double MultiPoly::Evaluate(const std::vector<long double>& point) const {
  if (static_cast<int>(point.size()) != num_vars()) throw ArgumentError("point arity mismatch");
  long double total = 0;
  for (const auto& [e, c] : terms_) {
    long double term = ToLongDouble(c);
    for (int v = 0; v < num_vars(); ++v) {
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::PartialDerivative(int var) const {
  if (var < 0 || var >= num_vars()) throw ArgumentError("variable index out of range");
  Terms out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.emplace(std::move(d), c * e[var]);
  }
  return MultiPoly(vars_, std::move(out));
}

MultiPoly MultiPoly::Substitute(const std::map<int, MultiPoly>& assignments) const {
  for (const auto& [var, repl] : assignments) {
    if (var < 0 || var >= num_vars()) throw ArgumentError("variable index out of range");
    CheckCompatible(repl);
    for (const auto& [other, unused] : assignments) {
      if (repl.Involves(other)) {
        throw ArgumentError("circular substitution: " + vars()[var] + " maps to an expression in " +
                            vars()[other]);
      }
    }
  }
  MultiPoly result(vars_, {});
  // Cache powers of each replacement.
  std::map<int, std::vector<MultiPoly>> powers;
  for (const auto& [var, repl] : assignments) {
    powers[var].push_back(Constant(*this, 1));
    for (int k = 1; k <= DegreeIn(var); ++k) powers[var].push_back(powers[var].back() * repl);
  }
  for (const auto& [e, c] : terms_) {
    Exponent kept = e;
    for (const auto& [var, unused] : assignments) kept[var] = 0;
    Terms single;
    single.emplace(kept, c);
    MultiPoly term(vars_, std::move(single));
    for (const auto& [var, unused] : assignments) {
      if (e[var] > 0) term = term * powers[var][e[var]];
    }
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::SubstituteLinear(const std::map<int, MultiPoly>& assignments) const {
  for (const auto& [var, repl] : assignments) {
    if (repl.Degree() > 1) throw ArgumentError("replacement for " + vars()[var] + " is not affine-linear");
  }
  return Substitute(assignments);
}

std::vector<MultiPoly> MultiPoly::CoefficientsIn(int var) const {
  const int d = DegreeIn(var);
  std::vector<Terms> buckets(std::max(d + 1, 0));
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    rest[var] = 0;
    buckets[e[var]].emplace(std::move(rest), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(vars_, std::move(b));
  return out;
}

MultiPoly MultiPoly::FromCoefficientsIn(const MultiPoly& like, int var,
                                        const std::vector<MultiPoly>& coeffs) {
  MultiPoly result(like.vars_, {});
  MultiPoly power = Constant(like, 1);
  const MultiPoly x = Variable(like, var);
  for (const auto& c : coeffs) {
    result += c * power;
    power = power * x;
  }
  return result;
}

UniPoly MultiPoly::ToUniPoly(int var) const {
  RationalVector coeffs(std::max(DegreeIn(var) + 1, 0), Rational(0));
  for (const auto& [e, c] : terms_) {
    for (int v = 0; v < num_vars(); ++v) {
      if (v != var && e[v] != 0) {
        throw ArgumentError("polynomial involves " + vars()[v] + ", not univariate in " + vars()[var]);
      }
    }
    coeffs[e[var]] = c;
  }
  return UniPoly(std::move(coeffs));
}

MultiPoly MultiPoly::FromUniPoly(const MultiPoly& like, int var, const UniPoly& u) {
  Terms t;
  for (int k = 0; k <= u.Degree(); ++k) {
    Exponent e(like.num_vars(), 0);
    e[var] = k;
    t.emplace(std::move(e), u.coeffs()[k]);
  }
  return MultiPoly(like.vars_, std::move(t));
}

MultiPoly MultiPoly::Monic() const {
  if (IsZero()) return *this;
  return (1 / terms_.begin()->second) * *this;
}

void MultiPoly::CheckCompatible(const MultiPoly& other) const {
  if (vars_ != other.vars_ && *vars_ != *other.vars_) {
    throw ArgumentError("polynomials over different variable lists");
  }
}

void MultiPoly::AddTerm(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  CheckCompatible(other);
  for (const auto& [e, c] : other.terms_) AddTerm(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  CheckCompatible(other);
  for (const auto& [e, c] : other.terms_) AddTerm(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.CheckCompatible(b);
  MultiPoly out(a.vars_, {});
  Exponent e(a.num_vars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.num_vars(); ++v) e[v] = ea[v] + eb[v];
      out.AddTerm(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  if (c == 0) return MultiPoly(a.vars_, {});
  MultiPoly out = a;
  for (auto& [e, x] : out.terms_) x *= c;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_ && *a.vars_ != *b.vars_) return false;
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::Pow(int k) const {
  if (k < 0) throw ArgumentError("negative exponent");
  MultiPoly result = Constant(*this, 1);
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string MultiPoly::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (int v = 0; v < num_vars(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += spohnkit::ToString(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += spohnkit::ToString(mag) + "*" + mono;
    }
  }
  return out;
}

std::vector<std::pair<Exponent, std::string>> MultiPoly::MachineForm() const {
  std::vector<std::pair<Exponent, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e, spohnkit::ToString(c));
  return out;
}

std::optional<MultiPoly> DivideExact(const MultiPoly& f, const MultiPoly& g) {
  if (g.IsZero()) throw ArgumentError("division by the zero polynomial");
  if (*f.var_list() != *g.var_list()) throw ArgumentError("polynomials over different variable lists");
  MultiPoly rem = f;
  MultiPoly quot(f.var_list(), {});
  const auto [lead_e, lead_c] = g.LeadingTerm();
  while (!rem.IsZero()) {
    const auto [e, c] = rem.LeadingTerm();
    Exponent q(e.size());
    for (std::size_t v = 0; v < e.size(); ++v) {
      q[v] = e[v] - lead_e[v];
      if (q[v] < 0) return std::nullopt;
    }
    MultiPoly::Terms t;
    t.emplace(std::move(q), c / lead_c);
    const MultiPoly term(f.var_list(), std::move(t));
    quot += term;
    rem -= term * g;
  }
  return quot;
}

bool Proportional(const MultiPoly& f, const MultiPoly& g) {
  if (f.IsZero() || g.IsZero()) return f.IsZero() && g.IsZero();
  return f.Monic() == g.Monic();
}

}  // namespace spohnkit
