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

#include "spohnkit/univariate.hpp"

#include <algorithm>
#include <cmath>

#include "spohnkit/errors.hpp"

namespace spohnkit {

UniPoly::UniPoly(RationalVector coeffs) : coeffs_(std::move(coeffs)) { Trim(); }

UniPoly UniPoly::Constant(const Rational& c) { return UniPoly(RationalVector{c}); }

UniPoly UniPoly::X() { return UniPoly(RationalVector{Rational(0), Rational(1)}); }

void UniPoly::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::Coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rational UniPoly::Evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double UniPoly::Evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + ToLongDouble(*it);
  return acc;
}

UniPoly UniPoly::Derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  RationalVector out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::Monic() const {
  if (IsZero()) return *this;
  RationalVector out = coeffs_;
  const Rational lead = coeffs_.back();
  for (auto& c : out) c /= lead;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  RationalVector out = coeffs_;
  for (auto& c : out) c = -c;
  return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  RationalVector out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.IsZero() || b.IsZero()) return UniPoly();
  RationalVector out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
  RationalVector out = a.coeffs_;
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

std::string UniPoly::ToString(const std::string& var) const {
  if (IsZero()) return "0";
  std::string out;
  for (int k = Degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) mono = var + (k > 1 ? "^" + std::to_string(k) : "");
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

std::pair<UniPoly, UniPoly> DivMod(const UniPoly& a, const UniPoly& b) {
  if (b.IsZero()) throw ArgumentError("polynomial division by zero");
  RationalVector rem = a.coeffs();
  const int db = b.Degree();
  if (a.Degree() < db) return {UniPoly(), a};
  RationalVector quot(a.Degree() - db + 1, Rational(0));
  const Rational& lead = b.Leading();
  for (int k = a.Degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    const Rational q = rem[k] / lead;
    quot[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly Gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.IsZero()) {
    UniPoly r = DivMod(x, y).second;
    x = std::move(y);
    y = r.Monic();
  }
  return x.Monic();
}

std::vector<std::pair<UniPoly, int>> SquareFreeDecomposition(const UniPoly& f) {
  if (f.IsZero()) throw IdenticallyZero();
  std::vector<std::pair<UniPoly, int>> out;
  if (f.Degree() == 0) return out;
  const UniPoly fm = f.Monic();
  const UniPoly df = fm.Derivative();
  UniPoly a = Gcd(fm, df);
  UniPoly b = DivMod(fm, a).first;
  UniPoly c = DivMod(df, a).first;
  UniPoly d = c - b.Derivative();
  int multiplicity = 1;
  while (b.Degree() > 0) {
    UniPoly g = Gcd(b, d);
    if (g.Degree() > 0) out.emplace_back(g, multiplicity);
    b = DivMod(b, g).first;
    c = DivMod(d, g).first;
    d = c - b.Derivative();
    ++multiplicity;
  }
  return out;
}

std::vector<UniPoly> SturmSequence(const UniPoly& f) {
  if (f.IsZero()) throw IdenticallyZero();
  std::vector<UniPoly> chain{f, f.Derivative()};
  while (!chain.back().IsZero()) {
    UniPoly r = -DivMod(chain[chain.size() - 2], chain.back()).second;
    // Positive rescaling keeps the sign pattern and tames coefficient growth.
    if (!r.IsZero()) r = Rational(1) / abs(r.Leading()) * r;
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  return chain;
}

int SignVariations(const std::vector<UniPoly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = p.SignAt(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int CountDistinctRoots(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi) {
  if (hi <= lo) return 0;
  return SignVariations(chain, lo) - SignVariations(chain, hi);
}

Rational DefaultRootWidth() { return Rational(1) / Rational(mpz_class("1000000000000")); }

namespace {

RootBox MakeBox(Rational lo, Rational hi, int multiplicity) {
  RootBox box;
  box.lo = std::move(lo);
  box.hi = std::move(hi);
  box.multiplicity = multiplicity;
  const Rational mid = (box.lo + box.hi) / 2;
  box.value = ToDouble(mid);
  box.error_bound = ToDouble((box.hi - box.lo) / 2);
  return box;
}

// Refines (a, b], known to hold exactly one root of the square-free f.
RootBox Refine(const UniPoly& f, const std::vector<UniPoly>& chain, Rational a, Rational b,
               const Rational& max_width, int multiplicity) {
  if (f.SignAt(b) == 0) return MakeBox(b, b, multiplicity);
  while (b - a > max_width) {
    const Rational m = (a + b) / 2;
    const int sm = f.SignAt(m);
    if (sm == 0) return MakeBox(m, m, multiplicity);
    const int sa = f.SignAt(a);
    bool left;
    if (sa != 0) {
      left = sa != sm;
    } else {
      left = CountDistinctRoots(chain, a, m) == 1;
    }
    if (left) {
      b = m;
    } else {
      a = m;
    }
  }
  return MakeBox(a, b, multiplicity);
}

void Isolate(const UniPoly& f, const std::vector<UniPoly>& chain, const Rational& a,
             const Rational& b, int count, const Rational& max_width, int multiplicity,
             std::vector<RootBox>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(Refine(f, chain, a, b, max_width, multiplicity));
    return;
  }
  const Rational m = (a + b) / 2;
  const int left = CountDistinctRoots(chain, a, m);
  Isolate(f, chain, a, m, left, max_width, multiplicity, out);
  Isolate(f, chain, m, b, count - left, max_width, multiplicity, out);
}

}  // namespace

std::vector<RootBox> IsolateRealRoots(const UniPoly& h, const Rational& lo, const Rational& hi,
                                      const Rational& max_width) {
  if (h.IsZero()) throw IdenticallyZero();
  if (hi < lo) throw ArgumentError("empty isolation interval");
  if (max_width <= 0) throw ArgumentError("refinement width must be positive");
  std::vector<RootBox> out;
  for (const auto& [factor, multiplicity] : SquareFreeDecomposition(h)) {
    if (factor.SignAt(lo) == 0) out.push_back(MakeBox(lo, lo, multiplicity));
    const auto chain = SturmSequence(factor);
    Isolate(factor, chain, lo, hi, CountDistinctRoots(chain, lo, hi), max_width, multiplicity, out);
  }
  std::sort(out.begin(), out.end(), [](const RootBox& x, const RootBox& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace spohnkit
