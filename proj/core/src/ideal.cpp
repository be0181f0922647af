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

#include <map>

#include "spohnkit/errors.hpp"
#include "spohnkit/linalg.hpp"
#include "spohnkit/poly.hpp"

namespace spohnkit {
namespace {

void MonomialsUpTo(int num_vars, int degree, Exponent& current, int var,
                   std::vector<Exponent>& out) {
  if (var == num_vars) {
    out.push_back(current);
    return;
  }
  for (int k = 0; k <= degree; ++k) {
    current[var] = k;
    MonomialsUpTo(num_vars, degree - k, current, var + 1, out);
  }
  current[var] = 0;
}

}  // namespace

std::optional<std::vector<MultiPoly>> IdealMembershipBounded(
    const MultiPoly& f, const std::vector<MultiPoly>& generators, int degree_bound) {
  if (generators.empty()) throw ArgumentError("empty generator list");
  if (degree_bound < 0) throw ArgumentError("negative degree bound");
  for (const auto& g : generators) {
    if (*g.var_list() != *f.var_list()) throw ArgumentError("polynomials over different variable lists");
  }
  std::vector<Exponent> monomials;
  Exponent scratch(f.num_vars(), 0);
  MonomialsUpTo(f.num_vars(), degree_bound, scratch, 0, monomials);

  // One unknown per (generator, cofactor monomial); one equation per
  // monomial of the product.
  std::map<Exponent, int, GrlexGreater> rows;
  auto row_of = [&rows](const Exponent& e) {
    auto [it, inserted] = rows.emplace(e, static_cast<int>(rows.size()));
    return it->second;
  };
  for (const auto& [e, c] : f.terms()) row_of(e);
  struct Entry {
    int row;
    int col;
    Rational value;
  };
  std::vector<Entry> entries;
  const int cols = static_cast<int>(generators.size() * monomials.size());
  Exponent product(f.num_vars());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    for (std::size_t m = 0; m < monomials.size(); ++m) {
      const int col = static_cast<int>(j * monomials.size() + m);
      for (const auto& [e, c] : generators[j].terms()) {
        for (int v = 0; v < f.num_vars(); ++v) product[v] = e[v] + monomials[m][v];
        entries.push_back({row_of(product), col, c});
      }
    }
  }
  Matrix a(rows.size(), RationalVector(cols, Rational(0)));
  for (const auto& entry : entries) a[entry.row][entry.col] += entry.value;
  RationalVector b(rows.size(), Rational(0));
  for (const auto& [e, c] : f.terms()) b[rows.at(e)] = c;

  const auto x = SolveLinear(a, b, cols);
  if (!x) return std::nullopt;
  std::vector<MultiPoly> cofactors;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    MultiPoly::Terms t;
    for (std::size_t m = 0; m < monomials.size(); ++m) {
      const Rational& c = (*x)[j * monomials.size() + m];
      if (c != 0) t.emplace(monomials[m], c);
    }
    cofactors.emplace_back(f.var_list(), std::move(t));
  }
  MultiPoly check(f.var_list(), {});
  for (std::size_t j = 0; j < generators.size(); ++j) check += cofactors[j] * generators[j];
  if (!(check == f)) throw InvariantViolation("ideal membership cofactors do not reproduce f");
  return cofactors;
}

}  // namespace spohnkit
