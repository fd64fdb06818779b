//  Copyright 2026 The Lawvere Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Brute-force oracles over raw integer tables.
//
// A chain quantale with k levels is modelled as the integers 0..k with
// add = min(u+v, k) and minus = max(v-u, 0).  Nothing here calls into the
// library except the conversion helpers at the bottom, so a disagreement
// between an oracle and the library is a genuine disagreement.

#ifndef LAWVERE_TESTS_ORACLES_HPP_
#define LAWVERE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "lawvere/metric.hpp"
#include "lawvere/quantale.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;
using Weight = std::vector<int>;

inline int add(int u, int v, int k) { return std::min(u + v, k); }
inline int minus(int v, int u) { return std::max(v - u, 0); }

/// Least v in 0..k with u + v >= w.
inline int residual(int w, int u, int k) {
  for (int v = 0; v <= k; ++v)
    if (add(u, v, k) >= w) return v;
  return k;
}

inline bool axioms(const Table& d, int k) {
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (d[x][x] != 0) return false;
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (add(d[x][y], d[y][z], k) < d[x][z]) return false;
  }
  return true;
}

/// Every ψ with ψ(x) <= d(x,y) + ψ(y), found by filtering all k^n tables.
inline std::vector<Weight> contra_weights(const Table& d, int k) {
  const std::size_t n = d.size();
  std::vector<Weight> out;
  Weight w(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = w[x] <= add(d[x][y], w[y], k);
    if (ok) out.push_back(w);
    std::size_t i = 0;
    while (i < n && ++w[i] > k) w[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// All x0 with d(x0,x) = sup_y d(y,x) ⊖ ψ(y).
inline std::vector<std::size_t> sups(const Table& d, const Weight& psi) {
  const std::size_t n = d.size();
  std::vector<std::size_t> out;
  for (std::size_t x0 = 0; x0 < n; ++x0) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      int rhs = 0;
      for (std::size_t y = 0; y < n; ++y) rhs = std::max(rhs, minus(d[y][x], psi[y]));
      ok = d[x0][x] == rhs;
    }
    if (ok) out.push_back(x0);
  }
  return out;
}

/// Cocomplete in the defining sense: every weight has a supremum.
inline bool every_weight_has_sup(const Table& d, int k) {
  for (const Weight& psi : contra_weights(d, k))
    if (sups(d, psi).empty()) return false;
  return true;
}

/// [y(x), ψ] = sup_y ψ(y) ⊖ d(y, x).
inline int yoneda_hom(const Table& d, std::size_t x, const Weight& psi) {
  int out = 0;
  for (std::size_t y = 0; y < d.size(); ++y) out = std::max(out, minus(psi[y], d[y][x]));
  return out;
}

/// ψ⁺(x) = sup_y d(y,x) ⊖ ψ(y).
inline Weight isbell_plus(const Table& d, const Weight& psi) {
  Weight out(d.size(), 0);
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y) out[x] = std::max(out[x], minus(d[y][x], psi[y]));
  return out;
}

/// φ⁻(x) = sup_y d(x,y) ⊖ φ(y).
inline Weight isbell_minus(const Table& d, const Weight& phi) {
  Weight out(d.size(), 0);
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y) out[x] = std::max(out[x], minus(d[x][y], phi[y]));
  return out;
}

/// sup_x k(x) ⊖ h(x).
inline int hom(const Weight& h, const Weight& k) {
  int out = 0;
  for (std::size_t x = 0; x < h.size(); ++x) out = std::max(out, minus(k[x], h[x]));
  return out;
}

/// δ(x, A) = min over z in A of d(z, x); rows indexed by subset bitmask.
inline Table dist_of_metric(const Table& d, int k) {
  const std::size_t n = d.size();
  Table out(n, std::vector<int>(std::size_t{1} << n, k));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < out[x].size(); ++a)
      for (std::size_t z = 0; z < n; ++z)
        if ((a >> z) & 1U) out[x][a] = std::min(out[x][a], d[z][x]);
  return out;
}

/// The point-set distance axioms on a raw table: δ(x,{x}) = 0,
/// δ(x,∅) = k, δ(x,A∪B) = min, and δ(x,A) <= δ(x,A^(e)) + e for every level e.
inline bool dist_axioms(const Table& t, int k) {
  const std::size_t n = t.size();
  const std::size_t sets = std::size_t{1} << n;
  for (std::size_t x = 0; x < n; ++x) {
    if (t[x][std::size_t{1} << x] != 0 || t[x][0] != k) return false;
    for (std::size_t a = 0; a < sets; ++a)
      for (std::size_t b = 0; b < sets; ++b)
        if (t[x][a | b] != std::min(t[x][a], t[x][b])) return false;
  }
  for (int e = 0; e <= k; ++e)
    for (std::size_t a = 0; a < sets; ++a) {
      std::size_t grown = 0;
      for (std::size_t y = 0; y < n; ++y)
        if (t[y][a] <= e) grown |= std::size_t{1} << y;
      for (std::size_t x = 0; x < n; ++x)
        if (t[x][a] > add(t[x][grown], e, k)) return false;
    }
  return true;
}

inline bool equivalent(const Table& d, std::size_t x, std::size_t y) {
  return d[x][y] == 0 && d[y][x] == 0;
}

// Conversions between library objects and raw tables.

inline Table table_of(const lawvere::MetricSpace& m) {
  Table t(m.size(), std::vector<int>(m.size()));
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) t[x][y] = m.d(x, y).index();
  return t;
}

inline Weight weight_of(const lawvere::WeightTable& w) {
  Weight out;
  for (const auto& v : w.values) out.push_back(v.index());
  return out;
}

inline Table table_of(const std::vector<std::vector<lawvere::Value>>& t) {
  Table out(t.size());
  for (std::size_t x = 0; x < t.size(); ++x)
    for (const auto& v : t[x]) out[x].push_back(v.index());
  return out;
}

inline lawvere::WeightTable to_weight(const Weight& w, const lawvere::ValueQuantale& q,
                                      lawvere::Variance variance = lawvere::Variance::Contra) {
  lawvere::WeightTable out{variance, {}};
  for (int v : w) out.values.push_back(q.at(v));
  return out;
}

inline lawvere::MetricSpace to_space(const Table& t, const lawvere::ValueQuantale& q) {
  std::vector<std::vector<lawvere::Value>> d(t.size());
  for (std::size_t x = 0; x < t.size(); ++x)
    for (int v : t[x]) d[x].push_back(q.at(v));
  return lawvere::MetricSpace::from_table(q, std::move(d));
}

}  // namespace oracle

namespace lawvere {

// Readable gtest failure messages.
inline void PrintTo(const Value& v, std::ostream* os) { *os << v.str(); }

}  // namespace lawvere

#endif  // LAWVERE_TESTS_ORACLES_HPP_
