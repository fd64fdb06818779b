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

#include "lawvere/colimit.hpp"

#include <algorithm>

namespace lawvere {

namespace {

// Row x of the right-hand side sup_y d(y,x) ⊖ ψ(y), for every x.
std::vector<Value> sup_rhs(const MetricSpace& m, const WeightTable& psi) {
  std::vector<Value> rhs(m.size(), m.quantale().zero());
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y)
      rhs[x] = std::max(rhs[x], minus(m.d(y, x), psi[y]));
  return rhs;
}

std::optional<std::size_t> find_row(const MetricSpace& m, const std::vector<Value>& target,
                                    bool as_row) {
  for (std::size_t x0 = 0; x0 < m.size(); ++x0) {
    bool ok = true;
    for (std::size_t x = 0; x < m.size() && ok; ++x)
      ok = (as_row ? m.d(x0, x) : m.d(x, x0)) == target[x];
    if (ok) return x0;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> weighted_sup(const MetricSpace& m, const WeightTable& psi) {
  require_axioms(m);
  require_weight(m, psi, Variance::Contra);
  return find_row(m, sup_rhs(m, psi), true);
}

std::optional<std::size_t> weighted_inf(const MetricSpace& m, const WeightTable& phi) {
  require_axioms(m);
  require_weight(m, phi, Variance::Co);
  std::vector<Value> rhs(m.size(), m.quantale().zero());
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y)
      rhs[x] = std::max(rhs[x], minus(m.d(x, y), phi[y]));
  return find_row(m, rhs, false);
}

std::optional<std::size_t> tensor(const MetricSpace& m, std::size_t x, const Value& u) {
  m.quantale().require(u);
  std::vector<Value> target;
  for (std::size_t y = 0; y < m.size(); ++y) target.push_back(minus(m.d(x, y), u));
  return find_row(m, target, true);
}

std::optional<std::size_t> cotensor(const MetricSpace& m, std::size_t x, const Value& u) {
  m.quantale().require(u);
  std::vector<Value> target;
  for (std::size_t y = 0; y < m.size(); ++y) target.push_back(minus(m.d(y, x), u));
  return find_row(m, target, false);
}

bool is_tensored(const MetricSpace& m) {
  for (const Value& u : m.quantale().values())
    for (std::size_t x = 0; x < m.size(); ++x)
      if (!tensor(m, x, u)) return false;
  return true;
}

bool is_cotensored(const MetricSpace& m) {
  for (const Value& u : m.quantale().values())
    for (std::size_t x = 0; x < m.size(); ++x)
      if (!cotensor(m, x, u)) return false;
  return true;
}

bool is_cocomplete(const MetricSpace& m) {
  require_axioms(m);
  return is_complete_lattice(underlying_order(m)) && is_tensored(m) && is_cotensored(m);
}

std::size_t sup_by_formula(const MetricSpace& m, const WeightTable& psi) {
  require_weight(m, psi, Variance::Contra);
  if (!is_cocomplete(m))
    throw Error(ErrorCode::FormulaInapplicable, "the closed form needs a cocomplete space");
  Subset tensors = 0;
  for (std::size_t x = 0; x < m.size(); ++x) {
    auto t = tensor(m, x, psi[x]);
    if (!t) throw Error(ErrorCode::FormulaInapplicable, "missing tensor");
    tensors |= bit(*t);
  }
  auto s = supremum(underlying_order(m), tensors);
  if (!s) throw Error(ErrorCode::FormulaInapplicable, "missing order supremum");
  return *s;
}

WeightTable isbell_plus(const MetricSpace& m, const WeightTable& psi) {
  require_weight(m, psi, Variance::Contra);
  return WeightTable{Variance::Co, sup_rhs(m, psi)};
}

WeightTable isbell_minus(const MetricSpace& m, const WeightTable& phi) {
  require_weight(m, phi, Variance::Co);
  WeightTable out{Variance::Contra, std::vector<Value>(m.size(), m.quantale().zero())};
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y)
      out.values[x] = std::max(out.values[x], minus(m.d(x, y), phi[y]));
  return out;
}

WeightTable down_set_of_subset(const MetricSpace& m, Subset a) {
  WeightTable out{Variance::Contra, std::vector<Value>(m.size(), m.quantale().top())};
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t z : elements(a)) out.values[x] = std::min(out.values[x], m.d(x, z));
  return out;
}

WeightTable formal_ball(const MetricSpace& m, std::size_t x, const Value& u) {
  m.quantale().require(u);
  WeightTable out = yoneda(m, x);
  for (Value& v : out.values) v = add(v, u);
  return out;
}

WeightTable fam_weight(const MetricSpace& m, std::span<const std::size_t> family) {
  WeightTable out{Variance::Contra, std::vector<Value>(m.size(), m.quantale().top())};
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t i : family) out.values[x] = std::min(out.values[x], m.d(x, i));
  return out;
}

std::size_t WeightSpace::index_of(const WeightTable& w) const {
  auto it = std::find(weights.begin(), weights.end(), w);
  if (it == weights.end()) throw Error(ErrorCode::InvalidWeight, "weight not in this space");
  return static_cast<std::size_t>(it - weights.begin());
}

WeightSpace weight_space(const MetricSpace& m, Variance variance) {
  WeightSpace out;
  out.weights = enumerate_weights(m, variance);
  std::vector<std::string> names;
  std::vector<std::vector<Value>> d;
  for (const auto& h : out.weights) {
    std::string name = "<";
    for (std::size_t i = 0; i < h.values.size(); ++i) name += (i ? "," : "") + h[i].str();
    names.push_back(name + ">");
    std::vector<Value> row;
    for (const auto& k : out.weights)
      row.push_back(variance == Variance::Contra ? weight_distance(h, k) : weight_distance(k, h));
    d.push_back(std::move(row));
  }
  out.space = MetricSpace(m.quantale(), std::move(names), std::move(d));
  return out;
}

bool isbell_adjunction_check(const MetricSpace& m) {
  WeightSpace down = weight_space(m, Variance::Contra);
  WeightSpace up = weight_space(m, Variance::Co);
  std::vector<std::size_t> plus, minus_table;
  for (const auto& psi : down.weights) plus.push_back(up.index_of(isbell_plus(m, psi)));
  for (const auto& phi : up.weights) minus_table.push_back(down.index_of(isbell_minus(m, phi)));
  if (!is_metric_map(down.space, up.space, plus) ||
      !is_metric_map(up.space, down.space, minus_table))
    return false;
  return adjoint_pair_met(MetricMap(down.space, up.space, plus),
                          MetricMap(up.space, down.space, minus_table));
}

bool tensor_cotensor_adjunction(const MetricSpace& m) {
  const FinitePoset p = underlying_order(m);
  for (const Value& u : m.quantale().values()) {
    std::vector<std::size_t> plus, minus_table;
    bool complete = true;
    for (std::size_t x = 0; x < m.size() && complete; ++x) {
      auto t = tensor(m, x, u);
      auto c = cotensor(m, x, u);
      complete = t && c;
      if (complete) {
        plus.push_back(*t);
        minus_table.push_back(*c);
      }
    }
    if (!complete) continue;
    if (!is_monotone(p, p, plus) || !is_monotone(p, p, minus_table)) return false;
    if (!adjoint_pair(MonotoneMap(p, p, plus), MonotoneMap(p, p, minus_table))) return false;
  }
  return true;
}

namespace {

void require_cocomplete_source(const MetricMap& f) {
  if (!is_cocomplete(f.source))
    throw Error(ErrorCode::NotCocomplete, "source of the map is not cocomplete");
}

}  // namespace

bool preserves_weighted_sups(const MetricMap& f) {
  require_cocomplete_source(f);
  const MetricSpace& x = f.source;
  const MetricSpace& y = f.target;
  for (const Value& u : x.quantale().values())
    for (std::size_t a = 0; a < x.size(); ++a) {
      const std::size_t t = *tensor(x, a, u);
      for (std::size_t b = 0; b < y.size(); ++b)
        if (y.d(f.table[t], b) != minus(y.d(f.table[a], b), u)) return false;
    }
  const FinitePoset p = underlying_order(x);
  const std::uint64_t count = subset_count(x.size());
  for (Subset a = 0; a < count; ++a) {
    const std::size_t s = *supremum(p, a);
    for (std::size_t b = 0; b < y.size(); ++b) {
      Value rhs = y.quantale().zero();
      for (std::size_t z : elements(a)) rhs = std::max(rhs, y.d(f.table[z], b));
      if (y.d(f.table[s], b) != rhs) return false;
    }
  }
  return true;
}

bool preserves_weighted_sups_by_definition(const MetricMap& f) {
  require_cocomplete_source(f);
  const MetricSpace& x = f.source;
  const MetricSpace& y = f.target;
  for (const WeightTable& psi : enumerate_weights(x, Variance::Contra)) {
    const std::size_t s = *weighted_sup(x, psi);
    for (std::size_t b = 0; b < y.size(); ++b) {
      Value rhs = y.quantale().zero();
      for (std::size_t z = 0; z < x.size(); ++z)
        rhs = std::max(rhs, minus(y.d(f.table[z], b), psi[z]));
      if (y.d(f.table[s], b) != rhs) return false;
    }
  }
  return true;
}

}  // namespace lawvere
