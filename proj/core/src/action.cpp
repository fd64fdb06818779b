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

#include "lawvere/action.hpp"

#include <algorithm>
#include <utility>

#include "lawvere/colimit.hpp"

namespace lawvere {

OrdAction::OrdAction(FinitePoset poset_, ValueQuantale q, std::vector<std::vector<std::size_t>> act_)
    : poset(std::move(poset_)), quantale(std::move(q)), act(std::move(act_)) {
  if (!quantale.is_chain())
    throw Error(ErrorCode::UnsupportedEnumeration, "actions need a chain quantale");
  if (act.size() != poset.size()) throw Error(ErrorCode::ShapeMismatch, "action row count");
  for (const auto& row : act) {
    if (row.size() != quantale.size()) throw Error(ErrorCode::ShapeMismatch, "action row length");
    for (std::size_t y : row)
      if (y >= poset.size()) throw Error(ErrorCode::DomainMismatch, "action leaves the carrier");
  }
}

std::size_t OrdAction::apply(std::size_t x, const Value& u) const {
  quantale.require(u);
  return act[x][static_cast<std::size_t>(u.index())];
}

ActionConditions check_action_conditions(const OrdAction& a) {
  const FinitePoset& p = a.poset;
  const std::size_t n = p.size();
  const int k = a.quantale.shape().levels;
  ActionConditions c;

  c.unitary = true;
  for (std::size_t x = 0; x < n; ++x)
    if (!p.equivalent(a.act[x][0], x)) c.unitary = false;

  c.associative = true;
  for (std::size_t x = 0; x < n; ++x)
    for (int u = 0; u <= k; ++u)
      for (int v = 0; v <= k; ++v)
        if (!p.equivalent(a.act[a.act[x][u]][v], a.act[x][std::min(u + v, k)]))
          c.associative = false;

  c.monotone = true;
  for (std::size_t x = 0; x < n; ++x)
    for (int u = 0; u <= k; ++u) {
      for (std::size_t y : elements(p.up_set(x)))
        if (!p.leq(a.act[x][u], a.act[y][u])) c.monotone = false;
      for (int v = u; v <= k; ++v)
        if (!p.leq(a.act[x][v], a.act[x][u])) c.monotone = false;
    }

  c.bottom = true;
  const Subset bottoms = lower_bounds(p, full_set(n));
  for (std::size_t x = 0; x < n; ++x)
    if (!contains(bottoms, a.act[x][k])) c.bottom = false;

  // Every subset S of levels, the empty one included (inf of nothing is the top).
  c.infima = true;
  const std::uint64_t subsets = std::uint64_t{1} << (k + 1);
  for (std::size_t x = 0; x < n && c.infima; ++x)
    for (std::uint64_t s = 0; s < subsets; ++s) {
      int inf = k;
      Subset image = 0;
      for (int u = 0; u <= k; ++u)
        if ((s >> u) & 1U) {
          inf = std::min(inf, u);
          image |= bit(a.act[x][u]);
        }
      auto join = supremum(p, image);
      if (!join || !p.equivalent(*join, a.act[x][inf])) {
        c.infima = false;
        break;
      }
    }
  return c;
}

OrdAction quantale_action(const ValueQuantale& q) {
  const MetricSpace v = quantale_space(q);
  const int k = q.shape().levels;
  std::vector<std::vector<std::size_t>> act(v.size(), std::vector<std::size_t>(v.size()));
  for (int x = 0; x <= k; ++x)
    for (int u = 0; u <= k; ++u) act[x][u] = static_cast<std::size_t>(std::min(x + u, k));
  return OrdAction(underlying_order(v), q, std::move(act));
}

MetricSpace metric_from_action(const OrdAction& a) {
  if (!check_action_conditions(a).algebra())
    throw Error(ErrorCode::ConditionsViolated, "action is not a unitary associative monotone algebra");
  const std::size_t n = a.poset.size();
  const int k = a.quantale.shape().levels;
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n, a.quantale.top()));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (int u = 0; u <= k; ++u)
        if (a.poset.leq(a.act[x][u], y)) {
          d[x][y] = a.quantale.at(u);
          break;
        }
  return MetricSpace(a.quantale, a.poset.carrier(), std::move(d));
}

OrdAction action_from_metric(const MetricSpace& m) {
  require_axioms(m);
  if (!m.quantale().is_chain())
    throw Error(ErrorCode::UnsupportedEnumeration, "actions need a chain quantale");
  if (!is_separated(m)) throw Error(ErrorCode::NotSeparated, "space is not separated");
  const std::vector<Value> levels = m.quantale().values();
  std::vector<std::vector<std::size_t>> act(m.size());
  for (std::size_t x = 0; x < m.size(); ++x)
    for (const Value& u : levels) {
      auto t = tensor(m, x, u);
      if (!t) throw Error(ErrorCode::NotTensored, "missing tensor " + m.carrier()[x] + " + " + u.str());
      act[x].push_back(*t);
    }
  return OrdAction(underlying_order(m), m.quantale(), std::move(act));
}

bool actions_equivalent(const OrdAction& a, const OrdAction& b) {
  if (!(a.poset == b.poset) || !(a.quantale == b.quantale)) return false;
  for (std::size_t x = 0; x < a.act.size(); ++x)
    for (std::size_t u = 0; u < a.act[x].size(); ++u)
      if (!a.poset.equivalent(a.act[x][u], b.act[x][u])) return false;
  return true;
}

bool map_is_metric_via_order(std::span<const std::size_t> f, const MetricSpace& x,
                             const MetricSpace& y) {
  if (!is_tensored(x) || !is_tensored(y))
    throw Error(ErrorCode::NotTensored, "both spaces must be tensored");
  const FinitePoset px = underlying_order(x);
  const FinitePoset py = underlying_order(y);
  if (!is_monotone(px, py, f)) return false;
  for (const Value& u : x.quantale().values())
    for (std::size_t a = 0; a < x.size(); ++a)
      if (!py.leq(*tensor(y, f[a], u), f[*tensor(x, a, u)])) return false;
  return true;
}

bool cocomplete_algebra_check(const OrdAction& a) {
  if (!check_action_conditions(a).all())
    throw Error(ErrorCode::ConditionsViolated, "action fails one of the five conditions");
  if (!is_complete_lattice(a.poset)) return false;
  const std::size_t levels = a.quantale.size();
  for (std::size_t u = 0; u < levels; ++u) {
    std::vector<std::size_t> shift;
    for (std::size_t x = 0; x < a.poset.size(); ++x) shift.push_back(a.act[x][u]);
    if (!preserves_existing_sups(a.poset, a.poset, shift)) return false;
  }
  return true;
}

}  // namespace lawvere
