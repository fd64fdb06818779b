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

#include "lawvere/generate.hpp"

#include <algorithm>
#include <string>

namespace lawvere {

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Odometer over `digits` positions with `base` values each.
bool advance(std::vector<std::size_t>& digits, std::size_t base) {
  for (std::size_t& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

Value random_value(const ValueQuantale& q, Rng& rng) {
  if (q.is_chain()) {
    std::uniform_int_distribution<int> pick(0, q.shape().levels);
    return q.at(pick(rng));
  }
  std::uniform_int_distribution<int> top(0, 9);
  if (top(rng) == 0) return Value::infinity();
  std::uniform_int_distribution<std::int64_t> num(0, 7), den(1, 4);
  return Value::rational(num(rng), den(rng));
}

}  // namespace

std::vector<FinitePoset> enumerate_posets(std::size_t n, bool antisymmetric_only) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) pairs.emplace_back(x, y);
  if (pairs.size() > 20) throw Error(ErrorCode::TooLarge, "too many points to enumerate posets");
  std::vector<FinitePoset> out;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) leq[x][x] = true;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) leq[pairs[i].first][pairs[i].second] = true;
    bool transitive = true;
    for (std::size_t x = 0; x < n && transitive; ++x)
      for (std::size_t y = 0; y < n && transitive; ++y)
        for (std::size_t z = 0; z < n && transitive; ++z)
          if (leq[x][y] && leq[y][z] && !leq[x][z]) transitive = false;
    if (!transitive) continue;
    FinitePoset p(names(n), std::move(leq));
    if (antisymmetric_only && !p.is_antisymmetric()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<FinitePoset> enumerate_lattices(std::size_t n) {
  std::vector<FinitePoset> out;
  for (FinitePoset& p : enumerate_posets(n, true))
    if (is_complete_lattice(p)) out.push_back(std::move(p));
  return out;
}

std::vector<MetricSpace> enumerate_metrics(const ValueQuantale& q, std::size_t n) {
  if (!q.is_chain()) throw Error(ErrorCode::UnsupportedEnumeration, "metrics are enumerated over chains");
  const std::vector<Value> levels = q.values();
  const std::size_t off = n * n - n;
  std::vector<MetricSpace> out;
  std::vector<std::size_t> digits(off, 0);
  do {
    std::vector<std::vector<Value>> d(n, std::vector<Value>(n, q.zero()));
    std::size_t k = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y) d[x][y] = levels[digits[k++]];
    MetricSpace m(q, names(n), std::move(d));
    if (m.satisfies_axioms()) out.push_back(std::move(m));
  } while (advance(digits, levels.size()));
  return out;
}

MetricSpace random_metric(const ValueQuantale& q, std::size_t n, Rng& rng) {
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n, q.zero()));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) d[x][y] = random_value(q, rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) d[x][y] = std::min(d[x][y], add(d[x][k], d[k][y]));
  return MetricSpace(q, names(n), std::move(d));
}

WeightTable random_weight(const MetricSpace& m, Rng& rng) {
  WeightTable w{Variance::Contra, {}};
  for (std::size_t x = 0; x < m.size(); ++x) w.values.push_back(random_value(m.quantale(), rng));
  // Lower each value to the least admissible bound; one pass suffices
  // because d already satisfies the triangle law.
  std::vector<Value> fixed = w.values;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) fixed[x] = std::min(fixed[x], add(m.d(x, y), w.values[y]));
  w.values = std::move(fixed);
  return w;
}

std::vector<OrdAction> enumerate_actions(const FinitePoset& p, const ValueQuantale& q) {
  if (!q.is_chain()) throw Error(ErrorCode::UnsupportedEnumeration, "actions need a chain quantale");
  if (!p.is_antisymmetric()) throw Error(ErrorCode::InvalidStructure, "poset must be antisymmetric");
  const auto bot = bottom(p);
  if (!bot) return {};
  const std::size_t n = p.size();
  const std::size_t k = static_cast<std::size_t>(q.shape().levels);
  const std::size_t inner = k >= 1 ? k - 1 : 0;
  std::vector<OrdAction> out;
  std::vector<std::size_t> digits(n * inner, 0);
  do {
    std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(k + 1));
    for (std::size_t x = 0; x < n; ++x) {
      act[x][0] = x;
      act[x][k] = *bot;
      for (std::size_t u = 1; u < k; ++u) act[x][u] = digits[x * inner + (u - 1)];
    }
    out.emplace_back(p, q, std::move(act));
  } while (advance(digits, n));
  return out;
}

std::vector<ApproachSpace> enumerate_dist_spaces(const ValueQuantale& q, std::size_t n) {
  if (!q.is_chain()) throw Error(ErrorCode::UnsupportedEnumeration, "spaces are enumerated over chains");
  const std::vector<Value> levels = q.values();
  const std::uint64_t subsets = subset_count(n);
  // Free entries: δ(x, A) for A nonempty and A != {x}.
  std::vector<std::pair<std::size_t, Subset>> free;
  for (std::size_t x = 0; x < n; ++x)
    for (Subset a = 1; a < subsets; ++a)
      if (a != bit(x)) free.emplace_back(x, a);
  double raw = 1;
  for (std::size_t i = 0; i < free.size(); ++i) raw *= static_cast<double>(levels.size());
  if (raw > double(1 << 24)) throw Error(ErrorCode::TooLarge, "too many distance tables");
  std::vector<ApproachSpace> out;
  std::vector<std::size_t> digits(free.size(), 0);
  do {
    std::vector<std::vector<Value>> d(n, std::vector<Value>(subsets, q.zero()));
    for (std::size_t x = 0; x < n; ++x) d[x][0] = q.top();
    for (std::size_t i = 0; i < free.size(); ++i) d[free[i].first][free[i].second] = levels[digits[i]];
    ApproachSpace s(ApproachSpace::Form::Dist, q, names(n), std::move(d));
    if (check_approach_axioms(s)) out.push_back(std::move(s));
  } while (advance(digits, levels.size()));
  return out;
}

ApproachSpace random_dist_space(const ValueQuantale& q, std::size_t n, Rng& rng) {
  const MetricSpace m = random_metric(q, n, rng);
  const std::uint64_t subsets = subset_count(n);
  std::vector<std::vector<Value>> d(n, std::vector<Value>(subsets, q.top()));
  for (std::size_t x = 0; x < n; ++x)
    for (Subset a = 0; a < subsets; ++a)
      for (std::size_t z : elements(a)) d[x][a] = std::min(d[x][a], m.d(z, x));
  return ApproachSpace(ApproachSpace::Form::Dist, q, m.carrier(), std::move(d));
}

}  // namespace lawvere
