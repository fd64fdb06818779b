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

#include "lawvere/order.hpp"

#include <algorithm>
#include <utility>

namespace lawvere {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> carrier, std::vector<std::vector<bool>> leq)
    : carrier_(std::move(carrier)) {
  const std::size_t n = carrier_.size();
  if (n > kMaxCarrier) throw Error(ErrorCode::TooLarge, "poset carrier exceeds 64 elements");
  if (leq.size() != n)
    throw Error(ErrorCode::ShapeMismatch, "order table has the wrong number of rows");
  up_.assign(n, 0);
  down_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (leq[x].size() != n)
      throw Error(ErrorCode::ShapeMismatch, "order table row has the wrong length");
    for (std::size_t y = 0; y < n; ++y) {
      if (leq[x][y]) {
        up_[x] |= bit(y);
        down_[y] |= bit(x);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!contains(up_[x], x))
      throw Error(ErrorCode::InvalidStructure, "order is not reflexive at " + carrier_[x]);
    for (std::size_t y : elements(up_[x]))
      if ((up_[y] & ~up_[x]) != 0)
        throw Error(ErrorCode::InvalidStructure, "order is not transitive through " + carrier_[y]);
  }
}

FinitePoset FinitePoset::discrete(std::size_t n) { return from_relation(n, {}); }

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_relation(n, pairs);
}

FinitePoset FinitePoset::from_relation(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw Error(ErrorCode::DomainMismatch, "relation pair out of range");
    leq[x][y] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return FinitePoset(default_names(n), std::move(leq));
}

std::size_t FinitePoset::index_of(const std::string& name) const {
  auto it = std::find(carrier_.begin(), carrier_.end(), name);
  if (it == carrier_.end()) throw Error(ErrorCode::DomainMismatch, "no element named " + name);
  return static_cast<std::size_t>(it - carrier_.begin());
}

bool FinitePoset::is_antisymmetric() const {
  for (std::size_t x = 0; x < size(); ++x)
    if ((up_[x] & down_[x]) != bit(x)) return false;
  return true;
}

FinitePoset FinitePoset::dual() const {
  FinitePoset d = *this;
  std::swap(d.up_, d.down_);
  return d;
}

MonotoneMap::MonotoneMap(FinitePoset source_, FinitePoset target_, std::vector<std::size_t> table_)
    : source(std::move(source_)), target(std::move(target_)), table(std::move(table_)) {
  if (!is_monotone(source, target, table))
    throw Error(ErrorCode::InvalidStructure, "map is not monotone");
}

bool is_monotone(const FinitePoset& source, const FinitePoset& target,
                 std::span<const std::size_t> f) {
  if (f.size() != source.size()) throw Error(ErrorCode::ShapeMismatch, "map table size");
  for (std::size_t y : f)
    if (y >= target.size()) throw Error(ErrorCode::DomainMismatch, "map leaves its target");
  for (std::size_t x = 0; x < source.size(); ++x)
    for (std::size_t y : elements(source.up_set(x)))
      if (!target.leq(f[x], f[y])) return false;
  return true;
}

Subset upper_bounds(const FinitePoset& p, Subset a) {
  Subset ub = full_set(p.size());
  for (std::size_t x : elements(a)) ub &= p.up_set(x);
  return ub;
}

Subset lower_bounds(const FinitePoset& p, Subset a) {
  Subset lb = full_set(p.size());
  for (std::size_t x : elements(a)) lb &= p.down_set(x);
  return lb;
}

std::optional<std::size_t> supremum(const FinitePoset& p, Subset a) {
  const Subset ub = upper_bounds(p, a);
  for (std::size_t s : elements(ub))
    if ((ub & ~p.up_set(s)) == 0) return s;
  return std::nullopt;
}

std::optional<std::size_t> infimum(const FinitePoset& p, Subset a) {
  const Subset lb = lower_bounds(p, a);
  for (std::size_t s : elements(lb))
    if ((lb & ~p.down_set(s)) == 0) return s;
  return std::nullopt;
}

std::optional<std::size_t> bottom(const FinitePoset& p) { return supremum(p, 0); }
std::optional<std::size_t> top(const FinitePoset& p) { return infimum(p, 0); }

bool is_complete_lattice(const FinitePoset& p) {
  const std::uint64_t count = subset_count(p.size());
  for (Subset a = 0; a < count; ++a)
    if (!supremum(p, a)) return false;
  return true;
}

bool is_down_set(const FinitePoset& p, Subset a) {
  for (std::size_t x : elements(a))
    if ((p.down_set(x) & ~a) != 0) return false;
  return true;
}

bool is_up_set(const FinitePoset& p, Subset a) {
  for (std::size_t x : elements(a))
    if ((p.up_set(x) & ~a) != 0) return false;
  return true;
}

bool is_up_directed(const FinitePoset& p, Subset a) {
  if (a == 0) return false;
  const auto xs = elements(a);
  for (std::size_t x : xs)
    for (std::size_t y : xs)
      if ((p.up_set(x) & p.up_set(y) & a) == 0) return false;
  return true;
}

bool is_down_directed(const FinitePoset& p, Subset a) {
  if (a == 0) return false;
  const auto xs = elements(a);
  for (std::size_t x : xs)
    for (std::size_t y : xs)
      if ((p.down_set(x) & p.down_set(y) & a) == 0) return false;
  return true;
}

namespace {

void require_complete(const FinitePoset& p) {
  if (!is_complete_lattice(p))
    throw Error(ErrorCode::NotCompleteLattice, "way-below needs a complete lattice");
}

bool way_below_unchecked(const FinitePoset& p, std::size_t y, std::size_t x) {
  const std::uint64_t count = subset_count(p.size());
  for (Subset d = 1; d < count; ++d) {
    if (!is_down_set(p, d) || !is_up_directed(p, d)) continue;
    const std::size_t s = *supremum(p, d);
    if (p.leq(x, s) && !contains(d, y)) return false;
  }
  return true;
}

bool approximated(const FinitePoset& p, bool from_below) {
  const FinitePoset& q = from_below ? p : p.dual();
  for (std::size_t x = 0; x < q.size(); ++x) {
    Subset approximants = 0;
    for (std::size_t y = 0; y < q.size(); ++y)
      if (way_below_unchecked(q, y, x)) approximants |= bit(y);
    if (!q.equivalent(*supremum(q, approximants), x)) return false;
  }
  return true;
}

}  // namespace

bool way_below(const FinitePoset& p, std::size_t y, std::size_t x) {
  require_complete(p);
  return way_below_unchecked(p, y, x);
}

bool way_above(const FinitePoset& p, std::size_t y, std::size_t x) {
  require_complete(p);
  return way_below_unchecked(p.dual(), y, x);
}

bool is_continuous_lattice(const FinitePoset& p) {
  return is_complete_lattice(p) && approximated(p, true);
}

bool is_op_continuous_lattice(const FinitePoset& p) {
  return is_complete_lattice(p) && approximated(p, false);
}

bool scott_open(const FinitePoset& p, Subset a) {
  if (!is_down_set(p, a)) return false;
  const std::uint64_t count = subset_count(p.size());
  for (Subset d = 1; d < count; ++d) {
    if (!is_down_set(p, d) || !is_up_directed(p, d)) continue;
    auto s = supremum(p, d);
    if (s && contains(a, *s) && (d & a) == 0) return false;
  }
  return true;
}

bool adjoint_pair(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.source == g.target) || !(f.target == g.source))
    throw Error(ErrorCode::DomainMismatch, "adjoint pair must be typed X -> Y and Y -> X");
  for (std::size_t x = 0; x < f.source.size(); ++x)
    if (!f.source.leq(x, g.table[f.table[x]])) return false;
  for (std::size_t y = 0; y < f.target.size(); ++y)
    if (!f.target.leq(f.table[g.table[y]], y)) return false;
  return true;
}

bool preserves_existing_sups(const FinitePoset& source, const FinitePoset& target,
                             std::span<const std::size_t> f) {
  const std::uint64_t count = subset_count(source.size());
  for (Subset a = 0; a < count; ++a) {
    auto s = supremum(source, a);
    if (!s) continue;
    Subset image = 0;
    for (std::size_t x : elements(a)) image |= bit(f[x]);
    auto t = supremum(target, image);
    if (!t || !target.equivalent(*t, f[*s])) return false;
  }
  return true;
}

std::size_t alpha_from_lattice(const FinitePoset& p, const Ultrafilter& u) {
  if (u.base_size() != p.size())
    throw Error(ErrorCode::DomainMismatch, "ultrafilter lives on a different carrier");
  if (!is_op_continuous_lattice(p))
    throw Error(ErrorCode::NotOpContinuous, "alpha needs an op-continuous lattice");
  Subset joins = 0;
  for (Subset a : u.members()) joins |= bit(*supremum(p, a));
  return *infimum(p, joins);
}

}  // namespace lawvere
