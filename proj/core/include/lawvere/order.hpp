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

#ifndef LAWVERE_ORDER_HPP_
#define LAWVERE_ORDER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lawvere/subset.hpp"
#include "lawvere/ultrafilter.hpp"

namespace lawvere {

/// Finite preordered set.  Reflexivity and transitivity are enforced on
/// construction; antisymmetry is only reported.  Every query that returns
/// an element answers up to x <= y <= x with the least-index representative.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Throws InvalidStructure unless `leq` is a reflexive, transitive n x n table.
  FinitePoset(std::vector<std::string> carrier, std::vector<std::vector<bool>> leq);

  static FinitePoset discrete(std::size_t n);
  /// 0 < 1 < ... < n-1
  static FinitePoset chain(std::size_t n);
  /// Reflexive-transitive closure of the given pairs (x, y) meaning x <= y.
  static FinitePoset from_relation(std::size_t n,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const noexcept { return carrier_.size(); }
  const std::vector<std::string>& carrier() const noexcept { return carrier_; }
  std::size_t index_of(const std::string& name) const;

  bool leq(std::size_t x, std::size_t y) const { return contains(up_[x], y); }
  bool equivalent(std::size_t x, std::size_t y) const { return leq(x, y) && leq(y, x); }
  Subset up_set(std::size_t x) const { return up_[x]; }
  Subset down_set(std::size_t x) const { return down_[x]; }
  bool is_antisymmetric() const;

  FinitePoset dual() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::vector<std::string> carrier_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

/// A monotone map between finite posets; the table is validated on construction.
struct MonotoneMap {
  MonotoneMap(FinitePoset source, FinitePoset target, std::vector<std::size_t> table);

  FinitePoset source;
  FinitePoset target;
  std::vector<std::size_t> table;
};

bool is_monotone(const FinitePoset& source, const FinitePoset& target,
                 std::span<const std::size_t> f);

Subset upper_bounds(const FinitePoset& p, Subset a);
Subset lower_bounds(const FinitePoset& p, Subset a);

/// Least upper bound of `a`, if any.
std::optional<std::size_t> supremum(const FinitePoset& p, Subset a);
/// Greatest lower bound of `a`, if any.
std::optional<std::size_t> infimum(const FinitePoset& p, Subset a);

std::optional<std::size_t> bottom(const FinitePoset& p);
std::optional<std::size_t> top(const FinitePoset& p);

/// Every subset, the empty one included, has a supremum.
bool is_complete_lattice(const FinitePoset& p);

bool is_down_set(const FinitePoset& p, Subset a);
bool is_up_set(const FinitePoset& p, Subset a);
/// Nonempty, and any two members have a common upper bound inside.
bool is_up_directed(const FinitePoset& p, Subset a);
bool is_down_directed(const FinitePoset& p, Subset a);

/// y << x: for every up-directed down-set D, x <= sup D implies y in D.
/// Throws NotCompleteLattice.
bool way_below(const FinitePoset& p, std::size_t y, std::size_t x);
/// y ≻ x: for every down-directed up-set D, inf D <= x implies y in D.
bool way_above(const FinitePoset& p, std::size_t y, std::size_t x);

/// Complete, and x ≃ sup {y | y << x} for every x.
bool is_continuous_lattice(const FinitePoset& p);
/// Complete, and x ≃ inf {y | y ≻ x} for every x.
bool is_op_continuous_lattice(const FinitePoset& p);

/// A is a down-set that up-directed suprema cannot reach from outside:
/// sup D in A implies D meets A, for all up-directed down-sets D.
bool scott_open(const FinitePoset& p, Subset a);

/// 1 <= g.f and f.g <= 1, pointwise.  Throws DomainMismatch on ill-typed pairs.
bool adjoint_pair(const MonotoneMap& f, const MonotoneMap& g);

/// True if f preserves every supremum that exists in its source.
bool preserves_existing_sups(const FinitePoset& source, const FinitePoset& target,
                             std::span<const std::size_t> f);

/// inf over A in the ultrafilter of sup A.  Throws NotOpContinuous.
std::size_t alpha_from_lattice(const FinitePoset& p, const Ultrafilter& u);

}  // namespace lawvere

#endif  // LAWVERE_ORDER_HPP_
