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

#ifndef LAWVERE_ACTION_HPP_
#define LAWVERE_ACTION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "lawvere/metric.hpp"
#include "lawvere/order.hpp"

namespace lawvere {

/// An action X × V -> X of a chain quantale on a finite ordered set,
/// written x + u.  act[x][i] is x + (chain level i).
struct OrdAction {
  OrdAction() = default;
  /// Throws UnsupportedEnumeration for non-chain quantales and
  /// ShapeMismatch for tables of the wrong size.
  OrdAction(FinitePoset poset, ValueQuantale q, std::vector<std::vector<std::size_t>> act);

  std::size_t apply(std::size_t x, const Value& u) const;

  FinitePoset poset;
  ValueQuantale quantale;
  std::vector<std::vector<std::size_t>> act;

  friend bool operator==(const OrdAction&, const OrdAction&) = default;
};

struct ActionConditions {
  bool unitary = false;      // x + 0 ≃ x
  bool associative = false;  // (x + u) + v ≃ x + (u + v)
  bool monotone = false;     // monotone in x, antitone in u
  bool bottom = false;       // x + top is a bottom element
  bool infima = false;       // x + inf S ≃ join of x + s over S, every S

  bool all() const { return unitary && associative && monotone && bottom && infima; }
  bool algebra() const { return unitary && associative && monotone; }
};

ActionConditions check_action_conditions(const OrdAction& a);

/// V acting on itself by addition; the order is the underlying order of
/// the quantale space, i.e. the reverse numeric order.
OrdAction quantale_action(const ValueQuantale& q);

/// d(x,y) = min {u | x + u <= y}, or the top when no level qualifies.
/// Throws ConditionsViolated unless the action is unitary, associative and
/// monotone.
MetricSpace metric_from_action(const OrdAction& a);

/// The underlying order with x + u := tensor(x, u).  Throws NotTensored or
/// NotSeparated.
OrdAction action_from_metric(const MetricSpace& m);

/// Same poset and pointwise ≃ tables.
bool actions_equivalent(const OrdAction& a, const OrdAction& b);

/// f monotone on the underlying orders and f(x) + u <= f(x + u) for all
/// x, u.  Throws NotTensored.
bool map_is_metric_via_order(std::span<const std::size_t> f, const MetricSpace& x,
                             const MetricSpace& y);

/// Complete lattice on which every x ↦ x + u preserves all suprema.
/// Throws ConditionsViolated unless all five conditions hold.
bool cocomplete_algebra_check(const OrdAction& a);

}  // namespace lawvere

#endif  // LAWVERE_ACTION_HPP_
