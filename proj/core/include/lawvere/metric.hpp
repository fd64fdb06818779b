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

#ifndef LAWVERE_METRIC_HPP_
#define LAWVERE_METRIC_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lawvere/order.hpp"
#include "lawvere/quantale.hpp"

namespace lawvere {

/// Finite Lawvere metric space: d(x,x) = 0 and d(x,y) + d(y,z) >= d(x,z).
/// Nothing else is assumed; d need not be symmetric, separated or finite.
///
/// The constructor only checks the table's shape and that every entry lives
/// in the quantale, so that malformed inputs can still be inspected.  The
/// axioms are evaluated once and cached; operations that rely on them throw
/// AxiomsViolated when they fail.
class MetricSpace {
 public:
  MetricSpace() = default;
  MetricSpace(ValueQuantale q, std::vector<std::string> carrier,
              std::vector<std::vector<Value>> d);
  /// Carrier named "0", "1", ...
  static MetricSpace from_table(ValueQuantale q, std::vector<std::vector<Value>> d);

  const ValueQuantale& quantale() const noexcept { return q_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const std::vector<std::string>& carrier() const noexcept { return carrier_; }
  std::size_t index_of(const std::string& name) const;

  const Value& d(std::size_t x, std::size_t y) const { return d_[x][y]; }
  const std::vector<std::vector<Value>>& table() const noexcept { return d_; }

  bool satisfies_axioms() const noexcept { return axioms_; }
  /// x ≃ y: d(x,y) = 0 = d(y,x).
  bool equivalent(std::size_t x, std::size_t y) const {
    return d_[x][y].is_zero() && d_[y][x].is_zero();
  }

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.q_ == b.q_ && a.carrier_ == b.carrier_ && a.d_ == b.d_;
  }

 private:
  ValueQuantale q_;
  std::vector<std::string> carrier_;
  std::vector<std::vector<Value>> d_;
  bool axioms_ = true;
};

bool check_metric_axioms(const MetricSpace& m);
/// Throws AxiomsViolated.
void require_axioms(const MetricSpace& m);
bool is_separated(const MetricSpace& m);
MetricSpace dual(const MetricSpace& m);
/// Restriction to the listed points, in the given order.
MetricSpace subspace(const MetricSpace& m, std::span<const std::size_t> points);

/// x <= y iff d(x,y) = 0.
FinitePoset underlying_order(const MetricSpace& m);
/// d(x,y) = 0 if x <= y, the top of `q` otherwise.
MetricSpace order_to_metric(const FinitePoset& p, const ValueQuantale& q);

MetricSpace discrete_space(const ValueQuantale& q, std::size_t n);
MetricSpace one_point(const ValueQuantale& q);
/// The quantale as a space, d(u,v) = v ⊖ u.  Chains only.
MetricSpace quantale_space(const ValueQuantale& q);

/// (x,y) sits at index x * |N| + y in both products.
MetricSpace plus_product(const MetricSpace& m, const MetricSpace& n);
MetricSpace max_product(const MetricSpace& m, const MetricSpace& n);

/// d(x,y) >= d'(f(x), f(y)) for every pair.
bool is_metric_map(const MetricSpace& source, const MetricSpace& target,
                   std::span<const std::size_t> f);
bool is_isometry(const MetricSpace& source, const MetricSpace& target,
                 std::span<const std::size_t> f);

struct MetricMap {
  /// Throws InvalidStructure unless the table is a metric map.
  MetricMap(MetricSpace source, MetricSpace target, std::vector<std::size_t> table);

  MetricSpace source;
  MetricSpace target;
  std::vector<std::size_t> table;
};

bool is_isometry(const MetricMap& f);
/// d'(f(x), x') = d(x, g(x')) for all x, x'.  Throws DomainMismatch.
bool adjoint_pair_met(const MetricMap& f, const MetricMap& g);

/// Y^X with the sup metric [h,k] = sup_x d(h(x), k(x)).
struct FunctionSpace {
  MetricSpace space;
  /// maps[i] is the table of the i-th carrier element.
  std::vector<std::vector<std::size_t>> maps;
};

/// Enumerates every metric map X -> Y.  Chain quantales only.
FunctionSpace function_space(const MetricSpace& x, const MetricSpace& y);

enum class Variance { Contra, Co };

/// A weight on a finite space.  Contravariant ("down-set") weights are
/// metric maps X^op -> V, covariant ("up-set") ones metric maps X -> V.
struct WeightTable {
  Variance variance = Variance::Contra;
  std::vector<Value> values;

  const Value& operator[](std::size_t x) const { return values[x]; }
  friend bool operator==(const WeightTable&, const WeightTable&) = default;
};

/// Contra: ψ(x) <= d(x,y) + ψ(y).  Co: φ(y) <= d(x,y) + φ(x).
bool is_valid_weight(const MetricSpace& m, const WeightTable& w);
/// Throws InvalidWeight if `w` is invalid or has the wrong variance.
void require_weight(const MetricSpace& m, const WeightTable& w, Variance variance);

/// Every valid weight of the given variance, in lexicographic order of
/// chain levels.  Chain quantales only.
std::vector<WeightTable> enumerate_weights(const MetricSpace& m, Variance variance);

/// Pointwise sup of k(x) ⊖ h(x); the distance of [X^op, V] (or of [X, V]).
Value weight_distance(const WeightTable& h, const WeightTable& k);

/// d(-, x), contravariant.
WeightTable yoneda(const MetricSpace& m, std::size_t x);
/// d(x, -), covariant.
WeightTable co_yoneda(const MetricSpace& m, std::size_t x);

/// [yoneda(x), ψ] == ψ(x).
bool yoneda_lemma_check(const MetricSpace& m, std::size_t x, const WeightTable& psi);

}  // namespace lawvere

#endif  // LAWVERE_METRIC_HPP_
