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

#ifndef LAWVERE_COLIMIT_HPP_
#define LAWVERE_COLIMIT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lawvere/metric.hpp"

namespace lawvere {

// Every existence query below scans the whole carrier for a witness of the
// defining equation and returns the least-index one.

/// x0 with d(x0, x) = sup_y d(y,x) ⊖ ψ(y) for every x.
std::optional<std::size_t> weighted_sup(const MetricSpace& m, const WeightTable& psi);
/// x0 with d(x, x0) = sup_y d(x,y) ⊖ φ(y) for every x.
std::optional<std::size_t> weighted_inf(const MetricSpace& m, const WeightTable& phi);

/// x + u: d(x+u, y) = d(x,y) ⊖ u.
std::optional<std::size_t> tensor(const MetricSpace& m, std::size_t x, const Value& u);
/// x ⊖ u: d(y, x⊖u) = d(y,x) ⊖ u.
std::optional<std::size_t> cotensor(const MetricSpace& m, std::size_t x, const Value& u);

// The next three quantify over every chain level and throw
// UnsupportedEnumeration over the extended rationals.
bool is_tensored(const MetricSpace& m);
bool is_cotensored(const MetricSpace& m);
/// Complete underlying order, tensored and cotensored.
bool is_cocomplete(const MetricSpace& m);

/// Sup ψ = inf_x (x + ψ(x)), where the inf is read in the numeric
/// convention of V: the join of the tensors in the underlying order.
/// Throws FormulaInapplicable unless the space is cocomplete.
std::size_t sup_by_formula(const MetricSpace& m, const WeightTable& psi);

/// ψ⁺(x) = sup_y d(y,x) ⊖ ψ(y); covariant.
WeightTable isbell_plus(const MetricSpace& m, const WeightTable& psi);
/// φ⁻(x) = sup_y d(x,y) ⊖ φ(y); contravariant.
WeightTable isbell_minus(const MetricSpace& m, const WeightTable& phi);

/// ψ_A(x) = inf_{a in A} d(x,a).
WeightTable down_set_of_subset(const MetricSpace& m, Subset a);
/// d(-, x) + u.
WeightTable formal_ball(const MetricSpace& m, std::size_t x, const Value& u);
/// inf_i d(-, family[i]).
WeightTable fam_weight(const MetricSpace& m, std::span<const std::size_t> family);

/// All valid weights of one variance as a metric space.  Contravariant
/// weights carry [h,k] = sup k ⊖ h; covariant ones the dual of that, so
/// that (-)⁺ and (-)⁻ are metric maps between the two.
struct WeightSpace {
  MetricSpace space;
  std::vector<WeightTable> weights;

  std::size_t index_of(const WeightTable& w) const;
};

WeightSpace weight_space(const MetricSpace& m, Variance variance);

/// (-)⁺ ⊣ (-)⁻ as metric maps between the materialized weight spaces.
bool isbell_adjunction_check(const MetricSpace& m);

/// For every level u with all tensors and cotensors present, x ↦ x+u is
/// left adjoint to x ↦ x⊖u in the underlying order.
bool tensor_cotensor_adjunction(const MetricSpace& m);

/// f preserves tensors and the suprema of every ψ_A: both sides of the
/// defining equations are compared in the target.  Throws NotCocomplete.
bool preserves_weighted_sups(const MetricMap& f);
/// d'(f(Sup ψ), y) = sup_x d'(f(x), y) ⊖ ψ(x) for every enumerable ψ.
bool preserves_weighted_sups_by_definition(const MetricMap& f);

}  // namespace lawvere

#endif  // LAWVERE_COLIMIT_HPP_
