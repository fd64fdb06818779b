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

#ifndef LAWVERE_APPROACH_HPP_
#define LAWVERE_APPROACH_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "lawvere/action.hpp"
#include "lawvere/approach_space.hpp"
#include "lawvere/metric.hpp"

namespace lawvere {

/// c(𝔴, (x,y)) = a(Uπ₁𝔴, x) + b(Uπ₂𝔴, y); (x,y) sits at x * |B| + y.
ApproachSpace plus_product_app(const ApproachSpace& a, const ApproachSpace& b);
/// c(𝔴, (x,y)) = max(a(Uπ₁𝔴, x), b(Uπ₂𝔴, y)), the categorical product.
ApproachSpace max_product_app(const ApproachSpace& a, const ApproachSpace& b);
/// X^I for a discrete I with m points: c(𝔴, h) = sup_i a(Uπᵢ𝔴, h(i)).
/// h sits at h(0) n^(m-1) + ... + h(m-1).
ApproachSpace power_app(const ApproachSpace& a, std::size_t m);

/// Down-sets (UX)^op -> V: contravariant weights on `ux_metric`.  Chains only.
std::vector<WeightTable> enumerate_app_weights(const ApproachSpace& a);

/// x₀ with a(ẋ₀, x) = sup over 𝔵 of a(𝔵,x) ⊖ ψ(𝔵), if one exists.
/// Throws InvalidWeight.
std::optional<std::size_t> weighted_sup_app(const ApproachSpace& a, const WeightTable& psi);

/// For every 𝔵 the least x₀ with a₀(x₀, x) = a(𝔵, x) for all x.
std::optional<std::vector<std::size_t>> u_cocomplete_alpha(const ApproachSpace& a);
bool is_U_cocomplete(const ApproachSpace& a);
/// e_X: X₀ -> (UX)₀ has a left adjoint, searched on the metric of UX.
bool u_cocomplete_by_adjunction(const ApproachSpace& a);
/// U-cocomplete and a₀ cocomplete.
bool is_cocomplete_app(const ApproachSpace& a);
/// The join over 𝔵 of α(𝔵) + ψ(𝔵).  Throws FormulaInapplicable unless
/// the space is cocomplete.
std::size_t sup_by_formula_app(const ApproachSpace& a, const WeightTable& psi);

/// a(m(𝔛), x) = inf over 𝔵 ∈ UX of Ua(𝔛, 𝔵) + a(𝔵, x) for every 𝔛 and x.
bool plus_exponentiable_check(const ApproachSpace& a);
/// sup over 𝔵 of inf over x of a(𝔵, x).
Value compactness_degree(const ApproachSpace& a);

/// φ⁻(𝔵) = sup_x a(𝔵,x) ⊖ φ(x), for φ a covariant weight on a₀.
WeightTable isbell_minus_app(const ApproachSpace& a, const WeightTable& phi);
/// ψ⁺(x) = sup_𝔵 a(𝔵,x) ⊖ ψ(𝔵), for ψ a down-set on UX.
WeightTable isbell_plus_app(const ApproachSpace& a, const WeightTable& psi);
/// The adjunction, both triple laws and commutation with the Yoneda
/// embeddings, over every enumerable weight.  Chains only.
bool isbell_app_check(const ApproachSpace& a);

/// 𝔵 ↦ a(𝔵, x).
WeightTable approach_yoneda(const ApproachSpace& a, std::size_t x);
/// [a(-,x), ψ] = ψ(ẋ).
bool approach_yoneda_lemma_check(const ApproachSpace& a, std::size_t x, const WeightTable& psi);
/// [d(-, m(𝔛)), ψ] = ψ(m(𝔛)) on every principal 𝔛 ∈ UUX.
bool second_yoneda_check(const ApproachSpace& a, const WeightTable& psi);

/// X_p: complete underlying lattice, and α: UX -> X and every finite join
/// X^I -> X (|I| <= 2) continuous.
bool is_top_absolutely_cocomplete(const ApproachSpace& a);

/// U-cocomplete, a₀ cocomplete, X_p absolutely cocomplete, each -+u
/// preserves down-directed infima and each x+- sends suprema of nonempty
/// sets of values to down-directed infima.  Throws NotT0, and
/// UnsupportedEnumeration off chains.
bool is_absolutely_cocomplete(const ApproachSpace& a);

struct ThreeMaps {
  bool cocomplete = false;
  bool plus = false;   // + : X ⊕ V -> X
  bool alpha = false;  // α : KM(X) -> X
  bool join = false;   // ⋁ : X^I -> X, |I| <= 2

  bool all() const { return cocomplete && plus && alpha && join; }
};
ThreeMaps three_map_criterion(const ApproachSpace& a);

/// The four clauses of the characterization of absolute cocompleteness:
/// (i) cocomplete and Sup: PX -> X an approach map; (ii) cocomplete, X_p
/// absolutely cocomplete and + : X ⊕ V -> X an approach map; (iii) as
/// (ii) with + : X_p × V_p -> X_p continuous; (iv) is_absolutely_cocomplete.
std::array<bool, 4> main_theorem_clauses(const ApproachSpace& a);

/// Conditions (1)-(5), antisymmetric op-continuous lattice, and
/// cocomplete_algebra_check.
bool is_lattice_action(const OrdAction& l);

/// Underlying order with the tensor action.  Throws NotT0 or
/// ConditionsViolated.
OrdAction app_to_lattice_action(const ApproachSpace& a);
/// K of (metric_from_action(l), alpha_from_lattice).  Throws
/// ConditionsViolated unless is_lattice_action(l).
ApproachSpace lattice_action_to_app(const OrdAction& l);

}  // namespace lawvere

#endif  // LAWVERE_APPROACH_HPP_
