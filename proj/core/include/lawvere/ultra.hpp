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

#ifndef LAWVERE_ULTRA_HPP_
#define LAWVERE_ULTRA_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lawvere/approach_space.hpp"
#include "lawvere/metric.hpp"
#include "lawvere/order.hpp"
#include "lawvere/ultrafilter.hpp"

namespace lawvere {

/// Unit, multiplication and associativity laws of the ultrafilter monad
/// on an n-element set, with UUX and UUUX built from principal
/// ultrafilters over index sets.
bool monad_laws_hold(std::size_t n);

/// Uf as a table on ultrafilter indices.
std::vector<std::size_t> lift_map(std::span<const std::size_t> f, std::size_t target_size);

/// 𝔵 <= 𝔶 iff every A ∈ 𝔵, B ∈ 𝔶 contain x <= y.  Carrier "u(x)".
FinitePoset lift_order(const FinitePoset& p);
/// Ud(𝔵,𝔶) = sup over A ∈ 𝔵, B ∈ 𝔶 of inf over x ∈ A, y ∈ B of d(x,y).
MetricSpace lift_metric(const MetricSpace& m);

/// α(ẋ) = x and α·Uα = α·m_X.  alpha[i] is the image of the i-th ultrafilter.
bool em_algebra_check(std::size_t n, std::span<const std::size_t> alpha);
/// em_algebra_check and α: UX -> X monotone for the lifted order.
bool is_ordered_compact_hausdorff(const FinitePoset& p, std::span<const std::size_t> alpha);
/// em_algebra_check and α: (UX, Ud) -> (X, d) a metric map.
bool is_metric_compact_hausdorff(const MetricSpace& m, std::span<const std::size_t> alpha);

/// 𝔵 + u = U(t_u)(𝔵) with t_u(x) = x + u.  Throws NotTensored.
Ultrafilter lifted_tensor(const MetricSpace& m, const Ultrafilter& x, const Value& u);

struct MetCompHaus {
  MetricSpace metric;
  std::vector<std::size_t> alpha;
};

/// a(𝔵, x) = d(α(𝔵), x).  Throws InvalidStructure unless the input is
/// metric compact Hausdorff.
ApproachSpace K_approach(const MetCompHaus& s);

/// A convergence relation between principal ultrafilters and points.
struct ConvergenceSpace {
  std::size_t size = 0;
  /// converges[i][x]: the i-th ultrafilter converges to x.
  std::vector<std::vector<bool>> converges;
};

/// 𝔵 -> x iff α(𝔵) <= x.  Throws InvalidStructure unless the input is
/// ordered compact Hausdorff.
ConvergenceSpace K_top(const FinitePoset& p, std::span<const std::size_t> alpha);
/// A is open iff every ultrafilter converging to a point of A contains A.
bool is_open(const ConvergenceSpace& s, Subset a);

/// ξ(𝔳) = sup over A ∈ 𝔳 of inf A, on the chain carrier of `q`.
Value xi(const ValueQuantale& q, const Ultrafilter& v);
/// (V, μ, ξ) and its dual (V, μ°, ξ).  Chains only.
MetCompHaus quantale_structure(const ValueQuantale& q);
MetCompHaus quantale_op_structure(const ValueQuantale& q);
/// K of the two structures above.
ApproachSpace quantale_approach(const ValueQuantale& q);
ApproachSpace quantale_op_approach(const ValueQuantale& q);

/// d(𝔵,𝔶) = inf {ε | A^(ε) ∈ 𝔶 for every A ∈ 𝔵} on UX.
MetricSpace ux_metric(const ApproachSpace& s);
/// (UX, ux_metric, m_X).
MetCompHaus M_functor(const ApproachSpace& s);

/// x ↦ ẋ is an approach map X -> KM(X).
bool mk_unit_check(const ApproachSpace& s);
/// α: MK(X) -> X is a metric map commuting with the structure maps.
bool km_counit_check(const MetCompHaus& s);

/// first: f is a metric map and β·Uf(𝔵) <= f·α(𝔵) for every 𝔵.
/// second: f is an approach map K(X) -> K(Y).
std::pair<bool, bool> map_check_compact(std::span<const std::size_t> f, const MetCompHaus& x,
                                        const MetCompHaus& y);

}  // namespace lawvere

#endif  // LAWVERE_ULTRA_HPP_
