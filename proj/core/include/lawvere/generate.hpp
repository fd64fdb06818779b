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

#ifndef LAWVERE_GENERATE_HPP_
#define LAWVERE_GENERATE_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "lawvere/action.hpp"
#include "lawvere/approach_space.hpp"
#include "lawvere/metric.hpp"
#include "lawvere/order.hpp"

namespace lawvere {

using Rng = std::mt19937_64;

/// Every reflexive transitive relation on n labelled points.
std::vector<FinitePoset> enumerate_posets(std::size_t n, bool antisymmetric_only);
/// Antisymmetric complete lattices on n labelled points.
std::vector<FinitePoset> enumerate_lattices(std::size_t n);

/// Every distance table on n points satisfying the axioms.  Chains only.
std::vector<MetricSpace> enumerate_metrics(const ValueQuantale& q, std::size_t n);
/// A random table closed under the triangle law (shortest paths).  Over
/// the rationals entries are p/q with p < 8, q <= 4, or infinity.
MetricSpace random_metric(const ValueQuantale& q, std::size_t n, Rng& rng);
/// A random contravariant weight, repaired to satisfy ψ(x) <= d(x,y) + ψ(y).
WeightTable random_weight(const MetricSpace& m, Rng& rng);

/// Action tables on an antisymmetric poset with a bottom, with x + 0 = x
/// and x + top = bottom built in; every other entry ranges freely.
std::vector<OrdAction> enumerate_actions(const FinitePoset& p, const ValueQuantale& q);

/// Every distance-form approach space on n points.  Throws TooLarge when
/// the raw table count exceeds 2^24.
std::vector<ApproachSpace> enumerate_dist_spaces(const ValueQuantale& q, std::size_t n);
/// δ(x, A) = inf over z in A of d(z, x) for a random metric d.
ApproachSpace random_dist_space(const ValueQuantale& q, std::size_t n, Rng& rng);

}  // namespace lawvere

#endif  // LAWVERE_GENERATE_HPP_
