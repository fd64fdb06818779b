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

#ifndef LAWVERE_APPROACH_SPACE_HPP_
#define LAWVERE_APPROACH_SPACE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lawvere/metric.hpp"
#include "lawvere/subset.hpp"
#include "lawvere/ultrafilter.hpp"

namespace lawvere {

/// A finite approach space in one of its two presentations.
///
/// Dist: table[x][A] = δ(x, A) for every subset A (bitmask index).
/// Conv: table[i][x] = a(𝔵_i, x), where 𝔵_i is the principal ultrafilter
/// at point i.  Shape and quantale membership are checked on construction;
/// the axioms are checked by `check_approach_axioms`.
class ApproachSpace {
 public:
  enum class Form { Dist, Conv };

  ApproachSpace() = default;
  ApproachSpace(Form form, ValueQuantale q, std::vector<std::string> carrier,
                std::vector<std::vector<Value>> table);

  Form form() const noexcept { return form_; }
  const ValueQuantale& quantale() const noexcept { return q_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const std::vector<std::string>& carrier() const noexcept { return carrier_; }
  const std::vector<std::vector<Value>>& table() const noexcept { return table_; }

  friend bool operator==(const ApproachSpace&, const ApproachSpace&) = default;

 private:
  Form form_ = Form::Conv;
  ValueQuantale q_;
  std::vector<std::string> carrier_;
  std::vector<std::vector<Value>> table_;
};

/// δ(x, A), evaluated from either presentation (inf over 𝔵 ∋ A of a(𝔵,x)).
Value point_set_distance(const ApproachSpace& s, std::size_t x, Subset a);
/// a(𝔵, x), evaluated from either presentation (sup over A ∈ 𝔵 of δ(x,A)).
Value convergence(const ApproachSpace& s, const Ultrafilter& u, std::size_t x);

/// A^(ε) = {x | δ(x, A) <= ε}.
Subset expansion(const ApproachSpace& s, Subset a, const Value& eps);

/// Largest carrier for which the lifted convergence Ua is evaluated.
inline constexpr std::size_t kMaxLifted = 8;

/// Ua(𝔛, 𝔵) = sup over 𝒜 ∈ 𝔛, A ∈ 𝔵 of inf over 𝔞 ∈ 𝒜, x ∈ A of a(𝔞, x).
/// `big` is an ultrafilter on the index set of UX.
Value lifted_convergence(const ApproachSpace& s, const Ultrafilter& big, const Ultrafilter& u);

/// Dist: the four distance axioms, axiom (4) over every chain level (or,
/// over the rationals, over 0 and every value δ takes).  Conv:
/// 0 >= a(ẋ,x) and Ua(𝔛,𝔵) + a(𝔵,x) >= a(m(𝔛),x).
bool check_approach_axioms(const ApproachSpace& s);
/// Throws AxiomsViolated.
void require_approach_axioms(const ApproachSpace& s);

ApproachSpace dist_to_conv(const ApproachSpace& s);
ApproachSpace conv_to_dist(const ApproachSpace& s);
/// The same space in convergence form.
ApproachSpace as_conv(const ApproachSpace& s);

/// a_0(x, y) = a(ẋ, y).
MetricSpace underlying_metric(const ApproachSpace& s);
/// a(ẋ,y) = 0 = a(ẏ,x) implies x = y.
bool is_T0(const ApproachSpace& s);
/// Every distance is 0 or the top.
bool is_topological(const ApproachSpace& s);
/// The underlying topological space, as the approach space whose
/// convergence is 0 exactly on the zero set of a and the top elsewhere.
ApproachSpace underlying_top(const ApproachSpace& s);

/// a_d(𝔵, y) = sup over A ∈ 𝔵 of inf over z ∈ A of d(z, y).
ApproachSpace approach_from_metric(const MetricSpace& m);

/// a(𝔵, x) >= b(Uf(𝔵), f(x)).
bool is_approach_map(const ApproachSpace& source, const ApproachSpace& target,
                     std::span<const std::size_t> f);
/// 𝔵 -> x implies Uf(𝔵) -> f(x), for the zero-set convergences.
bool is_continuous(const ApproachSpace& source, const ApproachSpace& target,
                   std::span<const std::size_t> f);

}  // namespace lawvere

#endif  // LAWVERE_APPROACH_SPACE_HPP_
