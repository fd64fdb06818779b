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

#include "lawvere/approach.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lawvere/colimit.hpp"
#include "lawvere/order.hpp"
#include "lawvere/ultra.hpp"

namespace lawvere {

namespace {

std::vector<std::vector<Value>> conv_of(const ApproachSpace& s) { return as_conv(s).table(); }

template <typename Combine>
ApproachSpace binary_product(const ApproachSpace& a, const ApproachSpace& b, Combine combine) {
  if (!(a.quantale() == b.quantale()))
    throw Error(ErrorCode::QuantaleMismatch, "product of spaces over different quantales");
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const auto ta = conv_of(a);
  const auto tb = conv_of(b);
  std::vector<std::size_t> p1, p2;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      p1.push_back(x);
      p2.push_back(y);
      names.push_back("(" + a.carrier()[x] + "," + b.carrier()[y] + ")");
    }
  if (names.size() > kMaxEnumerable) throw Error(ErrorCode::TooLarge, "product carrier too large");
  std::vector<std::vector<Value>> c(names.size());
  for (const Ultrafilter& w : ultrafilters(names.size())) {
    const std::size_t ux = image(w, p1, n).point();
    const std::size_t uy = image(w, p2, m).point();
    for (std::size_t i = 0; i < names.size(); ++i)
      c[w.point()].push_back(combine(ta[ux][p1[i]], tb[uy][p2[i]]));
  }
  return ApproachSpace(ApproachSpace::Form::Conv, a.quantale(), std::move(names), std::move(c));
}

// Index of the first x0 with row(x0) == target, row(x0)[x] = a₀(x0, x).
std::optional<std::size_t> find_generic(const std::vector<std::vector<Value>>& a0,
                                        const std::vector<Value>& target) {
  for (std::size_t x0 = 0; x0 < a0.size(); ++x0)
    if (a0[x0] == target) return x0;
  return std::nullopt;
}

void require_chain(const ApproachSpace& a) {
  if (!a.quantale().is_chain())
    throw Error(ErrorCode::UnsupportedEnumeration, "this check needs a chain quantale");
}

void require_T0(const ApproachSpace& a) {
  if (!is_T0(a)) throw Error(ErrorCode::NotT0, "space is not T0");
}

}  // namespace

ApproachSpace plus_product_app(const ApproachSpace& a, const ApproachSpace& b) {
  return binary_product(a, b, [](const Value& u, const Value& v) { return add(u, v); });
}

ApproachSpace max_product_app(const ApproachSpace& a, const ApproachSpace& b) {
  return binary_product(a, b, [](const Value& u, const Value& v) { return std::max(u, v); });
}

ApproachSpace power_app(const ApproachSpace& a, std::size_t m) {
  const std::size_t n = a.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) {
    count *= n;
    if (count > kMaxEnumerable) throw Error(ErrorCode::TooLarge, "power carrier too large");
  }
  // proj[i][h] = h(i)
  std::vector<std::vector<std::size_t>> proj(m, std::vector<std::size_t>(count));
  std::vector<std::string> names;
  for (std::size_t h = 0; h < count; ++h) {
    std::string name = "(";
    std::size_t rest = h;
    for (std::size_t i = m; i-- > 0;) {
      proj[i][h] = rest % n;
      rest /= n;
    }
    for (std::size_t i = 0; i < m; ++i) name += (i ? "," : "") + a.carrier()[proj[i][h]];
    names.push_back(name + ")");
  }
  const auto ta = conv_of(a);
  std::vector<std::vector<Value>> c(count);
  for (const Ultrafilter& w : ultrafilters(count)) {
    std::vector<std::size_t> images;
    for (std::size_t i = 0; i < m; ++i) images.push_back(image(w, proj[i], n).point());
    for (std::size_t h = 0; h < count; ++h) {
      Value best = a.quantale().zero();
      for (std::size_t i = 0; i < m; ++i) best = std::max(best, ta[images[i]][proj[i][h]]);
      c[w.point()].push_back(best);
    }
  }
  return ApproachSpace(ApproachSpace::Form::Conv, a.quantale(), std::move(names), std::move(c));
}

std::vector<WeightTable> enumerate_app_weights(const ApproachSpace& a) {
  return enumerate_weights(ux_metric(a), Variance::Contra);
}

std::optional<std::size_t> weighted_sup_app(const ApproachSpace& a, const WeightTable& psi) {
  require_weight(ux_metric(a), psi, Variance::Contra);
  const auto t = conv_of(a);
  const std::size_t n = a.size();
  std::vector<Value> rhs(n, a.quantale().zero());
  for (const Ultrafilter& u : ultrafilters(n))
    for (std::size_t x = 0; x < n; ++x)
      rhs[x] = std::max(rhs[x], minus(t[u.point()][x], psi[u.point()]));
  for (std::size_t x0 = 0; x0 < n; ++x0) {
    const Ultrafilter e = unit(n, x0);
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[e.point()][x] == rhs[x];
    if (ok) return x0;
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> u_cocomplete_alpha(const ApproachSpace& a) {
  require_approach_axioms(a);
  const auto a0 = underlying_metric(a).table();
  const auto t = conv_of(a);
  std::vector<std::size_t> alpha;
  for (const Ultrafilter& u : ultrafilters(a.size())) {
    auto x0 = find_generic(a0, t[u.point()]);
    if (!x0) return std::nullopt;
    alpha.push_back(*x0);
  }
  return alpha;
}

bool is_U_cocomplete(const ApproachSpace& a) { return u_cocomplete_alpha(a).has_value(); }

bool u_cocomplete_by_adjunction(const ApproachSpace& a) {
  const MetricSpace x0 = underlying_metric(a);
  const MetricSpace ux = ux_metric(a);
  const std::size_t n = a.size();
  std::vector<std::size_t> e, alpha;
  for (std::size_t x = 0; x < n; ++x) e.push_back(unit(n, x).point());
  for (std::size_t i = 0; i < n; ++i) {
    // The left adjoint at 𝔵 must satisfy a₀(α𝔵, x) = d(𝔵, e(x)).
    std::vector<Value> target;
    for (std::size_t x = 0; x < n; ++x) target.push_back(ux.d(i, e[x]));
    auto found = find_generic(x0.table(), target);
    if (!found) return false;
    alpha.push_back(*found);
  }
  if (!is_metric_map(ux, x0, alpha) || !is_metric_map(x0, ux, e)) return false;
  return adjoint_pair_met(MetricMap(ux, x0, alpha), MetricMap(x0, ux, e));
}

bool is_cocomplete_app(const ApproachSpace& a) {
  return is_U_cocomplete(a) && is_cocomplete(underlying_metric(a));
}

std::size_t sup_by_formula_app(const ApproachSpace& a, const WeightTable& psi) {
  require_weight(ux_metric(a), psi, Variance::Contra);
  if (!is_cocomplete_app(a))
    throw Error(ErrorCode::FormulaInapplicable, "the closed form needs a cocomplete space");
  const MetricSpace a0 = underlying_metric(a);
  const std::vector<std::size_t> alpha = *u_cocomplete_alpha(a);
  Subset terms = 0;
  for (std::size_t i = 0; i < a.size(); ++i) terms |= bit(*tensor(a0, alpha[i], psi[i]));
  auto s = supremum(underlying_order(a0), terms);
  if (!s) throw Error(ErrorCode::FormulaInapplicable, "missing order supremum");
  return *s;
}

bool plus_exponentiable_check(const ApproachSpace& a) {
  require_approach_axioms(a);
  const std::size_t n = a.size();
  const auto t = conv_of(a);
  const std::vector<Ultrafilter> ux = ultrafilters(n);
  for (const Ultrafilter& big : ultrafilters(ux.size())) {
    const std::size_t m = mult(big, ux).point();
    for (std::size_t x = 0; x < n; ++x) {
      Value best = a.quantale().top();
      for (const Ultrafilter& u : ux)
        best = std::min(best, add(lifted_convergence(a, big, u), t[u.point()][x]));
      if (best != t[m][x]) return false;
    }
  }
  return true;
}

Value compactness_degree(const ApproachSpace& a) {
  const auto t = conv_of(a);
  Value best = a.quantale().zero();
  for (const Ultrafilter& u : ultrafilters(a.size())) {
    Value low = a.quantale().top();
    for (std::size_t x = 0; x < a.size(); ++x) low = std::min(low, t[u.point()][x]);
    best = std::max(best, low);
  }
  return best;
}

WeightTable isbell_minus_app(const ApproachSpace& a, const WeightTable& phi) {
  require_weight(underlying_metric(a), phi, Variance::Co);
  const auto t = conv_of(a);
  WeightTable out{Variance::Contra, std::vector<Value>(a.size(), a.quantale().zero())};
  for (const Ultrafilter& u : ultrafilters(a.size()))
    for (std::size_t x = 0; x < a.size(); ++x)
      out.values[u.point()] = std::max(out.values[u.point()], minus(t[u.point()][x], phi[x]));
  return out;
}

WeightTable isbell_plus_app(const ApproachSpace& a, const WeightTable& psi) {
  require_weight(ux_metric(a), psi, Variance::Contra);
  const auto t = conv_of(a);
  WeightTable out{Variance::Co, std::vector<Value>(a.size(), a.quantale().zero())};
  for (const Ultrafilter& u : ultrafilters(a.size()))
    for (std::size_t x = 0; x < a.size(); ++x)
      out.values[x] = std::max(out.values[x], minus(t[u.point()][x], psi[u.point()]));
  return out;
}

bool isbell_app_check(const ApproachSpace& a) {
  require_chain(a);
  const MetricSpace a0 = underlying_metric(a);
  const MetricSpace ux = ux_metric(a);
  const std::vector<WeightTable> downs = enumerate_weights(ux, Variance::Contra);
  const std::vector<WeightTable> ups = enumerate_weights(a0, Variance::Co);
  std::vector<WeightTable> plus, minus_of;
  for (const auto& psi : downs) {
    plus.push_back(isbell_plus_app(a, psi));
    if (!is_valid_weight(a0, plus.back())) return false;
  }
  for (const auto& phi : ups) {
    minus_of.push_back(isbell_minus_app(a, phi));
    if (!is_valid_weight(ux, minus_of.back())) return false;
  }
  for (std::size_t i = 0; i < downs.size(); ++i)
    for (std::size_t j = 0; j < ups.size(); ++j)
      if (weight_distance(ups[j], plus[i]) != weight_distance(downs[i], minus_of[j])) return false;
  for (const auto& p : plus)
    if (isbell_plus_app(a, isbell_minus_app(a, p)) != p) return false;
  for (const auto& m : minus_of)
    if (isbell_minus_app(a, isbell_plus_app(a, m)) != m) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (isbell_plus_app(a, approach_yoneda(a, x)) != co_yoneda(a0, x)) return false;
    if (isbell_minus_app(a, co_yoneda(a0, x)) != approach_yoneda(a, x)) return false;
  }
  return true;
}

WeightTable approach_yoneda(const ApproachSpace& a, std::size_t x) {
  WeightTable out{Variance::Contra, {}};
  for (const Ultrafilter& u : ultrafilters(a.size())) out.values.push_back(convergence(a, u, x));
  return out;
}

bool approach_yoneda_lemma_check(const ApproachSpace& a, std::size_t x, const WeightTable& psi) {
  require_weight(ux_metric(a), psi, Variance::Contra);
  return weight_distance(approach_yoneda(a, x), psi) == psi[unit(a.size(), x).point()];
}

bool second_yoneda_check(const ApproachSpace& a, const WeightTable& psi) {
  const MetricSpace ux = ux_metric(a);
  require_weight(ux, psi, Variance::Contra);
  const std::vector<Ultrafilter> uxs = ultrafilters(a.size());
  for (const Ultrafilter& big : ultrafilters(uxs.size())) {
    const WeightTable second = yoneda(ux, big.point());
    if (weight_distance(second, psi) != psi[mult(big, uxs).point()]) return false;
  }
  return true;
}

bool is_top_absolutely_cocomplete(const ApproachSpace& a) {
  const ApproachSpace top = underlying_top(a);
  const FinitePoset order = underlying_order(underlying_metric(top));
  if (!is_complete_lattice(order)) return false;
  auto alpha = u_cocomplete_alpha(top);
  if (!alpha) return false;
  if (!is_continuous(K_approach(M_functor(top)), top, *alpha)) return false;
  for (std::size_t m = 0; m <= 2; ++m) {
    const ApproachSpace power = power_app(top, m);
    std::vector<std::size_t> join;
    for (std::size_t h = 0; h < power.size(); ++h) {
      Subset family = 0;
      std::size_t rest = h;
      for (std::size_t i = 0; i < m; ++i) {
        family |= bit(rest % top.size());
        rest /= top.size();
      }
      join.push_back(*supremum(order, family));
    }
    if (!is_continuous(power, top, join)) return false;
  }
  return true;
}

bool is_absolutely_cocomplete(const ApproachSpace& a) {
  require_chain(a);
  require_T0(a);
  if (!is_U_cocomplete(a)) return false;
  const MetricSpace a0 = underlying_metric(a);
  if (!is_cocomplete(a0)) return false;
  if (!is_top_absolutely_cocomplete(a)) return false;

  const FinitePoset order = underlying_order(a0);
  const std::vector<Value> levels = a.quantale().values();
  const std::uint64_t count = subset_count(a.size());
  for (const Value& u : levels) {
    std::vector<std::size_t> shift;
    for (std::size_t x = 0; x < a.size(); ++x) shift.push_back(*tensor(a0, x, u));
    for (Subset d = 1; d < count; ++d) {
      if (!is_down_directed(order, d)) continue;
      Subset shifted = 0;
      for (std::size_t x : elements(d)) shifted |= bit(shift[x]);
      const auto lhs = infimum(order, shifted);
      if (!lhs || !order.equivalent(shift[*infimum(order, d)], *lhs)) return false;
    }
  }
  // Sets of values are nonempty chains, hence directed.
  const std::uint64_t level_sets = subset_count(levels.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (Subset s = 1; s < level_sets; ++s) {
      Subset image = 0;
      std::size_t sup_level = 0;
      for (std::size_t i : elements(s)) {
        image |= bit(*tensor(a0, x, levels[i]));
        sup_level = std::max(sup_level, i);
      }
      if (!is_down_directed(order, image)) return false;
      const auto inf = infimum(order, image);
      if (!inf || !order.equivalent(*tensor(a0, x, levels[sup_level]), *inf)) return false;
    }
  return true;
}

namespace {

bool plus_is_approach_map(const ApproachSpace& a, const MetricSpace& a0) {
  const ApproachSpace v = quantale_approach(a.quantale());
  const ApproachSpace sum = plus_product_app(a, v);
  std::vector<std::size_t> plus;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (const Value& u : a.quantale().values()) plus.push_back(*tensor(a0, x, u));
  return is_approach_map(sum, a, plus);
}

}  // namespace

ThreeMaps three_map_criterion(const ApproachSpace& a) {
  require_chain(a);
  ThreeMaps out;
  out.cocomplete = is_cocomplete_app(a);
  if (!out.cocomplete) return out;
  const MetricSpace a0 = underlying_metric(a);
  const FinitePoset order = underlying_order(a0);
  out.plus = plus_is_approach_map(a, a0);
  out.alpha = is_approach_map(K_approach(M_functor(a)), a, *u_cocomplete_alpha(a));
  out.join = true;
  for (std::size_t m = 0; m <= 2 && out.join; ++m) {
    const ApproachSpace power = power_app(a, m);
    std::vector<std::size_t> join;
    for (std::size_t h = 0; h < power.size(); ++h) {
      Subset family = 0;
      std::size_t rest = h;
      for (std::size_t i = 0; i < m; ++i) {
        family |= bit(rest % a.size());
        rest /= a.size();
      }
      join.push_back(*supremum(order, family));
    }
    out.join = is_approach_map(power, a, join);
  }
  return out;
}

std::array<bool, 4> main_theorem_clauses(const ApproachSpace& a) {
  require_chain(a);
  require_T0(a);
  std::array<bool, 4> out{};
  const bool cocomplete = is_cocomplete_app(a);
  const MetricSpace a0 = underlying_metric(a);

  if (cocomplete) {
    // On a finite carrier every ultrafilter on PX is principal, so Sup is
    // an approach map exactly when it is a metric map (PX)₀ -> X₀.
    const WeightSpace px = weight_space(ux_metric(a), Variance::Contra);
    std::vector<std::size_t> sup;
    for (const auto& psi : px.weights) sup.push_back(*weighted_sup_app(a, psi));
    out[0] = is_metric_map(px.space, a0, sup);
  }
  const bool top_abs = cocomplete && is_top_absolutely_cocomplete(a);
  out[1] = top_abs && plus_is_approach_map(a, a0);
  if (top_abs) {
    const ApproachSpace xp = underlying_top(a);
    const ApproachSpace vp = underlying_top(quantale_approach(a.quantale()));
    std::vector<std::size_t> plus;
    for (std::size_t x = 0; x < a.size(); ++x)
      for (const Value& u : a.quantale().values()) plus.push_back(*tensor(a0, x, u));
    out[2] = is_continuous(max_product_app(xp, vp), xp, plus);
  }
  out[3] = is_absolutely_cocomplete(a);
  return out;
}

bool is_lattice_action(const OrdAction& l) {
  return check_action_conditions(l).all() && l.poset.is_antisymmetric() &&
         is_op_continuous_lattice(l.poset) && cocomplete_algebra_check(l);
}

OrdAction app_to_lattice_action(const ApproachSpace& a) {
  require_T0(a);
  if (!is_absolutely_cocomplete(a))
    throw Error(ErrorCode::ConditionsViolated, "space is not absolutely cocomplete");
  return action_from_metric(underlying_metric(a));
}

ApproachSpace lattice_action_to_app(const OrdAction& l) {
  if (!is_lattice_action(l))
    throw Error(ErrorCode::ConditionsViolated, "not an op-continuous lattice with a cocomplete action");
  const MetricSpace m = metric_from_action(l);
  std::vector<std::size_t> alpha;
  for (const Ultrafilter& u : ultrafilters(l.poset.size()))
    alpha.push_back(alpha_from_lattice(l.poset, u));
  return K_approach(MetCompHaus{m, std::move(alpha)});
}

}  // namespace lawvere
