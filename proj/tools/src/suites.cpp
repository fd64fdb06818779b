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


#include "lawvere/cli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "lawvere/action.hpp"
#include "lawvere/approach.hpp"
#include "lawvere/colimit.hpp"
#include "lawvere/generate.hpp"
#include "lawvere/ultra.hpp"

namespace lawvere::cli {

namespace {

// Exhaustive metric enumeration stops past this many raw tables.
constexpr double kMaxRawTables = 65536;

void for_each_map(std::size_t n, std::size_t m, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (m == 0) return;
  std::vector<std::size_t> g(n, 0);
  while (true) {
    f(g);
    std::size_t i = 0;
    while (i < n && ++g[i] == m) g[i++] = 0;
    if (i == n) return;
  }
}

bool all_maps(std::size_t n, std::size_t m, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  bool ok = true;
  for_each_map(n, m, [&](const std::vector<std::size_t>& g) { ok = ok && f(g); });
  return ok;
}

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

FinitePoset random_preorder(std::size_t n, Rng& rng) {
  std::bernoulli_distribution edge(0.3);
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) r[x][y] = x == y || edge(rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) r[x][y] = r[x][y] || (r[x][k] && r[k][y]);
  return FinitePoset(names(n), std::move(r));
}

Value random_value(const ValueQuantale& q, Rng& rng) {
  if (q.is_chain()) return q.at(std::uniform_int_distribution<int>(0, q.shape().levels)(rng));
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return Value::infinity();
  return Value::rational(std::uniform_int_distribution<std::int64_t>(0, 20)(rng),
                         std::uniform_int_distribution<std::int64_t>(1, 6)(rng));
}

void require_chain(const SuiteOptions& o) {
  if (!o.quantale.is_chain())
    throw Error(ErrorCode::UnsupportedEnumeration, "this suite enumerates over a chain quantale");
}

// Corpora.

std::vector<Instance> posets(const SuiteOptions& o, std::size_t cap = 4) {
  std::vector<Instance> out;
  for (std::size_t n = 1; n <= std::min(o.size, cap); ++n)
    for (FinitePoset& p : enumerate_posets(n, false)) out.emplace_back(std::move(p));
  Rng rng(o.seed);
  for (std::size_t i = 0; i < o.samples && o.size > 0; ++i) out.emplace_back(random_preorder(o.size, rng));
  return out;
}

std::vector<Instance> discrete_sets(const SuiteOptions& o) {
  std::vector<Instance> out;
  for (std::size_t n = 1; n <= o.size; ++n) out.emplace_back(FinitePoset::discrete(n));
  return out;
}

std::vector<Instance> metrics(const SuiteOptions& o) {
  std::vector<Instance> out;
  if (o.quantale.is_chain()) {
    for (std::size_t n = 1; n <= o.size; ++n) {
      double raw = 1;
      for (std::size_t i = 0; i < n * n - n; ++i) raw *= static_cast<double>(o.quantale.size());
      if (raw > kMaxRawTables) break;
      for (MetricSpace& m : enumerate_metrics(o.quantale, n)) out.emplace_back(std::move(m));
    }
  }
  Rng rng(o.seed);
  for (std::size_t i = 0; i < o.samples && o.size > 0; ++i) out.emplace_back(random_metric(o.quantale, o.size, rng));
  return out;
}

std::vector<Instance> approaches(const SuiteOptions& o) {
  require_chain(o);
  std::vector<Instance> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(o.size, 2); ++n)
    for (ApproachSpace& s : enumerate_dist_spaces(o.quantale, n)) out.emplace_back(std::move(s));
  Rng rng(o.seed);
  const std::size_t n = std::min(o.size, kMaxLifted);
  for (std::size_t i = 0; i < o.samples && n > 0; ++i) out.emplace_back(random_dist_space(o.quantale, n, rng));
  return out;
}

std::vector<Instance> actions(const SuiteOptions& o) {
  require_chain(o);
  std::vector<Instance> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(o.size, 3); ++n)
    for (const FinitePoset& p : enumerate_posets(n, true))
      for (OrdAction& a : enumerate_actions(p, o.quantale))
        if (check_action_conditions(a).all()) out.emplace_back(std::move(a));
  return out;
}

std::vector<Instance> value_lists(const SuiteOptions& o, std::size_t arity) {
  std::vector<Instance> out;
  if (o.quantale.is_chain()) {
    double total = 1;
    for (std::size_t i = 0; i < arity; ++i) total *= static_cast<double>(o.quantale.size());
    if (total <= 100000) {
      const std::vector<Value> levels = o.quantale.values();
      for_each_map(arity, levels.size(), [&](const std::vector<std::size_t>& idx) {
        ValueList l{o.quantale, {}};
        for (std::size_t i : idx) l.values.push_back(levels[i]);
        out.emplace_back(std::move(l));
      });
    }
  }
  Rng rng(o.seed);
  for (std::size_t i = 0; i < o.samples; ++i) {
    ValueList l{o.quantale, {}};
    for (std::size_t k = 0; k < arity; ++k) l.values.push_back(random_value(o.quantale, rng));
    out.emplace_back(std::move(l));
  }
  return out;
}

// Predicates.  Each returns true when the invariant holds, vacuously so
// when the instance falls outside the invariant's hypotheses.

bool residuation(const Instance& x) {
  const auto& v = std::get<ValueList>(x).values;
  return v.size() < 3 || residuation_holds(v[0], v[1], v[2]);
}

bool monoid_laws(const Instance& x) {
  const ValueList& l = std::get<ValueList>(x);
  if (l.values.size() < 3) return true;
  const Value &u = l.values[0], &v = l.values[1], &w = l.values[2];
  return add(u, v) == add(v, u) && add(add(u, v), w) == add(u, add(v, w)) && add(u, l.quantale.zero()) == u;
}

bool minus_preserves(const Instance& x) {
  const ValueList& l = std::get<ValueList>(x);
  if (l.values.empty()) return true;
  const Value& u = l.values[0];
  const std::vector<Value> set(l.values.begin() + 1, l.values.end());
  std::vector<Value> shifted;
  for (const Value& v : set) shifted.push_back(minus(v, u));
  bool ok = minus(l.quantale.join(set), u) == l.quantale.join(shifted);
  if (!set.empty()) ok = ok && minus(l.quantale.meet(set), u) == l.quantale.meet(shifted);
  return ok;
}

bool chain_closure(const Instance& x) {
  const ValueList& l = std::get<ValueList>(x);
  for (const Value& u : l.values)
    for (const Value& v : l.values)
      if (!l.quantale.contains(add(u, v)) || !l.quantale.contains(minus(u, v))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> monotone_maps(const FinitePoset& p) {
  std::vector<std::vector<std::size_t>> out;
  for_each_map(p.size(), p.size(), [&](const std::vector<std::size_t>& f) {
    if (is_monotone(p, p, f)) out.push_back(f);
  });
  return out;
}

bool way_below_is_order(const Instance& x) {
  const FinitePoset& p = std::get<FinitePoset>(x);
  if (!is_complete_lattice(p)) return true;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (way_below(p, a, b) != p.leq(a, b)) return false;
  return true;
}

bool adjoints_unique(const Instance& x) {
  const FinitePoset& p = std::get<FinitePoset>(x);
  const auto maps = monotone_maps(p);
  for (const auto& l : maps) {
    const std::vector<std::size_t>* first = nullptr;
    for (const auto& g : maps) {
      if (!adjoint_pair(MonotoneMap(p, p, l), MonotoneMap(p, p, g))) continue;
      if (first == nullptr) first = &g;
      for (std::size_t y = 0; y < p.size(); ++y)
        if (!p.equivalent((*first)[y], g[y])) return false;
    }
  }
  return true;
}

bool scott_topology(const Instance& x) {
  const FinitePoset& p = std::get<FinitePoset>(x);
  std::vector<Subset> opens;
  for (Subset a = 0; a < subset_count(p.size()); ++a)
    if (scott_open(p, a)) opens.push_back(a);
  for (Subset a : opens)
    for (Subset b : opens)
      if (!scott_open(p, a & b) || !scott_open(p, a | b)) return false;
  return true;
}

bool left_adjoints_preserve(const Instance& x) {
  const FinitePoset& p = std::get<FinitePoset>(x);
  const auto maps = monotone_maps(p);
  for (const auto& l : maps)
    for (const auto& r : maps)
      if (adjoint_pair(MonotoneMap(p, p, l), MonotoneMap(p, p, r)) && !preserves_existing_sups(p, p, l)) return false;
  return true;
}

bool order_roundtrip(const Instance& x, const ValueQuantale& q) {
  const FinitePoset& p = std::get<FinitePoset>(x);
  return underlying_order(order_to_metric(p, q)) == p;
}

bool dual_functorial(const Instance& x) {
  const MetricSpace& m = std::get<MetricSpace>(x);
  if (!m.satisfies_axioms()) return true;
  const MetricSpace op = dual(m);
  return all_maps(m.size(), m.size(), [&](const auto& f) { return !is_metric_map(m, m, f) || is_metric_map(op, op, f); });
}

bool function_space_pointwise(const Instance& x) {
  const MetricSpace& m = std::get<MetricSpace>(x);
  if (!m.satisfies_axioms() || !m.quantale().is_chain()) return true;
  const MetricSpace v = quantale_space(m.quantale());
  const FunctionSpace fs = function_space(m, v);
  for (std::size_t h = 0; h < fs.maps.size(); ++h)
    for (const Value& u : m.quantale().values()) {
      const auto t = tensor(fs.space, h, u);
      if (!t) return false;
      for (std::size_t p = 0; p < m.size(); ++p)
        if (!v.equivalent(fs.maps[*t][p], *tensor(v, fs.maps[h][p], u))) return false;
    }
  return true;
}

bool yoneda_isometry(const Instance& x) {
  const MetricSpace& m = std::get<MetricSpace>(x);
  if (!m.satisfies_axioms() || !is_separated(m)) return true;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (weight_distance(yoneda(m, a), yoneda(m, b)) != m.d(a, b)) return false;
      if (a != b && yoneda(m, a) == yoneda(m, b)) return false;
    }
  return true;
}

bool cocomplete_oracle(const Instance& x) {
  const MetricSpace& m = std::get<MetricSpace>(x);
  if (!m.satisfies_axioms() || !m.quantale().is_chain()) return true;
  const bool cocomplete = is_cocomplete(m);
  bool every = true;
  for (const WeightTable& psi : enumerate_weights(m, Variance::Contra)) {
    const auto s = weighted_sup(m, psi);
    if (!s) {
      every = false;
      continue;
    }
    if (cocomplete && !m.equivalent(*s, sup_by_formula(m, psi))) return false;
  }
  return cocomplete == every;
}

bool complete_iff_cocomplete(const Instance& x) {
  const MetricSpace& m = std::get<MetricSpace>(x);
  if (!m.satisfies_axioms() || !m.quantale().is_chain()) return true;
  bool complete = true;
  for (const WeightTable& phi : enumerate_weights(m, Variance::Co)) complete = complete && weighted_inf(m, phi);
  return complete == is_cocomplete(m);
}

bool isbell_adjunction(const Instance& x) {
  const MetricSpace& m = std::get<MetricSpace>(x);
  return !m.satisfies_axioms() || !m.quantale().is_chain() || isbell_adjunction_check(m);
}

bool tensor_cotensor(const Instance& x) {
  const MetricSpace& m = std::get<MetricSpace>(x);
  return !m.satisfies_axioms() || !m.quantale().is_chain() || tensor_cotensor_adjunction(m);
}

bool tensmet_roundtrip(const Instance& x) {
  if (const auto* a = std::get_if<OrdAction>(&x)) {
    if (!check_action_conditions(*a).all()) return true;
    return actions_equivalent(action_from_metric(metric_from_action(*a)), *a);
  }
  const MetricSpace& m = std::get<MetricSpace>(x);
  if (!m.satisfies_axioms() || !m.quantale().is_chain() || !is_separated(m) || !is_tensored(m)) return true;
  const OrdAction a = action_from_metric(m);
  return check_action_conditions(a).all() && metric_from_action(a).table() == m.table();
}

bool action_infimum_attained(const Instance& x) {
  const OrdAction& a = std::get<OrdAction>(x);
  if (!check_action_conditions(a).all()) return true;
  const MetricSpace m = metric_from_action(a);
  for (std::size_t p = 0; p < a.poset.size(); ++p)
    for (std::size_t q = 0; q < a.poset.size(); ++q) {
      if (!a.poset.leq(a.apply(p, m.d(p, q)), q)) return false;
      if (m.d(p, q).is_zero() && !a.poset.leq(p, q)) return false;
    }
  return true;
}

bool directed_collapse(const Instance& x) {
  const FinitePoset& p = std::get<FinitePoset>(x);
  for (Subset a = 1; a < subset_count(p.size()); ++a) {
    if (is_down_directed(p, a) && (lower_bounds(p, a) & a) == 0) return false;
    if (is_up_directed(p, a) && (upper_bounds(p, a) & a) == 0) return false;
  }
  return true;
}

bool monad_laws(const Instance& x) { return monad_laws_hold(std::get<FinitePoset>(x).size()); }

bool principal_collapse(const Instance& x) {
  const MetricSpace& m = std::get<MetricSpace>(x);
  return !m.satisfies_axioms() || lift_metric(m).table() == m.table();
}

bool em_algebra_trivial(const Instance& x) {
  const std::size_t n = std::get<FinitePoset>(x).size();
  return all_maps(n, n, [&](const auto& alpha) {
    bool identity = true;
    for (std::size_t i = 0; i < n; ++i) identity = identity && alpha[i] == i;
    return em_algebra_check(n, alpha) == identity;
  });
}

bool lift_functorial(const Instance& x) {
  const MetricSpace& m = std::get<MetricSpace>(x);
  if (!m.satisfies_axioms()) return true;
  const MetricSpace um = lift_metric(m);
  const FinitePoset p = underlying_order(m);
  const FinitePoset up = lift_order(p);
  return all_maps(m.size(), m.size(), [&](const auto& f) {
    const auto uf = lift_map(f, m.size());
    return (!is_metric_map(m, m, f) || is_metric_map(um, um, uf)) && (!is_monotone(p, p, f) || is_monotone(up, up, uf));
  });
}

bool dist_conv_roundtrip(const Instance& x) {
  const ApproachSpace& s = std::get<ApproachSpace>(x);
  if (!check_approach_axioms(s)) return true;
  const ApproachSpace c = as_conv(s);
  return conv_to_dist(c) == (s.form() == ApproachSpace::Form::Dist ? s : conv_to_dist(s)) &&
         dist_to_conv(conv_to_dist(c)) == c;
}

bool metric_generated(const Instance& x) {
  const ApproachSpace& s = std::get<ApproachSpace>(x);
  if (!check_approach_axioms(s)) return true;
  return as_conv(approach_from_metric(underlying_metric(s))) == as_conv(s);
}

bool sup_coherence(const Instance& x) {
  const ApproachSpace& s = std::get<ApproachSpace>(x);
  if (!check_approach_axioms(s) || !s.quantale().is_chain()) return true;
  bool total = true;
  for (const WeightTable& psi : enumerate_app_weights(s)) total = total && weighted_sup_app(s, psi).has_value();
  return is_cocomplete_app(s) == total;
}

bool main_clauses(const Instance& x) {
  const ApproachSpace& s = std::get<ApproachSpace>(x);
  if (!check_approach_axioms(s) || !s.quantale().is_chain() || !is_T0(s)) return true;
  const auto c = main_theorem_clauses(s);
  return c[0] == c[3] && c[1] == c[3] && c[2] == c[3];
}

bool approach_map_criterion(const Instance& x) {
  const ApproachSpace& s = std::get<ApproachSpace>(x);
  if (!check_approach_axioms(s) || !is_U_cocomplete(s)) return true;
  const MetricSpace m = underlying_metric(s);
  const ApproachSpace top = underlying_top(s);
  return all_maps(s.size(), s.size(), [&](const auto& f) {
    return is_approach_map(s, s, f) == (is_metric_map(m, m, f) && is_continuous(top, top, f));
  });
}

struct Suite {
  SuiteInfo info;
  std::function<std::vector<Instance>(const SuiteOptions&)> generate;
  std::function<bool(const Instance&, const SuiteOptions&)> holds;
};

template <class F>
std::function<bool(const Instance&, const SuiteOptions&)> plain(F f) {
  return [f](const Instance& x, const SuiteOptions&) { return f(x); };
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = [] {
    auto triples = [](const SuiteOptions& o) { return value_lists(o, 3); };
    auto pairs = [](const SuiteOptions& o) { return value_lists(o, 2); };
    auto lists = [](const SuiteOptions& o) { return value_lists(o, std::max<std::size_t>(o.size, 1)); };
    auto small_posets = [](const SuiteOptions& o) { return posets(o, 3); };
    auto all_posets = [](const SuiteOptions& o) { return posets(o); };
    auto chain_metrics = [](const SuiteOptions& o) {
      require_chain(o);
      return metrics(o);
    };
    auto tensmet = [](const SuiteOptions& o) {
      std::vector<Instance> out = actions(o);  // requires a chain
      for (Instance& m : metrics(o)) out.push_back(std::move(m));
      return out;
    };
    return std::vector<Suite>{
        {{"residuation", "quantale", "u + v >= w iff v >= w - u"}, triples, plain(residuation)},
        {{"monoid-laws", "quantale", "+ is associative and commutative with unit 0"}, triples, plain(monoid_laws)},
        {{"minus-preserves", "quantale", "v -> v - u preserves maxima and nonempty minima"}, lists, plain(minus_preserves)},
        {{"chain-closure", "quantale", "+ and - never leave the carrier"}, pairs, plain(chain_closure)},
        {{"way-below", "order", "in a finite complete lattice y << x iff y <= x"}, all_posets, plain(way_below_is_order)},
        {{"adjoints-unique", "order", "right adjoints of one map are order-equivalent"}, small_posets,
         plain(adjoints_unique)},
        {{"scott-topology", "order", "Scott opens are closed under finite meets and joins"}, all_posets,
         plain(scott_topology)},
        {{"left-adjoints-preserve", "order", "left adjoints preserve every existing supremum"}, small_posets,
         plain(left_adjoints_preserve)},
        {{"order-roundtrip", "metric", "underlying order of the metric of a poset is the poset"}, all_posets,
         [](const Instance& x, const SuiteOptions& o) { return order_roundtrip(x, o.quantale); }},
        {{"dual-functorial", "metric", "dualizing a metric map gives a metric map"}, metrics, plain(dual_functorial)},
        {{"function-space-pointwise", "metric", "tensors in V^X are computed pointwise"}, chain_metrics,
         plain(function_space_pointwise)},
        {{"yoneda-isometry", "metric", "Yoneda is an injective isometry on separated spaces"}, metrics,
         plain(yoneda_isometry)},
        {{"cocomplete-oracle", "colimit", "cocomplete iff every weight has a supremum, given by the formula"},
         chain_metrics, plain(cocomplete_oracle)},
        {{"complete-iff-cocomplete", "colimit", "every covariant weight has an infimum iff cocomplete"}, chain_metrics,
         plain(complete_iff_cocomplete)},
        {{"isbell-adjunction", "colimit", "Isbell conjugation is an adjunction on weight spaces"}, chain_metrics,
         plain(isbell_adjunction)},
        {{"tensor-cotensor", "colimit", "x -> x + u is left adjoint to x -> x - u"}, chain_metrics, plain(tensor_cotensor)},
        {{"tensmet-roundtrip", "action", "actions and tensored separated spaces correspond both ways"}, tensmet,
         plain(tensmet_roundtrip)},
        {{"action-infimum-attained", "action", "x + d(x,y) <= y and d(x,y) = 0 implies x <= y"}, actions,
         plain(action_infimum_attained)},
        {{"directed-collapse", "action", "finite directed sets contain their infimum or supremum"}, all_posets,
         plain(directed_collapse)},
        {{"monad-laws", "ultra", "unit and multiplication laws of the ultrafilter monad"}, discrete_sets,
         plain(monad_laws)},
        {{"principal-collapse", "ultra", "Ud on principal ultrafilters is d"}, metrics, plain(principal_collapse)},
        {{"em-algebra-trivial", "ultra", "a finite algebra structure is the identity"}, discrete_sets,
         plain(em_algebra_trivial)},
        {{"lift-functorial", "ultra", "Uf is monotone or a metric map whenever f is"}, metrics,
         plain(lift_functorial)},
        {{"dist-conv-roundtrip", "approach", "distance and convergence forms convert inversely"}, approaches,
         plain(dist_conv_roundtrip)},
        {{"metric-generated", "approach", "every finite space is generated by its underlying metric"}, approaches,
         plain(metric_generated)},
        {{"sup-coherence", "approach", "cocomplete iff every weight on UX has a supremum"}, approaches,
         plain(sup_coherence)},
        {{"main-clauses", "approach", "the four characterizations of absolute cocompleteness agree"}, approaches,
         plain(main_clauses)},
        {{"approach-map-criterion", "approach", "approach map iff metric map and continuous, U-cocomplete spaces"},
         approaches, plain(approach_map_criterion)},
    };
  }();
  return all;
}

// Runs `check` on every index with a shared work counter.
std::vector<char> parallel_map(std::size_t count, unsigned threads, const std::function<bool(std::size_t)>& check) {
  std::vector<char> ok(count, 1);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        ok[i] = check(i) ? 1 : 0;
      } catch (const std::exception&) {
        ok[i] = 0;
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return ok;
}

std::vector<std::size_t> keep_all_but(std::size_t n, std::size_t i) {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; ++k)
    if (k != i) keep.push_back(k);
  return keep;
}

}  // namespace

Json instance_json(const Instance& i) {
  if (const auto* l = std::get_if<ValueList>(&i)) {
    Json values = Json::array();
    for (const Value& v : l->values) values.push_back(v.str());
    return Json{{"type", "values"}, {"quantale", quantale_to_json(l->quantale)}, {"values", values}};
  }
  return std::visit(
      [](const auto& v) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ValueList>) return Json();
        else return to_json(v);
      },
      i);
}

std::size_t element_count(const Instance& x) {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ValueList>) return v.values.size();
        else if constexpr (std::is_same_v<T, OrdAction>) return v.poset.size();
        else return v.size();
      },
      x);
}

std::optional<Instance> remove_element(const Instance& x, std::size_t i) {
  const std::size_t n = element_count(x);
  if (n <= 1 || i >= n) return std::nullopt;
  const std::vector<std::size_t> keep = keep_all_but(n, i);
  if (const auto* p = std::get_if<FinitePoset>(&x)) {
    std::vector<std::string> carrier;
    std::vector<std::vector<bool>> leq;
    for (std::size_t a : keep) {
      carrier.push_back(p->carrier()[a]);
      std::vector<bool> row;
      for (std::size_t b : keep) row.push_back(p->leq(a, b));
      leq.push_back(std::move(row));
    }
    return Instance(FinitePoset(std::move(carrier), std::move(leq)));
  }
  if (const auto* m = std::get_if<MetricSpace>(&x)) return Instance(subspace(*m, keep));
  if (const auto* s = std::get_if<ApproachSpace>(&x)) {
    const ApproachSpace c = as_conv(*s);
    std::vector<std::string> carrier;
    std::vector<std::vector<Value>> t;
    for (std::size_t a : keep) {
      carrier.push_back(c.carrier()[a]);
      std::vector<Value> row;
      for (std::size_t b : keep) row.push_back(c.table()[a][b]);
      t.push_back(std::move(row));
    }
    ApproachSpace sub(ApproachSpace::Form::Conv, c.quantale(), std::move(carrier), std::move(t));
    if (s->form() == ApproachSpace::Form::Dist) return Instance(conv_to_dist(sub));
    return Instance(std::move(sub));
  }
  if (const auto* l = std::get_if<ValueList>(&x)) {
    ValueList out{l->quantale, {}};
    for (std::size_t a : keep) out.values.push_back(l->values[a]);
    return Instance(std::move(out));
  }
  return std::nullopt;  // actions are not closed under deleting points
}

Instance shrink(Instance x, const std::function<bool(const Instance&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < element_count(x); ++i) {
      std::optional<Instance> smaller;
      try {
        smaller = remove_element(x, i);
        if (!smaller || !fails(*smaller)) continue;
      } catch (const std::exception&) {
        continue;
      }
      x = std::move(*smaller);
      progress = true;
      break;
    }
  }
  return x;
}

const std::vector<SuiteInfo>& suite_index() {
  static const std::vector<SuiteInfo> index = [] {
    std::vector<SuiteInfo> out;
    for (const Suite& s : suites()) out.push_back(s.info);
    return out;
  }();
  return index;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& all = suites();
  auto it = std::find_if(all.begin(), all.end(), [&](const Suite& s) { return s.info.name == name; });
  if (it == all.end()) throw MalformedInput("unknown suite \"" + name + "\"; see verify --list");
  const std::vector<Instance> corpus = it->generate(options);
  const std::vector<char> ok =
      parallel_map(corpus.size(), options.threads, [&](std::size_t i) { return it->holds(corpus[i], options); });
  SuiteReport report;
  report.suite = name;
  report.instances = corpus.size();
  report.failures = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
  report.pass = report.failures == 0;
  if (!report.pass) {
    const std::size_t first = static_cast<std::size_t>(std::find(ok.begin(), ok.end(), 0) - ok.begin());
    const Instance small = shrink(corpus[first], [&](const Instance& x) { return !it->holds(x, options); });
    report.counterexample = instance_json(small);
  }
  return report;
}

}  // namespace lawvere::cli
