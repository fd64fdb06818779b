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

#include "lawvere/ultra.hpp"

#include <algorithm>
#include <string>

#include "lawvere/colimit.hpp"

namespace lawvere {

namespace {

std::vector<std::string> lifted_names(const std::vector<std::string>& carrier) {
  std::vector<std::string> out;
  for (const auto& name : carrier) out.push_back("u(" + name + ")");
  return out;
}

void check_alpha(std::size_t n, std::span<const std::size_t> alpha) {
  if (alpha.size() != n) throw Error(ErrorCode::ShapeMismatch, "alpha needs one entry per ultrafilter");
  for (std::size_t x : alpha)
    if (x >= n) throw Error(ErrorCode::DomainMismatch, "alpha leaves the carrier");
}

}  // namespace

bool monad_laws_hold(std::size_t n) {
  if (n == 0) return true;
  const std::vector<Ultrafilter> ux = ultrafilters(n);
  // Ultrafilters on the index set of UX, and on the index set of UUX.
  const std::vector<Ultrafilter> uux = ultrafilters(ux.size());
  const std::vector<Ultrafilter> uuux = ultrafilters(uux.size());

  std::vector<std::size_t> e(n);
  for (std::size_t x = 0; x < n; ++x) e[x] = unit(n, x).point();
  std::vector<std::size_t> m(uux.size());
  for (std::size_t i = 0; i < uux.size(); ++i) m[i] = mult(uux[i], ux).point();

  for (std::size_t i = 0; i < ux.size(); ++i) {
    if (!(mult(unit(ux.size(), i), ux) == ux[i])) return false;
    if (!(mult(image(ux[i], e, n), ux) == ux[i])) return false;
  }
  for (const Ultrafilter& big : uuux) {
    const Ultrafilter flat_inner = mult(big, uux);
    const Ultrafilter lhs = mult(flat_inner, ux);
    const Ultrafilter rhs = mult(image(big, m, ux.size()), ux);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<std::size_t> lift_map(std::span<const std::size_t> f, std::size_t target_size) {
  std::vector<std::size_t> out;
  for (const Ultrafilter& u : ultrafilters(f.size()))
    out.push_back(image(u, f, target_size).point());
  return out;
}

FinitePoset lift_order(const FinitePoset& p) {
  const std::size_t n = p.size();
  const std::vector<Ultrafilter> ux = ultrafilters(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, true));
  for (const Ultrafilter& u : ux)
    for (const Ultrafilter& v : ux) {
      bool ok = true;
      for (Subset a : u.members())
        for (Subset b : v.members()) {
          bool found = false;
          for (std::size_t x : elements(a))
            for (std::size_t y : elements(b)) found = found || p.leq(x, y);
          ok = ok && found;
        }
      leq[u.point()][v.point()] = ok;
    }
  return FinitePoset(lifted_names(p.carrier()), std::move(leq));
}

MetricSpace lift_metric(const MetricSpace& m) {
  const std::size_t n = m.size();
  const std::vector<Ultrafilter> ux = ultrafilters(n);
  const ValueQuantale& q = m.quantale();
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n, q.zero()));
  for (const Ultrafilter& u : ux)
    for (const Ultrafilter& v : ux) {
      Value best = q.zero();
      for (Subset a : u.members())
        for (Subset b : v.members()) {
          Value low = q.top();
          for (std::size_t x : elements(a))
            for (std::size_t y : elements(b)) low = std::min(low, m.d(x, y));
          best = std::max(best, low);
        }
      d[u.point()][v.point()] = best;
    }
  return MetricSpace(q, lifted_names(m.carrier()), std::move(d));
}

bool em_algebra_check(std::size_t n, std::span<const std::size_t> alpha) {
  check_alpha(n, alpha);
  for (std::size_t x = 0; x < n; ++x)
    if (alpha[unit(n, x).point()] != x) return false;
  const std::vector<Ultrafilter> ux = ultrafilters(n);
  for (const Ultrafilter& big : ultrafilters(ux.size())) {
    const std::size_t via_alpha = alpha[image(big, alpha, n).point()];
    const std::size_t via_mult = alpha[mult(big, ux).point()];
    if (via_alpha != via_mult) return false;
  }
  return true;
}

bool is_ordered_compact_hausdorff(const FinitePoset& p, std::span<const std::size_t> alpha) {
  return em_algebra_check(p.size(), alpha) && is_monotone(lift_order(p), p, alpha);
}

bool is_metric_compact_hausdorff(const MetricSpace& m, std::span<const std::size_t> alpha) {
  return m.satisfies_axioms() && em_algebra_check(m.size(), alpha) &&
         is_metric_map(lift_metric(m), m, alpha);
}

Ultrafilter lifted_tensor(const MetricSpace& m, const Ultrafilter& x, const Value& u) {
  if (!m.quantale().is_chain())
    throw Error(ErrorCode::UnsupportedEnumeration, "lifted tensors need a chain quantale");
  if (x.base_size() != m.size()) throw Error(ErrorCode::DomainMismatch, "ultrafilter base");
  std::vector<std::size_t> t;
  for (std::size_t y = 0; y < m.size(); ++y) {
    auto s = tensor(m, y, u);
    if (!s) throw Error(ErrorCode::NotTensored, "missing tensor " + m.carrier()[y] + " + " + u.str());
    t.push_back(*s);
  }
  return image(x, t, m.size());
}

ApproachSpace K_approach(const MetCompHaus& s) {
  if (!is_metric_compact_hausdorff(s.metric, s.alpha))
    throw Error(ErrorCode::InvalidStructure, "not a metric compact Hausdorff space");
  const std::size_t n = s.metric.size();
  std::vector<std::vector<Value>> a(n);
  for (const Ultrafilter& u : ultrafilters(n))
    for (std::size_t x = 0; x < n; ++x) a[u.point()].push_back(s.metric.d(s.alpha[u.point()], x));
  return ApproachSpace(ApproachSpace::Form::Conv, s.metric.quantale(), s.metric.carrier(),
                       std::move(a));
}

ConvergenceSpace K_top(const FinitePoset& p, std::span<const std::size_t> alpha) {
  if (!is_ordered_compact_hausdorff(p, alpha))
    throw Error(ErrorCode::InvalidStructure, "not an ordered compact Hausdorff space");
  ConvergenceSpace out{p.size(), {}};
  for (const Ultrafilter& u : ultrafilters(p.size())) {
    std::vector<bool> row;
    for (std::size_t x = 0; x < p.size(); ++x) row.push_back(p.leq(alpha[u.point()], x));
    out.converges.push_back(std::move(row));
  }
  return out;
}

bool is_open(const ConvergenceSpace& s, Subset a) {
  for (const Ultrafilter& u : ultrafilters(s.size))
    for (std::size_t x : elements(a))
      if (s.converges[u.point()][x] && !u.contains(a)) return false;
  return true;
}

Value xi(const ValueQuantale& q, const Ultrafilter& v) {
  const std::vector<Value> levels = q.values();
  if (v.base_size() != levels.size()) throw Error(ErrorCode::DomainMismatch, "ultrafilter base");
  Value best = q.zero();
  for (Subset a : v.members()) {
    Value low = q.top();
    for (std::size_t i : elements(a)) low = std::min(low, levels[i]);
    best = std::max(best, low);
  }
  return best;
}

namespace {

std::vector<std::size_t> xi_table(const ValueQuantale& q) {
  std::vector<std::size_t> alpha;
  for (const Ultrafilter& v : ultrafilters(q.size()))
    alpha.push_back(static_cast<std::size_t>(xi(q, v).index()));
  return alpha;
}

}  // namespace

MetCompHaus quantale_structure(const ValueQuantale& q) {
  return MetCompHaus{quantale_space(q), xi_table(q)};
}

MetCompHaus quantale_op_structure(const ValueQuantale& q) {
  return MetCompHaus{dual(quantale_space(q)), xi_table(q)};
}

ApproachSpace quantale_approach(const ValueQuantale& q) {
  return K_approach(quantale_structure(q));
}

ApproachSpace quantale_op_approach(const ValueQuantale& q) {
  return K_approach(quantale_op_structure(q));
}

MetricSpace ux_metric(const ApproachSpace& s) {
  require_approach_axioms(s);
  const std::size_t n = s.size();
  const ValueQuantale& q = s.quantale();
  // The condition is upward closed in ε and its infimum is one of these.
  std::vector<Value> eps;
  if (q.is_chain()) {
    eps = q.values();
  } else {
    eps.push_back(q.zero());
    const std::uint64_t count = subset_count(n);
    for (std::size_t x = 0; x < n; ++x)
      for (Subset a = 0; a < count; ++a) eps.push_back(point_set_distance(s, x, a));
    eps.push_back(q.top());
    std::sort(eps.begin(), eps.end());
    eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
  }
  const std::vector<Ultrafilter> ux = ultrafilters(n);
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n, q.top()));
  for (const Ultrafilter& u : ux)
    for (const Ultrafilter& v : ux)
      for (const Value& e : eps) {
        bool ok = true;
        for (Subset a : u.members()) ok = ok && v.contains(expansion(s, a, e));
        if (ok) {
          d[u.point()][v.point()] = e;
          break;
        }
      }
  return MetricSpace(q, lifted_names(s.carrier()), std::move(d));
}

MetCompHaus M_functor(const ApproachSpace& s) {
  const std::vector<Ultrafilter> ux = ultrafilters(s.size());
  std::vector<std::size_t> alpha;
  for (const Ultrafilter& big : ultrafilters(ux.size())) alpha.push_back(mult(big, ux).point());
  return MetCompHaus{ux_metric(s), std::move(alpha)};
}

bool mk_unit_check(const ApproachSpace& s) {
  const ApproachSpace km = K_approach(M_functor(s));
  std::vector<std::size_t> e;
  for (std::size_t x = 0; x < s.size(); ++x) e.push_back(unit(s.size(), x).point());
  return is_approach_map(s, km, e);
}

bool km_counit_check(const MetCompHaus& s) {
  const MetCompHaus mk = M_functor(K_approach(s));
  if (!is_metric_map(mk.metric, s.metric, s.alpha)) return false;
  const std::size_t n = s.metric.size();
  for (const Ultrafilter& big : ultrafilters(n))
    if (s.alpha[mk.alpha[big.point()]] != s.alpha[image(big, s.alpha, n).point()]) return false;
  return true;
}

std::pair<bool, bool> map_check_compact(std::span<const std::size_t> f, const MetCompHaus& x,
                                        const MetCompHaus& y) {
  const ApproachSpace kx = K_approach(x);
  const ApproachSpace ky = K_approach(y);
  bool direct = is_metric_map(x.metric, y.metric, f);
  for (const Ultrafilter& u : ultrafilters(x.metric.size())) {
    const std::size_t lhs = y.alpha[image(u, f, y.metric.size()).point()];
    const std::size_t rhs = f[x.alpha[u.point()]];
    direct = direct && y.metric.d(lhs, rhs).is_zero();
  }
  return {direct, is_approach_map(kx, ky, f)};
}

}  // namespace lawvere
