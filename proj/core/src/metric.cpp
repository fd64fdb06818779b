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

#include "lawvere/metric.hpp"

#include <algorithm>
#include <utility>

namespace lawvere {

namespace {

constexpr std::uint64_t kMaxTables = std::uint64_t{1} << 20;

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

bool axioms_hold(const std::vector<std::vector<Value>>& d) {
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x)
    if (!d[x][x].is_zero()) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (add(d[x][y], d[y][z]) < d[x][z]) return false;
  return true;
}

// |base|^exponent, or nullopt past the enumeration budget.
std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > kMaxTables / base) return std::nullopt;
    r *= base;
  }
  return r;
}

}  // namespace

MetricSpace::MetricSpace(ValueQuantale q, std::vector<std::string> carrier,
                         std::vector<std::vector<Value>> d)
    : q_(std::move(q)), carrier_(std::move(carrier)), d_(std::move(d)) {
  const std::size_t n = carrier_.size();
  if (n > kMaxCarrier) throw Error(ErrorCode::TooLarge, "metric carrier exceeds 64 elements");
  if (d_.size() != n) throw Error(ErrorCode::ShapeMismatch, "distance table has wrong row count");
  for (const auto& row : d_) {
    if (row.size() != n) throw Error(ErrorCode::ShapeMismatch, "distance table row length");
    for (const Value& v : row) q_.require(v);
  }
  axioms_ = axioms_hold(d_);
}

MetricSpace MetricSpace::from_table(ValueQuantale q, std::vector<std::vector<Value>> d) {
  const std::size_t n = d.size();
  return MetricSpace(std::move(q), numbered(n), std::move(d));
}

std::size_t MetricSpace::index_of(const std::string& name) const {
  auto it = std::find(carrier_.begin(), carrier_.end(), name);
  if (it == carrier_.end()) throw Error(ErrorCode::DomainMismatch, "no element named " + name);
  return static_cast<std::size_t>(it - carrier_.begin());
}

bool check_metric_axioms(const MetricSpace& m) { return axioms_hold(m.table()); }

void require_axioms(const MetricSpace& m) {
  if (!m.satisfies_axioms())
    throw Error(ErrorCode::AxiomsViolated, "distance table violates the metric axioms");
}

bool is_separated(const MetricSpace& m) {
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x + 1; y < m.size(); ++y)
      if (m.equivalent(x, y)) return false;
  return true;
}

MetricSpace dual(const MetricSpace& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d[x][y] = m.d(y, x);
  return MetricSpace(m.quantale(), m.carrier(), std::move(d));
}

MetricSpace subspace(const MetricSpace& m, std::span<const std::size_t> points) {
  std::vector<std::string> names;
  std::vector<std::vector<Value>> d;
  for (std::size_t x : points) {
    if (x >= m.size()) throw Error(ErrorCode::DomainMismatch, "subspace point out of range");
    names.push_back(m.carrier()[x]);
    std::vector<Value> row;
    for (std::size_t y : points) row.push_back(m.d(x, y));
    d.push_back(std::move(row));
  }
  return MetricSpace(m.quantale(), std::move(names), std::move(d));
}

FinitePoset underlying_order(const MetricSpace& m) {
  require_axioms(m);
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) leq[x][y] = m.d(x, y).is_zero();
  return FinitePoset(m.carrier(), std::move(leq));
}

MetricSpace order_to_metric(const FinitePoset& p, const ValueQuantale& q) {
  const std::size_t n = p.size();
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d[x][y] = p.leq(x, y) ? q.zero() : q.top();
  return MetricSpace(q, p.carrier(), std::move(d));
}

MetricSpace discrete_space(const ValueQuantale& q, std::size_t n) {
  return order_to_metric(FinitePoset::discrete(n), q);
}

MetricSpace one_point(const ValueQuantale& q) { return discrete_space(q, 1); }

MetricSpace quantale_space(const ValueQuantale& q) {
  const std::vector<Value> vs = q.values();
  std::vector<std::string> names;
  std::vector<std::vector<Value>> d;
  for (const Value& u : vs) {
    names.push_back(u.str());
    std::vector<Value> row;
    for (const Value& v : vs) row.push_back(minus(v, u));
    d.push_back(std::move(row));
  }
  return MetricSpace(q, std::move(names), std::move(d));
}

namespace {

template <typename Combine>
MetricSpace product(const MetricSpace& m, const MetricSpace& n, Combine combine) {
  if (!(m.quantale() == n.quantale()))
    throw Error(ErrorCode::QuantaleMismatch, "product factors use different quantales");
  std::vector<std::string> names;
  std::vector<std::vector<Value>> d;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < n.size(); ++y) {
      names.push_back("(" + m.carrier()[x] + "," + n.carrier()[y] + ")");
      std::vector<Value> row;
      for (std::size_t x2 = 0; x2 < m.size(); ++x2)
        for (std::size_t y2 = 0; y2 < n.size(); ++y2)
          row.push_back(combine(m.d(x, x2), n.d(y, y2)));
      d.push_back(std::move(row));
    }
  return MetricSpace(m.quantale(), std::move(names), std::move(d));
}

}  // namespace

MetricSpace plus_product(const MetricSpace& m, const MetricSpace& n) {
  return product(m, n, [](const Value& a, const Value& b) { return add(a, b); });
}

MetricSpace max_product(const MetricSpace& m, const MetricSpace& n) {
  return product(m, n, [](const Value& a, const Value& b) { return std::max(a, b); });
}

namespace {

void check_table(const MetricSpace& source, const MetricSpace& target,
                 std::span<const std::size_t> f) {
  if (f.size() != source.size()) throw Error(ErrorCode::ShapeMismatch, "map table size");
  for (std::size_t y : f)
    if (y >= target.size()) throw Error(ErrorCode::DomainMismatch, "map leaves its target");
  if (!(source.quantale() == target.quantale()))
    throw Error(ErrorCode::QuantaleMismatch, "map between spaces over different quantales");
}

}  // namespace

bool is_metric_map(const MetricSpace& source, const MetricSpace& target,
                   std::span<const std::size_t> f) {
  check_table(source, target, f);
  for (std::size_t x = 0; x < source.size(); ++x)
    for (std::size_t y = 0; y < source.size(); ++y)
      if (source.d(x, y) < target.d(f[x], f[y])) return false;
  return true;
}

bool is_isometry(const MetricSpace& source, const MetricSpace& target,
                 std::span<const std::size_t> f) {
  check_table(source, target, f);
  for (std::size_t x = 0; x < source.size(); ++x)
    for (std::size_t y = 0; y < source.size(); ++y)
      if (source.d(x, y) != target.d(f[x], f[y])) return false;
  return true;
}

MetricMap::MetricMap(MetricSpace source_, MetricSpace target_, std::vector<std::size_t> table_)
    : source(std::move(source_)), target(std::move(target_)), table(std::move(table_)) {
  if (!is_metric_map(source, target, table))
    throw Error(ErrorCode::InvalidStructure, "map is not a metric map");
}

bool is_isometry(const MetricMap& f) { return is_isometry(f.source, f.target, f.table); }

bool adjoint_pair_met(const MetricMap& f, const MetricMap& g) {
  if (!(f.source == g.target) || !(f.target == g.source))
    throw Error(ErrorCode::DomainMismatch, "adjoint pair must be typed X -> Y and Y -> X");
  for (std::size_t x = 0; x < f.source.size(); ++x)
    for (std::size_t y = 0; y < f.target.size(); ++y)
      if (f.target.d(f.table[x], y) != f.source.d(x, g.table[y])) return false;
  return true;
}

FunctionSpace function_space(const MetricSpace& x, const MetricSpace& y) {
  if (!x.quantale().is_chain() || !y.quantale().is_chain())
    throw Error(ErrorCode::UnsupportedEnumeration, "function spaces need a chain quantale");
  if (!(x.quantale() == y.quantale()))
    throw Error(ErrorCode::QuantaleMismatch, "function space over different quantales");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  auto total = bounded_power(m, n);
  if (!total) throw Error(ErrorCode::TooLarge, "too many candidate maps");

  FunctionSpace out;
  std::vector<std::size_t> f(n, 0);
  for (std::uint64_t code = 0; code < *total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = static_cast<std::size_t>(c % m);
      c /= m;
    }
    if (is_metric_map(x, y, f)) out.maps.push_back(f);
  }

  std::vector<std::string> names;
  std::vector<std::vector<Value>> d;
  for (const auto& h : out.maps) {
    std::string name = "[";
    for (std::size_t i = 0; i < n; ++i) name += (i ? "," : "") + y.carrier()[h[i]];
    names.push_back(name + "]");
    std::vector<Value> row;
    for (const auto& k : out.maps) {
      Value s = x.quantale().zero();
      for (std::size_t i = 0; i < n; ++i) s = std::max(s, y.d(h[i], k[i]));
      row.push_back(s);
    }
    d.push_back(std::move(row));
  }
  out.space = MetricSpace(x.quantale(), std::move(names), std::move(d));
  return out;
}

bool is_valid_weight(const MetricSpace& m, const WeightTable& w) {
  if (w.values.size() != m.size()) return false;
  for (const Value& v : w.values)
    if (!m.quantale().contains(v)) return false;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) {
      const bool ok = w.variance == Variance::Contra ? w[x] <= add(m.d(x, y), w[y])
                                                     : w[y] <= add(m.d(x, y), w[x]);
      if (!ok) return false;
    }
  return true;
}

void require_weight(const MetricSpace& m, const WeightTable& w, Variance variance) {
  if (w.variance != variance)
    throw Error(ErrorCode::InvalidWeight,
                variance == Variance::Contra ? "expected a contravariant weight"
                                             : "expected a covariant weight");
  if (!is_valid_weight(m, w)) throw Error(ErrorCode::InvalidWeight, "weight is not a metric map");
}

std::vector<WeightTable> enumerate_weights(const MetricSpace& m, Variance variance) {
  const std::vector<Value> vs = m.quantale().values();
  const std::size_t n = m.size();
  auto total = bounded_power(vs.size(), n);
  if (!total) throw Error(ErrorCode::TooLarge, "too many candidate weights");
  std::vector<WeightTable> out;
  WeightTable w{variance, std::vector<Value>(n)};
  for (std::uint64_t code = 0; code < *total; ++code) {
    std::uint64_t c = code;
    // Most significant position first gives lexicographic order.
    for (std::size_t i = n; i-- > 0;) {
      w.values[i] = vs[c % vs.size()];
      c /= vs.size();
    }
    if (is_valid_weight(m, w)) out.push_back(w);
  }
  return out;
}

Value weight_distance(const WeightTable& h, const WeightTable& k) {
  if (h.values.size() != k.values.size() || h.variance != k.variance)
    throw Error(ErrorCode::ShapeMismatch, "weights of different shapes");
  if (h.values.empty()) return Value();
  Value s = minus(k[0], h[0]);
  for (std::size_t x = 1; x < h.values.size(); ++x) s = std::max(s, minus(k[x], h[x]));
  return s;
}

WeightTable yoneda(const MetricSpace& m, std::size_t x) {
  WeightTable w{Variance::Contra, {}};
  for (std::size_t y = 0; y < m.size(); ++y) w.values.push_back(m.d(y, x));
  return w;
}

WeightTable co_yoneda(const MetricSpace& m, std::size_t x) {
  WeightTable w{Variance::Co, {}};
  for (std::size_t y = 0; y < m.size(); ++y) w.values.push_back(m.d(x, y));
  return w;
}

bool yoneda_lemma_check(const MetricSpace& m, std::size_t x, const WeightTable& psi) {
  require_axioms(m);
  require_weight(m, psi, Variance::Contra);
  return weight_distance(yoneda(m, x), psi) == psi[x];
}

}  // namespace lawvere
