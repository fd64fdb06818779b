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

#include "lawvere/approach_space.hpp"

#include <algorithm>
#include <utility>

namespace lawvere {

ApproachSpace::ApproachSpace(Form form, ValueQuantale q, std::vector<std::string> carrier,
                             std::vector<std::vector<Value>> table)
    : form_(form), q_(std::move(q)), carrier_(std::move(carrier)), table_(std::move(table)) {
  const std::size_t n = carrier_.size();
  if (n > kMaxEnumerable) throw Error(ErrorCode::TooLarge, "approach carrier too large");
  const std::size_t columns = form_ == Form::Dist ? subset_count(n) : n;
  if (table_.size() != n) throw Error(ErrorCode::ShapeMismatch, "approach table row count");
  for (const auto& row : table_) {
    if (row.size() != columns) throw Error(ErrorCode::ShapeMismatch, "approach table row length");
    for (const Value& v : row) q_.require(v);
  }
}

Value point_set_distance(const ApproachSpace& s, std::size_t x, Subset a) {
  if (s.form() == ApproachSpace::Form::Dist) return s.table()[x][a];
  Value best = s.quantale().top();
  for (const Ultrafilter& u : ultrafilters(s.size()))
    if (u.contains(a)) best = std::min(best, s.table()[u.point()][x]);
  return best;
}

Value convergence(const ApproachSpace& s, const Ultrafilter& u, std::size_t x) {
  if (s.form() == ApproachSpace::Form::Conv) return s.table()[u.point()][x];
  Value best = s.quantale().zero();
  for (Subset a : u.members()) best = std::max(best, s.table()[x][a]);
  return best;
}

Subset expansion(const ApproachSpace& s, Subset a, const Value& eps) {
  s.quantale().require(eps);
  Subset out = 0;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (point_set_distance(s, x, a) <= eps) out |= bit(x);
  return out;
}

namespace {

// a(𝔞, x) for every principal 𝔞 and x.
std::vector<std::vector<Value>> conv_table(const ApproachSpace& s) {
  if (s.form() == ApproachSpace::Form::Conv) return s.table();
  std::vector<std::vector<Value>> a(s.size());
  for (const Ultrafilter& u : ultrafilters(s.size()))
    for (std::size_t x = 0; x < s.size(); ++x) a[u.point()].push_back(convergence(s, u, x));
  return a;
}

Value lifted(const std::vector<std::vector<Value>>& a, const ValueQuantale& q,
             const Ultrafilter& big, const Ultrafilter& u) {
  Value best = q.zero();
  const std::vector<Subset> families = big.members();
  const std::vector<Subset> sets = u.members();
  for (Subset fam : families)
    for (Subset set : sets) {
      Value low = q.top();
      for (std::size_t i : elements(fam))
        for (std::size_t x : elements(set)) low = std::min(low, a[i][x]);
      best = std::max(best, low);
    }
  return best;
}

void require_liftable(std::size_t n) {
  if (n > kMaxLifted)
    throw Error(ErrorCode::TooLarge, "lifted convergence needs at most 8 points");
}

bool dist_axioms(const ApproachSpace& s) {
  const std::size_t n = s.size();
  const auto& d = s.table();
  const ValueQuantale& q = s.quantale();
  const std::uint64_t count = subset_count(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!d[x][bit(x)].is_zero()) return false;
    if (!d[x][0].is_top()) return false;
    for (Subset a = 0; a < count; ++a)
      for (Subset b = 0; b < count; ++b)
        if (d[x][a | b] != std::min(d[x][a], d[x][b])) return false;
  }
  std::vector<Value> eps;
  if (q.is_chain()) {
    eps = q.values();
  } else {
    eps.push_back(q.zero());
    for (const auto& row : d)
      for (const Value& v : row)
        if (std::find(eps.begin(), eps.end(), v) == eps.end()) eps.push_back(v);
  }
  for (Subset a = 0; a < count; ++a)
    for (const Value& e : eps) {
      Subset grown = 0;
      for (std::size_t y = 0; y < n; ++y)
        if (d[y][a] <= e) grown |= bit(y);
      for (std::size_t x = 0; x < n; ++x)
        if (d[x][a] > add(d[x][grown], e)) return false;
    }
  return true;
}

bool conv_axioms(const ApproachSpace& s) {
  const std::size_t n = s.size();
  require_liftable(n);
  const auto& a = s.table();
  for (std::size_t x = 0; x < n; ++x)
    if (!a[x][x].is_zero()) return false;
  const std::vector<Ultrafilter> ux = ultrafilters(n);
  const std::vector<Ultrafilter> uux = ultrafilters(ux.size());
  for (const Ultrafilter& big : uux) {
    const Ultrafilter m = mult(big, ux);
    for (const Ultrafilter& u : ux) {
      const Value ua = lifted(a, s.quantale(), big, u);
      for (std::size_t x = 0; x < n; ++x)
        if (add(ua, a[u.point()][x]) < a[m.point()][x]) return false;
    }
  }
  return true;
}

}  // namespace

Value lifted_convergence(const ApproachSpace& s, const Ultrafilter& big, const Ultrafilter& u) {
  require_liftable(s.size());
  if (big.base_size() != s.size() || u.base_size() != s.size())
    throw Error(ErrorCode::DomainMismatch, "ultrafilters do not match the space");
  return lifted(conv_table(s), s.quantale(), big, u);
}

bool check_approach_axioms(const ApproachSpace& s) {
  return s.form() == ApproachSpace::Form::Dist ? dist_axioms(s) : conv_axioms(s);
}

void require_approach_axioms(const ApproachSpace& s) {
  if (!check_approach_axioms(s))
    throw Error(ErrorCode::AxiomsViolated, "table violates the approach axioms");
}

ApproachSpace dist_to_conv(const ApproachSpace& s) {
  if (s.form() != ApproachSpace::Form::Dist)
    throw Error(ErrorCode::InvalidStructure, "expected a distance presentation");
  require_approach_axioms(s);
  return ApproachSpace(ApproachSpace::Form::Conv, s.quantale(), s.carrier(), conv_table(s));
}

ApproachSpace conv_to_dist(const ApproachSpace& s) {
  if (s.form() != ApproachSpace::Form::Conv)
    throw Error(ErrorCode::InvalidStructure, "expected a convergence presentation");
  require_approach_axioms(s);
  const std::size_t n = s.size();
  const std::uint64_t count = subset_count(n);
  std::vector<std::vector<Value>> d(n);
  for (std::size_t x = 0; x < n; ++x)
    for (Subset a = 0; a < count; ++a) d[x].push_back(point_set_distance(s, x, a));
  return ApproachSpace(ApproachSpace::Form::Dist, s.quantale(), s.carrier(), std::move(d));
}

ApproachSpace as_conv(const ApproachSpace& s) {
  if (s.form() == ApproachSpace::Form::Conv) return s;
  return ApproachSpace(ApproachSpace::Form::Conv, s.quantale(), s.carrier(), conv_table(s));
}

MetricSpace underlying_metric(const ApproachSpace& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<Value>> d(n);
  for (const Ultrafilter& u : ultrafilters(n))
    for (std::size_t y = 0; y < n; ++y) d[u.point()].push_back(convergence(s, u, y));
  return MetricSpace(s.quantale(), s.carrier(), std::move(d));
}

bool is_T0(const ApproachSpace& s) { return is_separated(underlying_metric(s)); }

bool is_topological(const ApproachSpace& s) {
  for (const auto& row : s.table())
    for (const Value& v : row)
      if (!v.is_zero() && !v.is_top()) return false;
  return true;
}

ApproachSpace underlying_top(const ApproachSpace& s) {
  auto a = conv_table(s);
  for (auto& row : a)
    for (Value& v : row)
      if (!v.is_zero()) v = s.quantale().top();
  return ApproachSpace(ApproachSpace::Form::Conv, s.quantale(), s.carrier(), std::move(a));
}

ApproachSpace approach_from_metric(const MetricSpace& m) {
  require_axioms(m);
  const std::size_t n = m.size();
  std::vector<std::vector<Value>> a(n);
  for (const Ultrafilter& u : ultrafilters(n))
    for (std::size_t y = 0; y < n; ++y) {
      Value best = m.quantale().zero();
      for (Subset set : u.members()) {
        Value low = m.quantale().top();
        for (std::size_t z : elements(set)) low = std::min(low, m.d(z, y));
        best = std::max(best, low);
      }
      a[u.point()].push_back(best);
    }
  return ApproachSpace(ApproachSpace::Form::Conv, m.quantale(), m.carrier(), std::move(a));
}

namespace {

void check_map(const ApproachSpace& source, const ApproachSpace& target,
               std::span<const std::size_t> f) {
  if (f.size() != source.size()) throw Error(ErrorCode::ShapeMismatch, "map table size");
  for (std::size_t y : f)
    if (y >= target.size()) throw Error(ErrorCode::DomainMismatch, "map leaves its target");
  if (!(source.quantale() == target.quantale()))
    throw Error(ErrorCode::QuantaleMismatch, "map between spaces over different quantales");
}

}  // namespace

bool is_approach_map(const ApproachSpace& source, const ApproachSpace& target,
                     std::span<const std::size_t> f) {
  check_map(source, target, f);
  const auto a = conv_table(source);
  const auto b = conv_table(target);
  for (const Ultrafilter& u : ultrafilters(source.size())) {
    const Ultrafilter image_u = image(u, f, target.size());
    for (std::size_t x = 0; x < source.size(); ++x)
      if (a[u.point()][x] < b[image_u.point()][f[x]]) return false;
  }
  return true;
}

bool is_continuous(const ApproachSpace& source, const ApproachSpace& target,
                   std::span<const std::size_t> f) {
  check_map(source, target, f);
  const auto a = conv_table(source);
  const auto b = conv_table(target);
  for (const Ultrafilter& u : ultrafilters(source.size())) {
    const Ultrafilter image_u = image(u, f, target.size());
    for (std::size_t x = 0; x < source.size(); ++x)
      if (a[u.point()][x].is_zero() && !b[image_u.point()][f[x]].is_zero()) return false;
  }
  return true;
}

}  // namespace lawvere
