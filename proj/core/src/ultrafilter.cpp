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

#include "lawvere/ultrafilter.hpp"

#include <string>

namespace lawvere {

Ultrafilter::Ultrafilter(std::size_t base_size, std::size_t point)
    : base_size_(base_size), point_(point) {
  if (point >= base_size)
    throw Error(ErrorCode::DomainMismatch,
                "ultrafilter point " + std::to_string(point) + " outside base of size " +
                    std::to_string(base_size));
}

std::vector<Subset> Ultrafilter::members() const {
  std::vector<Subset> out;
  const std::uint64_t count = subset_count(base_size_);
  for (Subset a = 0; a < count; ++a)
    if (contains(a)) out.push_back(a);
  return out;
}

SetFamily::SetFamily(std::size_t base_size)
    : base_size_(base_size), member_(subset_count(base_size), false) {}

bool SetFamily::is_ultrafilter() const {
  const Subset all = full_set(base_size_);
  const std::uint64_t count = member_.size();
  for (Subset a = 0; a < count; ++a) {
    if (member_[a] == member_[all & ~a]) return false;
    if (!member_[a]) continue;
    for (Subset b = 0; b < count; ++b) {
      if (!member_[b]) continue;
      if (!member_[a & b]) return false;
    }
    // upward closure: every superset of a
    for (Subset c = a;; c = (c + 1) | a) {
      if (!member_[c]) return false;
      if (c == all) break;
    }
  }
  return true;
}

std::optional<Ultrafilter> SetFamily::as_ultrafilter() const {
  if (!is_ultrafilter()) return std::nullopt;
  for (std::size_t x = 0; x < base_size_; ++x)
    if (member_[bit(x)]) return Ultrafilter(base_size_, x);
  return std::nullopt;
}

SetFamily SetFamily::of(const Ultrafilter& u) {
  SetFamily f(u.base_size());
  for (Subset a : u.members()) f.insert(a);
  return f;
}

std::vector<Ultrafilter> ultrafilters(std::size_t n) {
  std::vector<Ultrafilter> out;
  out.reserve(n);
  for (std::size_t x = 0; x < n; ++x) out.emplace_back(n, x);
  return out;
}

Ultrafilter unit(std::size_t n, std::size_t x) { return Ultrafilter(n, x); }

Subset sharp(Subset a, std::span<const Ultrafilter> ux) {
  Subset out = 0;
  for (std::size_t i = 0; i < ux.size(); ++i)
    if (ux[i].contains(a)) out |= bit(i);
  return out;
}

Ultrafilter mult(const Ultrafilter& big, std::span<const Ultrafilter> ux) {
  if (big.base_size() != ux.size())
    throw Error(ErrorCode::DomainMismatch, "ultrafilter on UX has the wrong base");
  if (ux.empty()) throw Error(ErrorCode::DomainMismatch, "UX is empty");
  const std::size_t n = ux.front().base_size();
  SetFamily family(n);
  const std::uint64_t count = subset_count(n);
  for (Subset a = 0; a < count; ++a)
    if (big.contains(sharp(a, ux))) family.insert(a);
  auto result = family.as_ultrafilter();
  if (!result) throw Error(ErrorCode::InvalidStructure, "m_X produced a non-ultrafilter");
  return *result;
}

Subset preimage(Subset b, std::span<const std::size_t> f) {
  Subset out = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (contains(b, f[x])) out |= bit(x);
  return out;
}

Ultrafilter image(const Ultrafilter& u, std::span<const std::size_t> f,
                  std::size_t target_size) {
  if (f.size() != u.base_size())
    throw Error(ErrorCode::DomainMismatch, "map does not match the ultrafilter's base");
  for (std::size_t y : f)
    if (y >= target_size) throw Error(ErrorCode::DomainMismatch, "map leaves its target");
  SetFamily family(target_size);
  const std::uint64_t count = subset_count(target_size);
  for (Subset b = 0; b < count; ++b)
    if (u.contains(preimage(b, f))) family.insert(b);
  // The image of an ultrafilter is an ultrafilter; the singleton member names it.
  for (std::size_t y = 0; y < target_size; ++y)
    if (family.contains(bit(y))) return Ultrafilter(target_size, y);
  throw Error(ErrorCode::InvalidStructure, "image family has no singleton member");
}

}  // namespace lawvere
