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

#ifndef LAWVERE_ULTRAFILTER_HPP_
#define LAWVERE_ULTRAFILTER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lawvere/subset.hpp"

namespace lawvere {

/// Ultrafilter on the finite set {0, ..., base_size-1}.
///
/// Finite sets only carry principal ultrafilters, so the point identifies
/// the ultrafilter.  Formulas that quantify over "A in the ultrafilter" go
/// through `contains` / `members` and walk every subset; nothing downstream
/// shortcuts to the point.
class Ultrafilter {
 public:
  Ultrafilter(std::size_t base_size, std::size_t point);

  std::size_t base_size() const noexcept { return base_size_; }
  std::size_t point() const noexcept { return point_; }

  bool contains(Subset a) const noexcept { return lawvere::contains(a, point_); }
  /// Every member set, found by scanning all subsets of the base.
  std::vector<Subset> members() const;

  friend bool operator==(const Ultrafilter&, const Ultrafilter&) = default;

 private:
  std::size_t base_size_;
  std::size_t point_;
};

/// An arbitrary family of subsets of an n-element set, one flag per subset.
class SetFamily {
 public:
  explicit SetFamily(std::size_t base_size);

  std::size_t base_size() const noexcept { return base_size_; }
  bool contains(Subset a) const { return member_[a]; }
  void insert(Subset a) { member_[a] = true; }

  /// Upward closed, closed under binary intersection, and for every A
  /// exactly one of A and its complement is a member.
  bool is_ultrafilter() const;
  /// The principal ultrafilter this family equals, if it is one.
  std::optional<Ultrafilter> as_ultrafilter() const;

  static SetFamily of(const Ultrafilter& u);

 private:
  std::size_t base_size_;
  std::vector<bool> member_;
};

/// All ultrafilters on an n-element set, indexed by their point.
std::vector<Ultrafilter> ultrafilters(std::size_t n);

/// e_X(x): the principal ultrafilter at x.
Ultrafilter unit(std::size_t n, std::size_t x);

/// A^# = {ultrafilters containing A}, as a subset of the index set of `ux`.
Subset sharp(Subset a, std::span<const Ultrafilter> ux);

/// m_X: an ultrafilter on UX (indices into `ux`) to the ultrafilter
/// {A | A^# in big} on X, evaluated set by set.
Ultrafilter mult(const Ultrafilter& big, std::span<const Ultrafilter> ux);

/// Uf: the image ultrafilter {B | f^{-1}(B) in u} on a target of size m.
Ultrafilter image(const Ultrafilter& u, std::span<const std::size_t> f,
                  std::size_t target_size);

/// Preimage of B under f.
Subset preimage(Subset b, std::span<const std::size_t> f);

}  // namespace lawvere

#endif  // LAWVERE_ULTRAFILTER_HPP_
