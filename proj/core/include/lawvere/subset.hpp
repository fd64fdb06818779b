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

#ifndef LAWVERE_SUBSET_HPP_
#define LAWVERE_SUBSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lawvere/error.hpp"

namespace lawvere {

/// Subsets of a finite carrier as bitmasks; element i is bit i.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;
/// Upper bound for anything that walks every subset of a carrier.
inline constexpr std::size_t kMaxEnumerable = 20;

inline constexpr Subset bit(std::size_t i) { return Subset{1} << i; }
inline constexpr bool contains(Subset s, std::size_t i) { return (s >> i) & 1U; }
inline constexpr Subset full_set(std::size_t n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}
inline int cardinality(Subset s) { return std::popcount(s); }

inline std::vector<std::size_t> elements(Subset s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

inline Subset subset_of(const std::vector<std::size_t>& items) {
  Subset s = 0;
  for (std::size_t i : items) s |= bit(i);
  return s;
}

/// Number of subsets of an n-element carrier; refuses carriers too large
/// for exhaustive enumeration.
inline std::uint64_t subset_count(std::size_t n) {
  if (n > kMaxEnumerable)
    throw Error(ErrorCode::TooLarge,
                "carrier of size " + std::to_string(n) + " is too large to enumerate subsets");
  return std::uint64_t{1} << n;
}

}  // namespace lawvere

#endif  // LAWVERE_SUBSET_HPP_
