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

#ifndef LAWVERE_QUANTALE_HPP_
#define LAWVERE_QUANTALE_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "lawvere/error.hpp"

namespace lawvere {

/// Exact rational; always in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Carrier {0, step, 2*step, ..., levels*step}; the last level plays infinity.
struct ChainShape {
  Rational step{1};
  int levels = 1;

  friend bool operator==(const ChainShape&, const ChainShape&) = default;
};

/// An element of a value quantale.
///
/// Two flavours share this type: extended nonnegative rationals (with a
/// single absorbing infinity) and levels of a finite chain.  Values only
/// combine with values of the same quantale; anything else raises
/// `ErrorCode::QuantaleMismatch`.  The ordering operators use the natural
/// numeric order, in which 0 is least and infinity (or the chain top) is
/// greatest.
class Value {
 public:
  enum class Kind : std::uint8_t { ExtendedRational, Chain };

  /// Zero of the extended rationals.
  Value() = default;

  static Value rational(Rational r);
  static Value rational(std::int64_t num, std::int64_t den = 1) {
    return rational(Rational(num, den));
  }
  static Value infinity();
  static Value level(const ChainShape& shape, int index);

  Kind kind() const noexcept { return kind_; }
  bool is_chain() const noexcept { return kind_ == Kind::Chain; }
  /// True for extended infinity and for the top level of a chain.
  bool is_top() const noexcept;
  bool is_zero() const noexcept;

  /// Chain level; only meaningful for chain values.
  int index() const noexcept { return index_; }
  const ChainShape& shape() const noexcept { return shape_; }

  /// Underlying number. For chains this is index*step, also at the top.
  /// Throws for extended infinity.
  Rational number() const;

  /// Canonical text: lowest-terms rational, or "inf" for the top.
  std::string str() const;

  bool same_quantale(const Value& other) const noexcept;

  friend bool operator==(const Value& a, const Value& b) noexcept;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  Kind kind_ = Kind::ExtendedRational;
  bool infinite_ = false;
  int index_ = 0;
  Rational finite_{0};
  ChainShape shape_{};
};

/// u + v; truncated at the top in a chain, infinity absorbing otherwise.
Value add(const Value& u, const Value& v);

/// v ⊖ u = max(v - u, 0), the residual of addition.  inf ⊖ inf is 0.
Value minus(const Value& v, const Value& u);

/// The adjunction law (u + v >= w) == (v >= w ⊖ u).
bool residuation_holds(const Value& u, const Value& v, const Value& w);

/// Description of a value quantale: the extended rationals or a finite chain.
class ValueQuantale {
 public:
  enum class Kind : std::uint8_t { ExtendedRational, FiniteChain };

  static ValueQuantale extended_rational() { return ValueQuantale(); }
  static ValueQuantale chain(Rational step, int levels);

  Kind kind() const noexcept { return kind_; }
  bool is_chain() const noexcept { return kind_ == Kind::FiniteChain; }
  const ChainShape& shape() const noexcept { return shape_; }

  Value zero() const;
  Value top() const;
  bool contains(const Value& v) const noexcept;
  /// Throws QuantaleMismatch unless `contains(v)`.
  void require(const Value& v) const;

  /// All carrier values in increasing order; chains only.
  std::vector<Value> values() const;
  std::size_t size() const;
  /// Chain level i.
  Value at(int index) const;

  /// Maps a rational (or infinity) into this quantale.  In a chain the
  /// number must be a multiple of the step not exceeding the top.
  Value from_rational(const Rational& r) const;
  /// Accepts "inf", integers, "p/q".
  Value parse(std::string_view text) const;

  /// Numeric maximum; the empty join is 0.
  Value join(std::span<const Value> values) const;
  /// Numeric minimum; the empty meet is the top.
  Value meet(std::span<const Value> values) const;

  /// "chain:STEP:LEVELS" or "rational".
  std::string descriptor() const;
  static ValueQuantale from_descriptor(std::string_view text);

  friend bool operator==(const ValueQuantale&, const ValueQuantale&) = default;

 private:
  Kind kind_ = Kind::ExtendedRational;
  ChainShape shape_{};
};

}  // namespace lawvere

#endif  // LAWVERE_QUANTALE_HPP_
