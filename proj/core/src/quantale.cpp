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

#include "lawvere/quantale.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace lawvere {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::QuantaleMismatch: return "quantale-mismatch";
    case ErrorCode::InvalidValue: return "invalid-value";
    case ErrorCode::InvalidStructure: return "invalid-structure";
    case ErrorCode::ShapeMismatch: return "shape-mismatch";
    case ErrorCode::DomainMismatch: return "domain-mismatch";
    case ErrorCode::AxiomsViolated: return "axioms-violated";
    case ErrorCode::InvalidWeight: return "invalid-weight";
    case ErrorCode::UnsupportedEnumeration: return "unsupported-enumeration";
    case ErrorCode::NotCompleteLattice: return "not-a-complete-lattice";
    case ErrorCode::NotOpContinuous: return "not-op-continuous";
    case ErrorCode::NotTensored: return "not-tensored";
    case ErrorCode::NotSeparated: return "not-separated";
    case ErrorCode::NotCocomplete: return "not-cocomplete";
    case ErrorCode::FormulaInapplicable: return "formula-inapplicable";
    case ErrorCode::ConditionsViolated: return "conditions-violated";
    case ErrorCode::NotT0: return "not-t0";
    case ErrorCode::TooLarge: return "too-large";
  }
  return "unknown";
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorCode::InvalidValue, "not an integer: '" + std::string(text) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidValue, "zero denominator");
  return Rational(num, den);
}

Value Value::rational(Rational r) {
  if (r < 0) throw Error(ErrorCode::InvalidValue, "negative value " + to_string(r));
  Value v;
  v.finite_ = r;
  return v;
}

Value Value::infinity() {
  Value v;
  v.infinite_ = true;
  return v;
}

Value Value::level(const ChainShape& shape, int index) {
  if (shape.levels < 1 || shape.step <= 0)
    throw Error(ErrorCode::InvalidValue, "malformed chain shape");
  if (index < 0 || index > shape.levels)
    throw Error(ErrorCode::InvalidValue, "chain level out of range");
  Value v;
  v.kind_ = Kind::Chain;
  v.index_ = index;
  v.shape_ = shape;
  return v;
}

bool Value::is_top() const noexcept {
  return kind_ == Kind::Chain ? index_ == shape_.levels : infinite_;
}

bool Value::is_zero() const noexcept {
  return kind_ == Kind::Chain ? index_ == 0 : (!infinite_ && finite_.numerator() == 0);
}

Rational Value::number() const {
  if (kind_ == Kind::Chain) return shape_.step * index_;
  if (infinite_) throw Error(ErrorCode::InvalidValue, "infinity has no numeric value");
  return finite_;
}

std::string Value::str() const {
  if (is_top()) return "inf";
  return to_string(number());
}

bool Value::same_quantale(const Value& other) const noexcept {
  if (kind_ != other.kind_) return false;
  return kind_ == Kind::ExtendedRational || shape_ == other.shape_;
}

namespace {

void require_same(const Value& a, const Value& b) {
  if (!a.same_quantale(b))
    throw Error(ErrorCode::QuantaleMismatch, "operands " + a.str() + " and " + b.str() +
                                                 " live in different quantales");
}

}  // namespace

bool operator==(const Value& a, const Value& b) noexcept {
  if (!a.same_quantale(b)) return false;
  if (a.kind_ == Value::Kind::Chain) return a.index_ == b.index_;
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.finite_ == b.finite_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  require_same(a, b);
  if (a.kind_ == Value::Kind::Chain) return a.index_ <=> b.index_;
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.finite_ < b.finite_) return std::strong_ordering::less;
  if (b.finite_ < a.finite_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Value add(const Value& u, const Value& v) {
  require_same(u, v);
  if (u.is_chain())
    return Value::level(u.shape(), std::min(u.index() + v.index(), u.shape().levels));
  if (u.is_top() || v.is_top()) return Value::infinity();
  return Value::rational(u.number() + v.number());
}

Value minus(const Value& v, const Value& u) {
  require_same(v, u);
  if (v.is_chain()) return Value::level(v.shape(), std::max(v.index() - u.index(), 0));
  if (u.is_top()) return Value::rational(0);
  if (v.is_top()) return Value::infinity();
  Rational d = v.number() - u.number();
  return Value::rational(d < 0 ? Rational(0) : d);
}

bool residuation_holds(const Value& u, const Value& v, const Value& w) {
  return (add(u, v) >= w) == (v >= minus(w, u));
}

ValueQuantale ValueQuantale::chain(Rational step, int levels) {
  if (step <= 0) throw Error(ErrorCode::InvalidValue, "chain step must be positive");
  if (levels < 1) throw Error(ErrorCode::InvalidValue, "chain needs at least one level");
  ValueQuantale q;
  q.kind_ = Kind::FiniteChain;
  q.shape_ = ChainShape{step, levels};
  return q;
}

Value ValueQuantale::zero() const {
  return is_chain() ? Value::level(shape_, 0) : Value::rational(0);
}

Value ValueQuantale::top() const {
  return is_chain() ? Value::level(shape_, shape_.levels) : Value::infinity();
}

bool ValueQuantale::contains(const Value& v) const noexcept {
  if (is_chain()) return v.is_chain() && v.shape() == shape_;
  return !v.is_chain();
}

void ValueQuantale::require(const Value& v) const {
  if (!contains(v))
    throw Error(ErrorCode::QuantaleMismatch,
                "value " + v.str() + " does not belong to quantale " + descriptor());
}

std::vector<Value> ValueQuantale::values() const {
  if (!is_chain())
    throw Error(ErrorCode::UnsupportedEnumeration,
                "the extended rationals cannot be enumerated");
  std::vector<Value> out;
  out.reserve(shape_.levels + 1);
  for (int i = 0; i <= shape_.levels; ++i) out.push_back(Value::level(shape_, i));
  return out;
}

std::size_t ValueQuantale::size() const {
  if (!is_chain())
    throw Error(ErrorCode::UnsupportedEnumeration,
                "the extended rationals cannot be enumerated");
  return static_cast<std::size_t>(shape_.levels) + 1;
}

Value ValueQuantale::at(int index) const {
  if (!is_chain()) throw Error(ErrorCode::UnsupportedEnumeration, "not a chain");
  return Value::level(shape_, index);
}

Value ValueQuantale::from_rational(const Rational& r) const {
  if (!is_chain()) return Value::rational(r);
  Rational k = r / shape_.step;
  if (k.denominator() != 1 || k < 0 || k > shape_.levels)
    throw Error(ErrorCode::InvalidValue,
                to_string(r) + " is not a level of " + descriptor());
  return Value::level(shape_, static_cast<int>(k.numerator()));
}

Value ValueQuantale::parse(std::string_view text) const {
  if (text == "inf" || text == "∞") return top();
  return from_rational(parse_rational(text));
}

Value ValueQuantale::join(std::span<const Value> values) const {
  Value best = zero();
  for (const Value& v : values) {
    require(v);
    if (v > best) best = v;
  }
  return best;
}

Value ValueQuantale::meet(std::span<const Value> values) const {
  Value best = top();
  for (const Value& v : values) {
    require(v);
    if (v < best) best = v;
  }
  return best;
}

std::string ValueQuantale::descriptor() const {
  if (!is_chain()) return "rational";
  return "chain:" + to_string(shape_.step) + ":" + std::to_string(shape_.levels);
}

ValueQuantale ValueQuantale::from_descriptor(std::string_view text) {
  if (text == "rational" || text == "extended_rational") return extended_rational();
  if (text.substr(0, 6) == "chain:") {
    auto rest = text.substr(6);
    auto colon = rest.find(':');
    if (colon != std::string_view::npos) {
      Rational step = parse_rational(rest.substr(0, colon));
      std::int64_t levels = parse_int(rest.substr(colon + 1));
      return chain(step, static_cast<int>(levels));
    }
  }
  throw Error(ErrorCode::InvalidValue,
              "quantale descriptor must be 'rational' or 'chain:STEP:LEVELS', got '" +
                  std::string(text) + "'");
}

}  // namespace lawvere
