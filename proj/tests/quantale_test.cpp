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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "lawvere/quantale.hpp"
#include "oracles.hpp"

namespace lawvere {
namespace {

const ValueQuantale kChain5 = ValueQuantale::chain(Rational(1), 5);
const ValueQuantale kRat = ValueQuantale::extended_rational();

TEST(Quantale, AddExamples) {
  EXPECT_EQ(add(Value::rational(2), Value::rational(3)), Value::rational(5));
  EXPECT_EQ(add(Value::rational(7, 3), Value::rational(0)), Value::rational(7, 3));
  EXPECT_EQ(add(kChain5.at(3), kChain5.at(3)), kChain5.top());
  EXPECT_EQ(add(Value::infinity(), Value::rational(4)), Value::infinity());
}

TEST(Quantale, MinusExamples) {
  EXPECT_EQ(minus(Value::rational(5), Value::rational(2)), Value::rational(3));
  EXPECT_EQ(minus(Value::rational(2), Value::rational(5)), Value::rational(0));
  EXPECT_EQ(minus(Value::infinity(), Value::rational(7)), Value::infinity());
  EXPECT_EQ(minus(Value::infinity(), Value::infinity()), Value::rational(0));
}

TEST(Quantale, MinusIsTheResidualOnTheChain) {
  for (int w = 0; w <= 5; ++w)
    for (int u = 0; u <= 5; ++u)
      EXPECT_EQ(minus(kChain5.at(w), kChain5.at(u)).index(), oracle::residual(w, u, 5));
}

TEST(Quantale, InfinityMinusFiniteIsTheResidual) {
  // Least v with 7 + v >= inf: only inf itself qualifies.
  const Value r = minus(Value::infinity(), Value::rational(7));
  EXPECT_TRUE(add(Value::rational(7), r) >= Value::infinity());
  EXPECT_FALSE(add(Value::rational(7), Value::rational(1000000)) >= Value::infinity());
}

TEST(Quantale, ResiduationExhaustiveOnChain) {
  int count = 0;
  for (const Value& u : kChain5.values())
    for (const Value& v : kChain5.values())
      for (const Value& w : kChain5.values()) {
        EXPECT_TRUE(residuation_holds(u, v, w));
        ++count;
      }
  EXPECT_EQ(count, 216);
}

TEST(Quantale, ResiduationUnitCase) {
  for (const Value& v : kChain5.values())
    for (const Value& w : kChain5.values()) EXPECT_TRUE(residuation_holds(kChain5.zero(), v, w));
}

TEST(Quantale, ResiduationRandomRationals) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(0, 50), den(1, 12), inf(0, 15);
  auto draw = [&] {
    return inf(rng) == 0 ? Value::infinity() : Value::rational(num(rng), den(rng));
  };
  for (int i = 0; i < 2000; ++i) EXPECT_TRUE(residuation_holds(draw(), draw(), draw()));
}

TEST(Quantale, MonoidLaws) {
  for (const Value& u : kChain5.values())
    for (const Value& v : kChain5.values()) {
      EXPECT_EQ(add(u, v), add(v, u));
      EXPECT_EQ(add(u, kChain5.zero()), u);
      for (const Value& w : kChain5.values()) EXPECT_EQ(add(add(u, v), w), add(u, add(v, w)));
    }
}

TEST(Quantale, MinusPreservesMaximaAndNonemptyMinima) {
  const std::vector<Value> all = kChain5.values();
  for (std::uint64_t s = 1; s < (1U << all.size()); ++s) {
    std::vector<Value> set;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((s >> i) & 1U) set.push_back(all[i]);
    for (const Value& u : all) {
      std::vector<Value> shifted;
      for (const Value& v : set) shifted.push_back(minus(v, u));
      EXPECT_EQ(minus(kChain5.join(set), u), kChain5.join(shifted));
      EXPECT_EQ(minus(kChain5.meet(set), u), kChain5.meet(shifted));
    }
  }
}

TEST(Quantale, ChainClosure) {
  for (const Value& u : kChain5.values())
    for (const Value& v : kChain5.values()) {
      EXPECT_TRUE(kChain5.contains(add(u, v)));
      EXPECT_TRUE(kChain5.contains(minus(u, v)));
    }
}

TEST(Quantale, JoinAndMeetOfEmptySets) {
  const std::vector<Value> none;
  EXPECT_EQ(kRat.join(none), Value::rational(0));
  EXPECT_EQ(kRat.meet(none), Value::infinity());
  const std::vector<Value> some{Value::rational(1), Value::rational(4), Value::rational(2)};
  EXPECT_EQ(kRat.join(some), Value::rational(4));
  EXPECT_EQ(kRat.meet(some), Value::rational(1));
}

TEST(Quantale, RationalsAreInLowestTerms) {
  const Value v = Value::rational(6, 4);
  EXPECT_EQ(v.number(), Rational(3, 2));
  EXPECT_EQ(v.str(), "3/2");
  EXPECT_EQ(Value::infinity().str(), "inf");
}

TEST(Quantale, MixedOperandsAreRejected) {
  try {
    (void)add(kChain5.at(1), Value::rational(1));
    FAIL() << "expected a quantale mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QuantaleMismatch);
  }
  const ValueQuantale other = ValueQuantale::chain(Rational(1), 3);
  EXPECT_THROW((void)minus(kChain5.at(1), other.at(1)), Error);
}

TEST(Quantale, ParseAndDescriptors) {
  EXPECT_EQ(kRat.parse("3/6"), Value::rational(1, 2));
  EXPECT_EQ(kRat.parse("inf"), Value::infinity());
  const ValueQuantale half = ValueQuantale::chain(Rational(1, 2), 4);
  EXPECT_EQ(half.parse("3/2").index(), 3);
  EXPECT_EQ(half.parse("inf"), half.top());
  EXPECT_EQ(half.top().str(), "inf");
  EXPECT_THROW((void)half.parse("1/3"), Error);
  EXPECT_THROW((void)kRat.parse("-1"), Error);
  EXPECT_EQ(ValueQuantale::from_descriptor(half.descriptor()), half);
  EXPECT_EQ(ValueQuantale::from_descriptor("rational"), kRat);
}

}  // namespace
}  // namespace lawvere
