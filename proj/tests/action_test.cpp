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


#include <vector>

#include <gtest/gtest.h>

#include "lawvere/action.hpp"
#include "lawvere/colimit.hpp"
#include "lawvere/generate.hpp"
#include "oracles.hpp"

namespace lawvere {
namespace {

const ValueQuantale kChain3 = ValueQuantale::chain(Rational(1), 3);

std::vector<OrdAction> action_corpus(std::size_t max_n) {
  std::vector<OrdAction> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (const FinitePoset& p : enumerate_posets(n, true))
      for (OrdAction& a : enumerate_actions(p, kChain3))
        if (check_action_conditions(a).all()) out.push_back(std::move(a));
  return out;
}

std::vector<MetricSpace> tensored_corpus(std::size_t max_n) {
  std::vector<MetricSpace> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (MetricSpace& m : enumerate_metrics(kChain3, n))
      if (is_separated(m) && is_tensored(m)) out.push_back(std::move(m));
  return out;
}

TEST(Action, QuantaleActsOnItself) {
  const OrdAction a = quantale_action(kChain3);
  EXPECT_TRUE(check_action_conditions(a).all());
  for (int x = 0; x <= 3; ++x)
    for (int u = 0; u <= 3; ++u)
      EXPECT_EQ(a.apply(static_cast<std::size_t>(x), kChain3.at(u)),
                static_cast<std::size_t>(oracle::add(x, u, 3)));
  EXPECT_EQ(metric_from_action(a), quantale_space(kChain3));
}

TEST(Action, ConditionsDetectEachFailure) {
  const FinitePoset c2 = FinitePoset::chain(2);
  // Identity for every u: x + top is not the bottom.
  const OrdAction id(c2, kChain3, {{0, 0, 0, 0}, {1, 1, 1, 1}});
  const ActionConditions ci = check_action_conditions(id);
  EXPECT_TRUE(ci.unitary && ci.associative && ci.monotone);
  EXPECT_FALSE(ci.bottom);
  // Not unitary.
  EXPECT_FALSE(check_action_conditions(OrdAction(c2, kChain3, {{0, 0, 0, 0}, {0, 0, 0, 0}})).unitary);
  // Not monotone in x: 0 + 1 = 1 but 1 + 1 = 0 in the chain 0 < 1.
  const OrdAction bad(c2, kChain3, {{0, 1, 0, 0}, {1, 0, 0, 0}});
  EXPECT_FALSE(check_action_conditions(bad).monotone);
  EXPECT_THROW(OrdAction(c2, kChain3, {{0, 0, 0}, {1, 1, 1}}), Error);
}

TEST(Action, InfimumOfMetricFromActionIsAttained) {
  for (const OrdAction& a : action_corpus(3)) {
    const MetricSpace m = metric_from_action(a);
    ASSERT_TRUE(m.satisfies_axioms());
    for (std::size_t x = 0; x < a.poset.size(); ++x)
      for (std::size_t y = 0; y < a.poset.size(); ++y) {
        // Witness: x + d(x,y) <= y.
        EXPECT_TRUE(a.poset.leq(a.apply(x, m.d(x, y)), y));
        // 0 >= d(x,y) implies x <= y.
        if (m.d(x, y).is_zero()) EXPECT_TRUE(a.poset.leq(x, y));
      }
  }
}

TEST(Action, RoundTripFromActions) {
  const auto corpus = action_corpus(3);
  EXPECT_GT(corpus.size(), 10U);
  for (const OrdAction& a : corpus) {
    const MetricSpace m = metric_from_action(a);
    EXPECT_TRUE(is_separated(m));
    EXPECT_TRUE(is_tensored(m));
    EXPECT_TRUE(actions_equivalent(action_from_metric(m), a));
  }
}

TEST(Action, RoundTripFromTensoredSpaces) {
  const auto corpus = tensored_corpus(3);
  EXPECT_GT(corpus.size(), 10U);
  for (const MetricSpace& m : corpus) {
    const OrdAction a = action_from_metric(m);
    EXPECT_TRUE(check_action_conditions(a).all());
    EXPECT_EQ(metric_from_action(a).table(), m.table());
  }
}

TEST(Action, CocompleteAlgebraAgreesWithCocompleteness) {
  for (const OrdAction& a : action_corpus(3))
    EXPECT_EQ(cocomplete_algebra_check(a), is_cocomplete(metric_from_action(a)));
}

TEST(Action, MetricMapsViaOrder) {
  const auto corpus = tensored_corpus(2);
  for (const MetricSpace& x : corpus)
    for (const MetricSpace& y : corpus) {
      std::vector<std::size_t> f(x.size(), 0);
      while (true) {
        EXPECT_EQ(map_is_metric_via_order(f, x, y), is_metric_map(x, y, f));
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == y.size()) f[i++] = 0;
        if (i == f.size()) break;
      }
    }
}

TEST(Action, TranslationsRejectBadInput) {
  // Two points at mutual distance 0 are not separated.
  const MetricSpace glued = oracle::to_space({{0, 0}, {0, 0}}, kChain3);
  EXPECT_THROW((void)action_from_metric(glued), Error);
  const MetricSpace untensored = order_to_metric(FinitePoset::chain(2), kChain3);
  EXPECT_THROW((void)action_from_metric(untensored), Error);
  const OrdAction bad(FinitePoset::chain(2), kChain3, {{0, 0, 0, 0}, {0, 0, 0, 0}});
  EXPECT_THROW((void)metric_from_action(bad), Error);
}

TEST(Action, DirectedSideConditionsCollapse) {
  // Down-directed subsets of a finite poset have a least element, so
  // preserving their infima is plain preservation of minima.
  for (std::size_t n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n, true))
      for (Subset a = 1; a < subset_count(n); ++a)
        if (is_down_directed(p, a)) {
          const auto inf = infimum(p, a);
          ASSERT_TRUE(inf.has_value());
          EXPECT_TRUE(contains(a, *inf));
        }
}

}  // namespace
}  // namespace lawvere
