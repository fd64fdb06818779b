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


// Property suites: one per documented invariant.  A suite enumerates
// every instance up to a size cap, adds seeded random samples, checks
// them in parallel and shrinks the least failing instance by deleting
// carrier elements while it keeps failing.

#ifndef LAWVERE_CLI_SUITES_HPP_
#define LAWVERE_CLI_SUITES_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lawvere/cli/document.hpp"

namespace lawvere::cli {

struct SuiteOptions {
  ValueQuantale quantale = ValueQuantale::chain(Rational(1), 3);
  std::size_t size = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SuiteInfo {
  std::string name;
  std::string module;
  std::string invariant;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::optional<Json> counterexample;
};

/// A list of values, the instance type of the quantale suites.
struct ValueList {
  ValueQuantale quantale;
  std::vector<Value> values;
};

using Instance = std::variant<FinitePoset, MetricSpace, OrdAction, ApproachSpace, ValueList>;

Json instance_json(const Instance& i);

/// The instance with element (or list entry) `i` removed, when that
/// still makes sense for the type.
std::optional<Instance> remove_element(const Instance& x, std::size_t i);
std::size_t element_count(const Instance& x);

/// Greedy deletion: repeatedly drop the first element whose removal
/// keeps `fails` true.  Exceptions from `fails` count as not failing.
Instance shrink(Instance x, const std::function<bool(const Instance&)>& fails);

const std::vector<SuiteInfo>& suite_index();

/// Throws MalformedInput for an unknown suite and lawvere::Error when
/// the options do not fit the suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace lawvere::cli

#endif  // LAWVERE_CLI_SUITES_HPP_
