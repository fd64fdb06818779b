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


// A small two-sorted expression language over one bound space.
//
//   sup y . d(y, x) - psi(y)
//
// Sorts are elements and values.  Element terms: variables bound by
// sup/inf, names given with --let, quoted carrier names ("0"), and
// tensor(e, v).  Value terms: numerals (2, 3/2), inf, d(e, e), a(e, e),
// weight application psi(e), yoneda(e)(e), sums and sup/inf binders.
//
// "-" is truncated subtraction: v - u = max(v - u, 0).  There is no
// other subtraction.  Binary + and - associate to the left; a sup or inf
// body extends as far to the right as possible.

#ifndef LAWVERE_CLI_DSL_HPP_
#define LAWVERE_CLI_DSL_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lawvere/approach_space.hpp"
#include "lawvere/metric.hpp"

namespace lawvere::cli {

struct Bindings {
  std::optional<MetricSpace> space;
  /// When set, d is its underlying metric and a is its convergence.
  std::optional<ApproachSpace> approach;
  std::map<std::string, WeightTable> weights;
  std::map<std::string, std::size_t> elements;
};

/// Syntax and sort errors.
class DslError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalResult {
  bool is_element = false;
  Value value;
  std::size_t element = 0;
};

/// Throws DslError, or lawvere::Error from the operations it applies.
EvalResult evaluate(std::string_view expression, const Bindings& bindings);

/// The result as text: a value string or a carrier name.
std::string to_text(const EvalResult& r, const Bindings& bindings);

}  // namespace lawvere::cli

#endif  // LAWVERE_CLI_DSL_HPP_
