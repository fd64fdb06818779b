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


// JSON structure documents.
//
// Every document is an object tagged by "type".  Values are exact strings
// ("3/2", "inf"); elements are referenced by carrier name.  Serialization
// is canonical: keys sorted, rationals in lowest terms, fixed indentation,
// so parse followed by serialize is byte-identical on canonical input.

#ifndef LAWVERE_CLI_DOCUMENT_HPP_
#define LAWVERE_CLI_DOCUMENT_HPP_

#include <map>
#include <string>
#include <variant>

#include "json.hpp"

#include "lawvere/action.hpp"
#include "lawvere/approach_space.hpp"
#include "lawvere/metric.hpp"
#include "lawvere/order.hpp"
#include "lawvere/ultra.hpp"

namespace lawvere::cli {

using Json = nlohmann::json;

/// A weight keeps its values as strings until it meets a space.
struct WeightDoc {
  Variance variance = Variance::Contra;
  std::map<std::string, std::string> values;
};

using Document = std::variant<FinitePoset, MetricSpace, WeightDoc, OrdAction, MetCompHaus, ApproachSpace>;

/// Raised for input that does not have the documented shape.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json quantale_to_json(const ValueQuantale& q);
ValueQuantale quantale_from_json(const Json& j);

Json to_json(const FinitePoset& p);
Json to_json(const MetricSpace& m);
Json to_json(const WeightDoc& w);
Json to_json(const OrdAction& a);
Json to_json(const MetCompHaus& s);
Json to_json(const ApproachSpace& s);
Json to_json(const Document& d);

/// Throws MalformedInput, or lawvere::Error from the structure constructors.
Document from_json(const Json& j);
Document parse_document(const std::string& text);
Document load_document(const std::string& path);

/// The canonical text of a document.
std::string canonical(const Json& j);

std::string type_name(const Document& d);

/// The weight as a table over the carrier of `m`.  Throws MalformedInput
/// when the keys are not exactly the carrier.
WeightTable resolve_weight(const WeightDoc& w, const MetricSpace& m);
WeightDoc weight_doc(const WeightTable& w, const MetricSpace& m);

/// Whether the document satisfies the laws of its type; `reason` names
/// the first failure.  Weights are checked for shape only.
bool check_document(const Document& d, std::string& reason);

}  // namespace lawvere::cli

#endif  // LAWVERE_CLI_DOCUMENT_HPP_
