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


#include "lawvere/cli/document.hpp"

#include <fstream>
#include <sstream>

namespace lawvere::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw MalformedInput(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<std::string> carrier_of(const Json& j) {
  const Json& c = field(j, "carrier");
  if (!c.is_array()) throw MalformedInput("carrier must be an array");
  std::vector<std::string> out;
  for (const Json& name : c) {
    if (!name.is_string()) throw MalformedInput("carrier names must be strings");
    out.push_back(name.get<std::string>());
  }
  return out;
}

std::vector<std::vector<Value>> value_rows(const Json& rows, const ValueQuantale& q) {
  if (!rows.is_array()) throw MalformedInput("table must be an array of rows");
  std::vector<std::vector<Value>> out;
  for (const Json& row : rows) {
    if (!row.is_array()) throw MalformedInput("table rows must be arrays");
    std::vector<Value> r;
    for (const Json& v : row) {
      if (!v.is_string()) throw MalformedInput("values are written as strings such as \"3/2\" or \"inf\"");
      r.push_back(q.parse(v.get<std::string>()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json value_rows_json(const std::vector<std::vector<Value>>& t) {
  Json rows = Json::array();
  for (const auto& row : t) {
    Json r = Json::array();
    for (const Value& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

std::size_t element(const std::vector<std::string>& carrier, const Json& name) {
  if (!name.is_string()) throw MalformedInput("elements are referenced by carrier name");
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if (carrier[i] == name.get<std::string>()) return i;
  throw MalformedInput("unknown element \"" + name.get<std::string>() + "\"");
}

FinitePoset poset_from_json(const Json& j) {
  const auto carrier = carrier_of(j);
  const Json& leq = field(j, "leq");
  if (!leq.is_array()) throw MalformedInput("leq must be a boolean matrix");
  std::vector<std::vector<bool>> rel;
  for (const Json& row : leq) {
    if (!row.is_array()) throw MalformedInput("leq rows must be arrays");
    std::vector<bool> r;
    for (const Json& b : row) {
      if (!b.is_boolean()) throw MalformedInput("leq entries must be booleans");
      r.push_back(b.get<bool>());
    }
    rel.push_back(std::move(r));
  }
  return FinitePoset(carrier, std::move(rel));
}

MetricSpace metric_from_json(const Json& j) {
  const ValueQuantale q = quantale_from_json(field(j, "quantale"));
  return MetricSpace(q, carrier_of(j), value_rows(field(j, "d"), q));
}

}  // namespace

Json quantale_to_json(const ValueQuantale& q) {
  if (!q.is_chain()) return Json{{"kind", "extended_rational"}};
  return Json{{"kind", "chain"}, {"step", to_string(q.shape().step)}, {"levels", q.shape().levels}};
}

ValueQuantale quantale_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "extended_rational") return ValueQuantale::extended_rational();
  if (kind != "chain") throw MalformedInput("quantale kind must be \"chain\" or \"extended_rational\"");
  const Json& levels = field(j, "levels");
  if (!levels.is_number_integer()) throw MalformedInput("levels must be an integer");
  return ValueQuantale::chain(parse_rational(string_field(j, "step")), levels.get<int>());
}

Json to_json(const FinitePoset& p) {
  Json leq = Json::array();
  for (std::size_t x = 0; x < p.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < p.size(); ++y) row.push_back(p.leq(x, y));
    leq.push_back(std::move(row));
  }
  return Json{{"type", "poset"}, {"carrier", p.carrier()}, {"leq", std::move(leq)}};
}

Json to_json(const MetricSpace& m) {
  return Json{{"type", "metric"},
              {"quantale", quantale_to_json(m.quantale())},
              {"carrier", m.carrier()},
              {"d", value_rows_json(m.table())}};
}

Json to_json(const WeightDoc& w) {
  Json values = Json::object();
  for (const auto& [k, v] : w.values) values[k] = v;
  return Json{{"type", "weight"}, {"variance", w.variance == Variance::Contra ? "contra" : "co"}, {"values", values}};
}

Json to_json(const OrdAction& a) {
  Json act = Json::array();
  for (const auto& row : a.act) {
    Json r = Json::array();
    for (std::size_t y : row) r.push_back(a.poset.carrier()[y]);
    act.push_back(std::move(r));
  }
  return Json{{"type", "action"}, {"poset", to_json(a.poset)}, {"quantale", quantale_to_json(a.quantale)},
              {"act", std::move(act)}};
}

Json to_json(const MetCompHaus& s) {
  Json alpha = Json::array();
  for (std::size_t x : s.alpha) alpha.push_back(s.metric.carrier()[x]);
  return Json{{"type", "met_comp_haus"}, {"metric", to_json(s.metric)}, {"alpha", std::move(alpha)}};
}

Json to_json(const ApproachSpace& s) {
  return Json{{"type", "approach"},
              {"form", s.form() == ApproachSpace::Form::Dist ? "dist" : "conv"},
              {"quantale", quantale_to_json(s.quantale())},
              {"carrier", s.carrier()},
              {"table", value_rows_json(s.table())}};
}

Json to_json(const Document& d) {
  return std::visit([](const auto& v) { return to_json(v); }, d);
}

Document from_json(const Json& j) {
  const std::string type = string_field(j, "type");
  if (type == "poset") return poset_from_json(j);
  if (type == "metric") return metric_from_json(j);
  if (type == "weight") {
    WeightDoc w;
    const std::string variance = string_field(j, "variance");
    if (variance != "contra" && variance != "co") throw MalformedInput("variance must be \"contra\" or \"co\"");
    w.variance = variance == "contra" ? Variance::Contra : Variance::Co;
    const Json& values = field(j, "values");
    if (!values.is_object()) throw MalformedInput("weight values must be an object keyed by element");
    for (const auto& [k, v] : values.items()) {
      if (!v.is_string()) throw MalformedInput("values are written as strings");
      w.values[k] = v.get<std::string>();
    }
    return w;
  }
  if (type == "action") {
    FinitePoset p = poset_from_json(field(j, "poset"));
    const ValueQuantale q = quantale_from_json(field(j, "quantale"));
    const Json& rows = field(j, "act");
    if (!rows.is_array()) throw MalformedInput("act must be an array of rows");
    std::vector<std::vector<std::size_t>> act;
    for (const Json& row : rows) {
      if (!row.is_array()) throw MalformedInput("act rows must be arrays");
      std::vector<std::size_t> r;
      for (const Json& name : row) r.push_back(element(p.carrier(), name));
      act.push_back(std::move(r));
    }
    return OrdAction(std::move(p), q, std::move(act));
  }
  if (type == "met_comp_haus") {
    MetricSpace m = metric_from_json(field(j, "metric"));
    const Json& alpha = field(j, "alpha");
    if (!alpha.is_array()) throw MalformedInput("alpha must be an array");
    std::vector<std::size_t> a;
    for (const Json& name : alpha) a.push_back(element(m.carrier(), name));
    if (a.size() != m.size()) throw MalformedInput("alpha needs one entry per ultrafilter");
    return MetCompHaus{std::move(m), std::move(a)};
  }
  if (type == "approach") {
    const std::string form = string_field(j, "form");
    if (form != "dist" && form != "conv") throw MalformedInput("form must be \"dist\" or \"conv\"");
    const ValueQuantale q = quantale_from_json(field(j, "quantale"));
    return ApproachSpace(form == "dist" ? ApproachSpace::Form::Dist : ApproachSpace::Form::Conv, q, carrier_of(j),
                         value_rows(field(j, "table"), q));
  }
  throw MalformedInput("unknown document type \"" + type + "\"");
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string type_name(const Document& d) { return to_json(d).at("type").get<std::string>(); }

WeightTable resolve_weight(const WeightDoc& w, const MetricSpace& m) {
  if (w.values.size() != m.size()) throw MalformedInput("weight must give one value per element");
  WeightTable out{w.variance, {}};
  for (const std::string& name : m.carrier()) {
    auto it = w.values.find(name);
    if (it == w.values.end()) throw MalformedInput("weight has no value for \"" + name + "\"");
    out.values.push_back(m.quantale().parse(it->second));
  }
  return out;
}

WeightDoc weight_doc(const WeightTable& w, const MetricSpace& m) {
  WeightDoc out{w.variance, {}};
  for (std::size_t x = 0; x < m.size(); ++x) out.values[m.carrier()[x]] = w.values[x].str();
  return out;
}

bool check_document(const Document& d, std::string& reason) {
  struct Visitor {
    std::string& reason;
    bool operator()(const FinitePoset&) const { return true; }  // laws checked on construction
    bool operator()(const MetricSpace& m) const {
      if (!m.satisfies_axioms()) reason = "distance table violates d(x,x) = 0 or the triangle law";
      return m.satisfies_axioms();
    }
    bool operator()(const WeightDoc&) const { return true; }
    bool operator()(const OrdAction& a) const {
      const ActionConditions c = check_action_conditions(a);
      if (!c.unitary) reason = "x + 0 is not x";
      else if (!c.associative) reason = "(x + u) + v differs from x + (u + v)";
      else if (!c.monotone) reason = "action is not monotone in x and antitone in u";
      else if (!c.bottom) reason = "x + inf is not a bottom element";
      else if (!c.infima) reason = "x + inf S is not the join of x + s";
      return c.all();
    }
    bool operator()(const MetCompHaus& s) const {
      const bool ok = is_metric_compact_hausdorff(s.metric, s.alpha);
      if (!ok) reason = "alpha is not an algebra and metric map from the lifted metric";
      return ok;
    }
    bool operator()(const ApproachSpace& s) const {
      const bool ok = check_approach_axioms(s);
      if (!ok) reason = "table violates the approach axioms";
      return ok;
    }
  };
  return std::visit(Visitor{reason}, d);
}

}  // namespace lawvere::cli
