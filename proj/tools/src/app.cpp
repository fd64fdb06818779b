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


#include "lawvere/cli/app.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "lawvere/approach.hpp"
#include "lawvere/cli/document.hpp"
#include "lawvere/cli/dsl.hpp"
#include "lawvere/cli/suites.hpp"
#include "lawvere/colimit.hpp"
#include "lawvere/generate.hpp"

namespace lawvere::cli {

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kMalformed = 2;

// Input errors as opposed to structures that break a law.
bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::QuantaleMismatch:
    case ErrorCode::InvalidValue:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::DomainMismatch:
    case ErrorCode::UnsupportedEnumeration:
    case ErrorCode::TooLarge:
      return true;
    default:
      return false;
  }
}

struct Globals {
  std::string quantale = "chain:1:3";
  std::size_t size = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  unsigned threads = 0;
  std::string format = "text";
};

class Output {
 public:
  Output(const Globals& g, std::ostream& out) : json_(g.format == "json"), out_(out) {}

  bool json() const { return json_; }

  void emit(const Json& j, const std::string& text) {
    if (json_) out_ << canonical(j);
    else out_ << text << "\n";
  }

 private:
  bool json_;
  std::ostream& out_;
};

// Result rendering for compute.

Json element_json(const std::vector<std::string>& carrier, std::optional<std::size_t> x) {
  return x ? Json(carrier[*x]) : Json();
}

std::string text_of(const Json& j) {
  if (j.is_null()) return "none";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  std::string s = canonical(j);
  s.pop_back();
  return s;
}

template <class T>
T expect(const Document& d, const char* what) {
  if (const T* t = std::get_if<T>(&d)) return *t;
  throw MalformedInput(std::string("expected a ") + what + " document, got " + type_name(d));
}

MetricSpace load_metric(const std::string& path) { return expect<MetricSpace>(load_document(path), "metric"); }
ApproachSpace load_approach(const std::string& path) {
  return expect<ApproachSpace>(load_document(path), "approach");
}
OrdAction load_action(const std::string& path) { return expect<OrdAction>(load_document(path), "action"); }
WeightTable load_weight(const std::string& path, const MetricSpace& m) {
  return resolve_weight(expect<WeightDoc>(load_document(path), "weight"), m);
}

void arity(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw MalformedInput("usage: compute " + usage);
}

// Each op maps its positional arguments to a JSON result; null means the
// requested object does not exist.
using Op = std::function<Json(const std::vector<std::string>&, const ValueQuantale&)>;

const std::map<std::string, std::pair<std::string, Op>>& operations() {
  using Args = std::vector<std::string>;
  using Q = ValueQuantale;
  static const std::map<std::string, std::pair<std::string, Op>> ops = {
      {"weighted-sup",
       {"weighted-sup METRIC WEIGHT",
        [](const Args& a, const Q&) {
          arity(a, 2, "weighted-sup METRIC WEIGHT");
          const MetricSpace m = load_metric(a[0]);
          return element_json(m.carrier(), weighted_sup(m, load_weight(a[1], m)));
        }}},
      {"weighted-inf",
       {"weighted-inf METRIC WEIGHT",
        [](const Args& a, const Q&) {
          arity(a, 2, "weighted-inf METRIC WEIGHT");
          const MetricSpace m = load_metric(a[0]);
          return element_json(m.carrier(), weighted_inf(m, load_weight(a[1], m)));
        }}},
      {"tensor",
       {"tensor METRIC ELEMENT VALUE",
        [](const Args& a, const Q&) {
          arity(a, 3, "tensor METRIC ELEMENT VALUE");
          const MetricSpace m = load_metric(a[0]);
          return element_json(m.carrier(), tensor(m, m.index_of(a[1]), m.quantale().parse(a[2])));
        }}},
      {"cotensor",
       {"cotensor METRIC ELEMENT VALUE",
        [](const Args& a, const Q&) {
          arity(a, 3, "cotensor METRIC ELEMENT VALUE");
          const MetricSpace m = load_metric(a[0]);
          return element_json(m.carrier(), cotensor(m, m.index_of(a[1]), m.quantale().parse(a[2])));
        }}},
      {"is-cocomplete",
       {"is-cocomplete METRIC",
        [](const Args& a, const Q&) {
          arity(a, 1, "is-cocomplete METRIC");
          return Json(is_cocomplete(load_metric(a[0])));
        }}},
      {"sup-formula",
       {"sup-formula METRIC WEIGHT",
        [](const Args& a, const Q&) {
          arity(a, 2, "sup-formula METRIC WEIGHT");
          const MetricSpace m = load_metric(a[0]);
          return Json(m.carrier()[sup_by_formula(m, load_weight(a[1], m))]);
        }}},
      {"isbell-plus",
       {"isbell-plus METRIC WEIGHT",
        [](const Args& a, const Q&) {
          arity(a, 2, "isbell-plus METRIC WEIGHT");
          const MetricSpace m = load_metric(a[0]);
          return to_json(weight_doc(isbell_plus(m, load_weight(a[1], m)), m));
        }}},
      {"isbell-minus",
       {"isbell-minus METRIC WEIGHT",
        [](const Args& a, const Q&) {
          arity(a, 2, "isbell-minus METRIC WEIGHT");
          const MetricSpace m = load_metric(a[0]);
          return to_json(weight_doc(isbell_minus(m, load_weight(a[1], m)), m));
        }}},
      {"yoneda",
       {"yoneda METRIC ELEMENT",
        [](const Args& a, const Q&) {
          arity(a, 2, "yoneda METRIC ELEMENT");
          const MetricSpace m = load_metric(a[0]);
          return to_json(weight_doc(yoneda(m, m.index_of(a[1])), m));
        }}},
      {"underlying-order",
       {"underlying-order METRIC",
        [](const Args& a, const Q&) {
          arity(a, 1, "underlying-order METRIC");
          return to_json(underlying_order(load_metric(a[0])));
        }}},
      {"dual",
       {"dual METRIC",
        [](const Args& a, const Q&) {
          arity(a, 1, "dual METRIC");
          return to_json(dual(load_metric(a[0])));
        }}},
      {"action-from-metric",
       {"action-from-metric METRIC",
        [](const Args& a, const Q&) {
          arity(a, 1, "action-from-metric METRIC");
          return to_json(action_from_metric(load_metric(a[0])));
        }}},
      {"metric-from-action",
       {"metric-from-action ACTION",
        [](const Args& a, const Q&) {
          arity(a, 1, "metric-from-action ACTION");
          return to_json(metric_from_action(load_action(a[0])));
        }}},
      {"lift-metric",
       {"lift-metric METRIC",
        [](const Args& a, const Q&) {
          arity(a, 1, "lift-metric METRIC");
          return to_json(lift_metric(load_metric(a[0])));
        }}},
      {"approach-from-metric",
       {"approach-from-metric METRIC",
        [](const Args& a, const Q&) {
          arity(a, 1, "approach-from-metric METRIC");
          return to_json(approach_from_metric(load_metric(a[0])));
        }}},
      {"dist-to-conv",
       {"dist-to-conv APPROACH",
        [](const Args& a, const Q&) {
          arity(a, 1, "dist-to-conv APPROACH");
          return to_json(dist_to_conv(load_approach(a[0])));
        }}},
      {"conv-to-dist",
       {"conv-to-dist APPROACH",
        [](const Args& a, const Q&) {
          arity(a, 1, "conv-to-dist APPROACH");
          return to_json(conv_to_dist(load_approach(a[0])));
        }}},
      {"underlying-metric",
       {"underlying-metric APPROACH",
        [](const Args& a, const Q&) {
          arity(a, 1, "underlying-metric APPROACH");
          return to_json(underlying_metric(load_approach(a[0])));
        }}},
      {"is-absolutely-cocomplete",
       {"is-absolutely-cocomplete APPROACH",
        [](const Args& a, const Q&) {
          arity(a, 1, "is-absolutely-cocomplete APPROACH");
          return Json(is_absolutely_cocomplete(load_approach(a[0])));
        }}},
      {"app-to-lattice-action",
       {"app-to-lattice-action APPROACH",
        [](const Args& a, const Q&) {
          arity(a, 1, "app-to-lattice-action APPROACH");
          return to_json(app_to_lattice_action(load_approach(a[0])));
        }}},
      {"lattice-action-to-app",
       {"lattice-action-to-app ACTION",
        [](const Args& a, const Q&) {
          arity(a, 1, "lattice-action-to-app ACTION");
          return to_json(lattice_action_to_app(load_action(a[0])));
        }}},
      {"quantale-approach",
       {"quantale-approach  (uses --quantale)",
        [](const Args& a, const Q& q) {
          arity(a, 0, "quantale-approach");
          return to_json(quantale_approach(q));
        }}},
      {"quantale-op-approach",
       {"quantale-op-approach  (uses --quantale)",
        [](const Args& a, const Q& q) {
          arity(a, 0, "quantale-op-approach");
          return to_json(quantale_op_approach(q));
        }}},
  };
  return ops;
}

// Generators for gen.

FinitePoset random_lattice(std::size_t n, Rng& rng) {
  if (n > 5) throw Error(ErrorCode::TooLarge, "lattices are drawn from an enumeration of at most 5 points");
  const std::vector<FinitePoset> all = enumerate_lattices(n);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

OrdAction random_action(std::size_t n, const ValueQuantale& q, Rng& rng) {
  if (n > 3) throw Error(ErrorCode::TooLarge, "actions are drawn from an enumeration of at most 3 points");
  std::vector<OrdAction> valid;
  for (const FinitePoset& p : enumerate_posets(n, true))
    for (OrdAction& a : enumerate_actions(p, q))
      if (check_action_conditions(a).all()) valid.push_back(std::move(a));
  if (valid.empty()) throw Error(ErrorCode::TooLarge, "no action of this size");
  return valid[std::uniform_int_distribution<std::size_t>(0, valid.size() - 1)(rng)];
}

Json generate(const std::string& kind, const ValueQuantale& q, std::size_t n, Rng& rng) {
  if (kind == "poset") {
    std::vector<FinitePoset> all = enumerate_posets(std::min<std::size_t>(n, 4), false);
    if (n > 4) throw Error(ErrorCode::TooLarge, "posets are drawn from an enumeration of at most 4 points");
    return to_json(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
  }
  if (kind == "lattice") return to_json(random_lattice(n, rng));
  if (kind == "metric") return to_json(random_metric(q, n, rng));
  if (kind == "action") return to_json(random_action(n, q, rng));
  if (kind == "met_comp_haus") {
    // On a finite set the only algebra structure is the identity.
    MetCompHaus s{random_metric(q, n, rng), {}};
    for (std::size_t i = 0; i < n; ++i) s.alpha.push_back(i);
    return to_json(s);
  }
  if (kind == "approach") {
    if (n > kMaxLifted) throw Error(ErrorCode::TooLarge, "approach spaces are limited to 8 points");
    return to_json(random_dist_space(q, n, rng));
  }
  throw MalformedInput("unknown kind \"" + kind +
                       "\"; expected poset, lattice, metric, action, met_comp_haus or approach");
}

// Subcommand bodies.

int cmd_check(const std::string& path, Output& out) {
  const Document d = load_document(path);
  std::string reason;
  const bool ok = check_document(d, reason);
  Json report{{"file", path}, {"type", type_name(d)}, {"valid", ok}};
  if (!ok) report["reason"] = reason;
  out.emit(report, ok ? "ok: valid " + type_name(d) : "violation: " + reason);
  return ok ? kPass : kViolation;
}

int cmd_compute(const std::string& op, const std::vector<std::string>& args, const ValueQuantale& q, Output& out) {
  const auto& ops = operations();
  auto it = ops.find(op);
  if (it == ops.end()) throw MalformedInput("unknown operation \"" + op + "\"; see compute --help");
  const Json result = it->second.second(args, q);
  out.emit(Json{{"op", op}, {"result", result}}, text_of(result));
  return result.is_null() ? kViolation : kPass;
}

int cmd_verify(const std::string& name, const SuiteOptions& options, Output& out) {
  const SuiteReport r = run_suite(name, options);
  Json j{{"suite", r.suite}, {"pass", r.pass}, {"instances", r.instances}, {"failures", r.failures},
         {"seed", options.seed}, {"size", options.size}, {"samples", options.samples},
         {"quantale", options.quantale.descriptor()}};
  std::ostringstream text;
  text << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.instances << " instances, " << r.failures
       << " failing";
  if (r.counterexample) {
    j["counterexample"] = *r.counterexample;
    text << "\ncounterexample:\n" << text_of(*r.counterexample);
  }
  out.emit(j, text.str());
  return r.pass ? kPass : kViolation;
}

int cmd_list(Output& out) {
  Json j = Json::array();
  std::ostringstream text;
  for (const SuiteInfo& s : suite_index()) {
    j.push_back(Json{{"name", s.name}, {"module", s.module}, {"invariant", s.invariant}});
    text << s.name << std::string(s.name.size() < 26 ? 26 - s.name.size() : 1, ' ') << s.module
         << std::string(s.module.size() < 10 ? 10 - s.module.size() : 1, ' ') << s.invariant << "\n";
  }
  std::string t = text.str();
  if (!t.empty()) t.pop_back();
  out.emit(j, t);
  return kPass;
}

std::pair<std::string, std::string> split_binding(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw MalformedInput("expected NAME=VALUE, got \"" + s + "\"");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

int cmd_eval(const std::string& expr, const std::string& space, const std::vector<std::string>& weights,
             const std::vector<std::string>& lets, Output& out) {
  Bindings b;
  if (!space.empty()) {
    const Document d = load_document(space);
    if (const auto* m = std::get_if<MetricSpace>(&d)) {
      b.space = *m;
    } else if (const auto* s = std::get_if<ApproachSpace>(&d)) {
      b.approach = *s;
      b.space = underlying_metric(*s);
    } else {
      throw MalformedInput("--bind expects a metric or approach document");
    }
  }
  for (const std::string& w : weights) {
    const auto [name, path] = split_binding(w);
    if (!b.space) throw MalformedInput("weights need a space bound with --bind");
    b.weights[name] = load_weight(path, *b.space);
  }
  for (const std::string& l : lets) {
    const auto [name, element] = split_binding(l);
    if (!b.space) throw MalformedInput("elements need a space bound with --bind");
    b.elements[name] = b.space->index_of(element);
  }
  const EvalResult r = evaluate(expr, b);
  const std::string text = to_text(r, b);
  out.emit(Json{{"expression", expr}, {"sort", r.is_element ? "element" : "value"}, {"result", text}}, text);
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on quantale-enriched structures"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--quantale", g.quantale, "chain:STEP:LEVELS or rational")->capture_default_str();
  app.add_option("--size", g.size, "carrier size for gen and verify")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--samples", g.samples, "random instances per suite")->capture_default_str();
  app.add_option("--threads", g.threads, "suite worker threads, 0 for all cores")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string file;
  auto* check = app.add_subcommand("check", "validate a structure document");
  check->add_option("file", file, "document path")->required();

  std::string op;
  std::vector<std::string> op_args;
  auto* compute = app.add_subcommand("compute", "run one construction");
  {
    std::string ops_help = "one of:";
    for (const auto& [name, entry] : operations()) ops_help += "\n  " + entry.first;
    compute->add_option("op", op, ops_help)->required();
  }
  compute->add_option("args", op_args, "document paths, element names and values");

  std::string suite;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite, "suite name");
  verify->add_flag("--list", list, "print the suite index");

  std::string kind;
  auto* gen = app.add_subcommand("gen", "generate a seeded random document");
  gen->add_option("kind", kind, "poset, lattice, metric, action, met_comp_haus or approach")->required();

  std::string expr, bind;
  std::vector<std::string> weights, lets;
  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expression", expr, "for example: sup y . d(y,x) - psi(y)")->required();
  eval->add_option("--bind", bind, "metric or approach document");
  eval->add_option("--weight", weights, "NAME=FILE, a weight on the bound space");
  eval->add_option("--let", lets, "VAR=ELEMENT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kMalformed;
  }

  Output output(g, out);
  try {
    const ValueQuantale q = ValueQuantale::from_descriptor(g.quantale);
    if (*check) return cmd_check(file, output);
    if (*compute) return cmd_compute(op, op_args, q, output);
    if (*verify) {
      if (list) return cmd_list(output);
      if (suite.empty()) throw MalformedInput("verify needs a suite name or --list");
      return cmd_verify(suite, SuiteOptions{q, g.size, g.seed, g.samples, g.threads}, output);
    }
    if (*gen) {
      Rng rng(g.seed);
      const Json doc = generate(kind, q, g.size, rng);
      out << canonical(doc);  // documents are JSON in either format
      return kPass;
    }
    if (*eval) return cmd_eval(expr, bind, weights, lets, output);
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const DslError& e) {
    err << "expression error: " << e.what() << "\n";
    return kMalformed;
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_input_error(e.code()) ? kMalformed : kViolation;
  }
  return kMalformed;
}

}  // namespace lawvere::cli
