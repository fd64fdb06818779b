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


#include "lawvere/cli/dsl.hpp"

#include <cctype>
#include <memory>
#include <vector>

#include "lawvere/colimit.hpp"
#include "lawvere/ultrafilter.hpp"

namespace lawvere::cli {

namespace {

enum class Tok { Ident, Number, String, LParen, RParen, Comma, Dot, Plus, Minus, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
    } else if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
    } else if (c == '"') {
      const std::size_t close = s.find('"', i + 1);
      if (close == std::string_view::npos) throw DslError("unterminated string at " + std::to_string(start));
      out.push_back({Tok::String, std::string(s.substr(i + 1, close - i - 1)), start});
      i = close + 1;
    } else if (s.substr(i, 3) == "\xE2\x8A\x96") {  // ⊖
      out.push_back({Tok::Minus, "-", start});
      i += 3;
    } else if (s.substr(i, 3) == "\xE2\x88\x9E") {  // ∞
      out.push_back({Tok::Ident, "inf", start});
      i += 3;
    } else {
      Tok k;
      switch (c) {
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ',': k = Tok::Comma; break;
        case '.': k = Tok::Dot; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '/': k = Tok::Slash; break;
        default: throw DslError("unexpected character '" + std::string(1, s[i]) + "' at " + std::to_string(i));
      }
      out.push_back({k, std::string(1, s[i]), start});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

enum class Sort { Element, Value };

struct Node {
  enum class Kind { Number, Infinity, Var, Literal, Dist, Conv, Apply, Yoneda, Tensor, Add, Minus, Sup, Inf };
  Kind kind;
  Sort sort;
  std::string name;  // variable, weight or literal element name
  Rational number{0};
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k, Sort s) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->sort = s;
  return n;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }
  Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw DslError(what + " at " + std::to_string(peek().pos));
  }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    next();
  }
  static void want(const NodePtr& n, Sort s, const char* where) {
    if (n->sort != s)
      throw DslError(std::string(where) + " needs " + (s == Sort::Value ? "a value" : "an element") + ", got " +
                     (n->sort == Sort::Value ? "a value" : "an element"));
  }

  bool at_binder() const {
    return peek().kind == Tok::Ident && (peek().text == "sup" || peek().text == "inf") &&
           peek(1).kind == Tok::Ident && peek(2).kind == Tok::Dot;
  }

  NodePtr expr() {
    if (at_binder()) return binder();
    NodePtr lhs = primary();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = next().kind == Tok::Plus;
      NodePtr rhs = at_binder() ? binder() : primary();
      want(lhs, Sort::Value, plus ? "+" : "-");
      want(rhs, Sort::Value, plus ? "+" : "-");
      NodePtr n = make(plus ? Node::Kind::Add : Node::Kind::Minus, Sort::Value);
      n->lhs = std::move(lhs);
      n->rhs = std::move(rhs);
      lhs = std::move(n);
    }
    return lhs;
  }

  NodePtr binder() {
    const bool sup = next().text == "sup";
    NodePtr n = make(sup ? Node::Kind::Sup : Node::Kind::Inf, Sort::Value);
    n->name = next().text;
    expect(Tok::Dot, "'.'");
    n->lhs = expr();
    want(n->lhs, Sort::Value, sup ? "sup body" : "inf body");
    return n;
  }

  std::pair<NodePtr, NodePtr> two_args(const char* what) {
    expect(Tok::LParen, "'('");
    NodePtr a = expr();
    expect(Tok::Comma, "','");
    NodePtr b = expr();
    expect(Tok::RParen, "')'");
    (void)what;
    return {std::move(a), std::move(b)};
  }

  NodePtr one_arg() {
    expect(Tok::LParen, "'('");
    NodePtr a = expr();
    expect(Tok::RParen, "')'");
    return a;
  }

  NodePtr primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        Rational r(std::stoll(t.text));
        if (peek().kind == Tok::Slash) {
          next();
          if (peek().kind != Tok::Number) fail("expected a denominator");
          const long long den = std::stoll(next().text);
          if (den == 0) fail("zero denominator");
          r /= den;
        }
        NodePtr n = make(Node::Kind::Number, Sort::Value);
        n->number = r;
        return n;
      }
      case Tok::String: {
        next();
        NodePtr n = make(Node::Kind::Literal, Sort::Element);
        n->name = t.text;
        return n;
      }
      case Tok::LParen: {
        next();
        NodePtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        break;
      default:
        fail(t.kind == Tok::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
    }
    next();
    const bool call = peek().kind == Tok::LParen;
    if (t.text == "inf" && !call) return make(Node::Kind::Infinity, Sort::Value);
    if (call && (t.text == "d" || t.text == "a" || t.text == "tensor")) {
      auto [x, y] = two_args(t.text.c_str());
      const bool tensor = t.text == "tensor";
      want(x, Sort::Element, t.text.c_str());
      want(y, tensor ? Sort::Value : Sort::Element, t.text.c_str());
      NodePtr n = make(tensor ? Node::Kind::Tensor : t.text == "d" ? Node::Kind::Dist : Node::Kind::Conv,
                       tensor ? Sort::Element : Sort::Value);
      n->lhs = std::move(x);
      n->rhs = std::move(y);
      return n;
    }
    if (call && t.text == "yoneda") {
      NodePtr center = one_arg();
      want(center, Sort::Element, "yoneda");
      if (peek().kind != Tok::LParen) fail("yoneda(x) must be applied: yoneda(x)(y)");
      NodePtr at = one_arg();
      want(at, Sort::Element, "yoneda(x)");
      NodePtr n = make(Node::Kind::Yoneda, Sort::Value);
      n->lhs = std::move(center);
      n->rhs = std::move(at);
      return n;
    }
    if (call) {
      NodePtr arg = one_arg();
      want(arg, Sort::Element, t.text.c_str());
      NodePtr n = make(Node::Kind::Apply, Sort::Value);
      n->name = t.text;
      n->lhs = std::move(arg);
      return n;
    }
    NodePtr n = make(Node::Kind::Var, Sort::Element);
    n->name = t.text;
    return n;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

class Evaluator {
 public:
  explicit Evaluator(const Bindings& b) : b_(b) {
    if (b.approach) metric_ = underlying_metric(*b.approach);
    else if (b.space) metric_ = *b.space;
  }

  EvalResult run(const Node& n) {
    EvalResult r;
    r.is_element = n.sort == Sort::Element;
    if (r.is_element) r.element = elem(n);
    else r.value = value(n);
    return r;
  }

 private:
  const MetricSpace& space() const {
    if (!metric_) throw DslError("expression needs a bound space");
    return *metric_;
  }

  std::size_t elem(const Node& n) {
    switch (n.kind) {
      case Node::Kind::Var: {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
          if (it->first == n.name) return it->second;
        if (auto it = b_.elements.find(n.name); it != b_.elements.end()) return it->second;
        return literal(n.name);
      }
      case Node::Kind::Literal:
        return literal(n.name);
      case Node::Kind::Tensor: {
        const std::size_t x = elem(*n.lhs);
        const auto t = tensor(space(), x, value(*n.rhs));
        if (!t) throw Error(ErrorCode::NotTensored, "no tensor " + space().carrier()[x] + " + " + value(*n.rhs).str());
        return *t;
      }
      default:
        throw DslError("not an element term");
    }
  }

  std::size_t literal(const std::string& name) const {
    const auto& c = space().carrier();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] == name) return i;
    throw DslError("unbound name \"" + name + "\"");
  }

  Value value(const Node& n) {
    const ValueQuantale& q = space().quantale();
    switch (n.kind) {
      case Node::Kind::Number:
        return q.from_rational(n.number);
      case Node::Kind::Infinity:
        return q.top();
      case Node::Kind::Dist:
        return space().d(elem(*n.lhs), elem(*n.rhs));
      case Node::Kind::Conv: {
        const std::size_t x = elem(*n.lhs), y = elem(*n.rhs);
        if (b_.approach) return convergence(*b_.approach, unit(space().size(), x), y);
        return space().d(x, y);  // a metric space read as its approach space
      }
      case Node::Kind::Yoneda:
        return space().d(elem(*n.rhs), elem(*n.lhs));
      case Node::Kind::Apply: {
        auto it = b_.weights.find(n.name);
        if (it == b_.weights.end()) throw DslError("unbound weight \"" + n.name + "\"");
        return it->second.values.at(elem(*n.lhs));
      }
      case Node::Kind::Add:
        return add(value(*n.lhs), value(*n.rhs));
      case Node::Kind::Minus:
        return minus(value(*n.lhs), value(*n.rhs));
      case Node::Kind::Sup:
      case Node::Kind::Inf: {
        const bool sup = n.kind == Node::Kind::Sup;
        Value acc = sup ? q.zero() : q.top();
        for (std::size_t x = 0; x < space().size(); ++x) {
          scope_.emplace_back(n.name, x);
          const Value v = value(*n.lhs);
          scope_.pop_back();
          acc = sup ? std::max(acc, v) : std::min(acc, v);
        }
        return acc;
      }
      default:
        throw DslError("not a value term");
    }
  }

  const Bindings& b_;
  std::optional<MetricSpace> metric_;
  std::vector<std::pair<std::string, std::size_t>> scope_;
};

}  // namespace

EvalResult evaluate(std::string_view expression, const Bindings& bindings) {
  const NodePtr ast = Parser(tokenize(expression)).parse();
  return Evaluator(bindings).run(*ast);
}

std::string to_text(const EvalResult& r, const Bindings& bindings) {
  if (!r.is_element) return r.value.str();
  if (bindings.approach) return bindings.approach->carrier()[r.element];
  return bindings.space->carrier()[r.element];
}

}  // namespace lawvere::cli
