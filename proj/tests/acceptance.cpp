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


// Acceptance suite: one line per criterion, every comparison exact.
//
//   acceptance        run all ten criteria
//   acceptance N      run criterion N only
//
// Exit status is 0 iff every criterion that ran passed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "lawvere/action.hpp"
#include "lawvere/approach.hpp"
#include "lawvere/colimit.hpp"
#include "lawvere/generate.hpp"
#include "lawvere/ultra.hpp"
#include "oracles.hpp"

namespace {

using namespace lawvere;

const ValueQuantale kChain3 = ValueQuantale::chain(Rational(1), 3);
const ValueQuantale kChain4 = ValueQuantale::chain(Rational(1), 4);
const ValueQuantale kChain5 = ValueQuantale::chain(Rational(1), 5);

// Collects failed sub-checks; the first few are kept for the report.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string notes() const {
    std::string out;
    for (const auto& n : notes_) out += "; FAIL " + n;
    if (failures_ > notes_.size()) out += "; +" + std::to_string(failures_ - notes_.size()) + " more";
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

struct Outcome {
  bool pass;
  std::string summary;
};

// Extended rationals as (infinite, value), with arithmetic written out here.
struct Ext {
  bool inf;
  Rational r;
};
Ext ext_add(Ext a, Ext b) { return a.inf || b.inf ? Ext{true, 0} : Ext{false, a.r + b.r}; }
Ext ext_minus(Ext w, Ext u) {
  if (u.inf) return {false, 0};
  if (w.inf) return {true, 0};
  return {false, w.r > u.r ? w.r - u.r : Rational(0)};
}
bool ext_geq(Ext a, Ext b) { return a.inf || (!b.inf && a.r >= b.r); }
Value to_value(Ext e) { return e.inf ? Value::infinity() : Value::rational(e.r); }

Outcome quantale_laws() {
  Tally t;
  for (int u = 0; u <= 5; ++u)
    for (int v = 0; v <= 5; ++v)
      for (int w = 0; w <= 5; ++w) {
        const Value vu = kChain5.at(u), vv = kChain5.at(v), vw = kChain5.at(w);
        const bool lhs = oracle::add(u, v, 5) >= w;
        const bool rhs = v >= oracle::residual(w, u, 5);
        t.check(lhs == rhs && residuation_holds(vu, vv, vw) &&
                    add(vu, vv).index() == oracle::add(u, v, 5) && minus(vw, vu).index() == oracle::residual(w, u, 5),
                "chain triple " + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w));
      }
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::int64_t> num(0, 60), den(1, 12), inf(0, 19);
  auto draw = [&] { return inf(rng) == 0 ? Ext{true, 0} : Ext{false, Rational(num(rng), den(rng))}; };
  for (int i = 0; i < 10000; ++i) {
    const Ext u = draw(), v = draw(), w = draw();
    const bool law = ext_geq(ext_add(u, v), w) == ext_geq(v, ext_minus(w, u));
    const bool lib = add(to_value(u), to_value(v)) == to_value(ext_add(u, v)) &&
                     minus(to_value(w), to_value(u)) == to_value(ext_minus(w, u)) &&
                     residuation_holds(to_value(u), to_value(v), to_value(w));
    t.check(law && lib, "rational triple " + std::to_string(i));
  }
  return {t.ok(), "residuation on 216 chain(1,5) triples and 10000 rational triples" + t.notes()};
}

Outcome yoneda_lemma() {
  Tally t;
  Rng rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int i = 0; i < 500; ++i) {
    const MetricSpace m = random_metric(kChain4, size(rng), rng);
    const WeightTable psi = random_weight(m, rng);
    const oracle::Table d = oracle::table_of(m);
    const oracle::Weight w = oracle::weight_of(psi);
    std::uniform_int_distribution<std::size_t> point(0, m.size() - 1);
    const std::size_t x = point(rng);
    bool valid = oracle::axioms(d, 4);
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b) valid = valid && w[a] <= oracle::add(d[a][b], w[b], 4);
    const int expected = oracle::yoneda_hom(d, x, w);
    t.check(valid && expected == w[x] && weight_distance(yoneda(m, x), psi).index() == w[x] &&
                yoneda_lemma_check(m, x, psi),
            "instance " + std::to_string(i));
  }
  return {t.ok(), "[y(x), psi] = psi(x) on 500 seeded instances, |X| <= 4, chain(1,4)" + t.notes()};
}

// Criteria 3 and 4 share a corpus.
struct CocompleteRun {
  std::size_t spaces = 0, cocomplete = 0, weights = 0;
  Tally equivalence, formula;
};

CocompleteRun cocomplete_run() {
  CocompleteRun run;
  std::vector<oracle::Table> corpus;
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<int> digits(n * n - n, 0);
    while (true) {
      oracle::Table t(n, std::vector<int>(n, 0));
      std::size_t k = 0;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (x != y) t[x][y] = digits[k++];
      if (oracle::axioms(t, 3)) corpus.push_back(t);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] > 3) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) corpus.push_back(oracle::table_of(random_metric(kChain3, 3, rng)));
  for (const oracle::Table& t : corpus) {
    ++run.spaces;
    const MetricSpace m = oracle::to_space(t, kChain3);
    const bool expected = oracle::axioms(t, 3) && oracle::every_weight_has_sup(t, 3);
    const bool got = is_cocomplete(m);
    run.equivalence.check(got == expected, "space #" + std::to_string(run.spaces));
    if (!got) continue;
    ++run.cocomplete;
    for (const oracle::Weight& w : oracle::contra_weights(t, 3)) {
      ++run.weights;
      const WeightTable psi = oracle::to_weight(w, kChain3);
      const auto sups = oracle::sups(t, w);
      const auto s = weighted_sup(m, psi);
      const std::size_t f = sup_by_formula(m, psi);
      run.formula.check(s && !sups.empty() && oracle::equivalent(t, f, *s) && oracle::equivalent(t, f, sups.front()),
                        "space #" + std::to_string(run.spaces));
    }
  }
  return run;
}

Outcome cocompleteness(const CocompleteRun& run) {
  return {run.equivalence.ok(), "is_cocomplete vs every-weight-has-a-sup on " + std::to_string(run.spaces) +
                                    " spaces (" + std::to_string(run.cocomplete) + " cocomplete)" +
                                    run.equivalence.notes()};
}

Outcome closed_form(const CocompleteRun& run) {
  return {run.formula.ok() && run.cocomplete > 0,
          "sup_by_formula ~ weighted_sup for " + std::to_string(run.weights) + " weights on " +
              std::to_string(run.cocomplete) + " cocomplete spaces" + run.formula.notes()};
}

Outcome isbell() {
  Tally t;
  Rng rng(11);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  for (int i = 0; i < 500; ++i) {
    const MetricSpace m = random_metric(kChain3, size(rng), rng);
    const WeightTable psi = random_weight(m, rng);
    WeightTable phi = random_weight(dual(m), rng);
    phi.variance = Variance::Co;
    const oracle::Table d = oracle::table_of(m);
    const oracle::Weight p = oracle::weight_of(psi), f = oracle::weight_of(phi);
    const oracle::Weight plus = oracle::isbell_plus(d, p), minus_f = oracle::isbell_minus(d, f);
    bool ok = oracle::weight_of(isbell_plus(m, psi)) == plus && oracle::weight_of(isbell_minus(m, phi)) == minus_f;
    ok = ok && oracle::hom(p, oracle::isbell_minus(d, plus)) == 0;                 // unit
    ok = ok && oracle::hom(f, oracle::isbell_plus(d, minus_f)) == 0;               // counit
    ok = ok && oracle::isbell_plus(d, oracle::isbell_minus(d, plus)) == plus;      // (((psi+)-)+) = psi+
    ok = ok && oracle::isbell_minus(d, oracle::isbell_plus(d, minus_f)) == minus_f;
    ok = ok && oracle::hom(f, plus) == oracle::hom(p, minus_f);
    ok = ok && isbell_adjunction_check(m);
    t.check(ok, "instance " + std::to_string(i));
  }
  return {t.ok(), "unit, counit and triple laws on 500 seeded instances, |X| <= 3, chain(1,3)" + t.notes()};
}

Outcome action_equivalence() {
  Tally t;
  std::size_t actions = 0, spaces = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const FinitePoset& p : enumerate_posets(n, true))
      for (const OrdAction& a : enumerate_actions(p, kChain3)) {
        if (!check_action_conditions(a).all()) continue;
        ++actions;
        const MetricSpace m = metric_from_action(a);
        // d(x,y) = least u with x + u <= y, recomputed here.
        oracle::Table d(n, std::vector<int>(n, 3));
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            for (int u = 3; u >= 0; --u)
              if (p.leq(a.act[x][static_cast<std::size_t>(u)], y)) d[x][y] = u;
        const bool cocomplete = oracle::every_weight_has_sup(d, 3);
        t.check(oracle::table_of(m) == d && actions_equivalent(action_from_metric(m), a) &&
                    cocomplete_algebra_check(a) == cocomplete && is_cocomplete(m) == cocomplete,
                "action #" + std::to_string(actions));
      }
    for (const MetricSpace& m : enumerate_metrics(kChain3, n)) {
      if (!is_separated(m) || !is_tensored(m)) continue;
      ++spaces;
      const OrdAction a = action_from_metric(m);
      t.check(check_action_conditions(a).all() && metric_from_action(a).table() == m.table(),
              "space #" + std::to_string(spaces));
    }
  }
  return {t.ok(), "both round trips on " + std::to_string(actions) + " actions and " + std::to_string(spaces) +
                      " tensored separated spaces, carriers <= 3; cocomplete_algebra_check agrees" + t.notes()};
}

Outcome ultrafilter_monad() {
  Tally t;
  for (std::size_t n = 1; n <= 3; ++n) {
    t.check(monad_laws_hold(n), "monad laws n=" + std::to_string(n));
    for (const MetricSpace& m : enumerate_metrics(kChain3, n)) {
      const oracle::Table d = oracle::table_of(m);
      const MetricSpace u = lift_metric(m);
      bool ok = true;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          // sup over A ∋ x, B ∋ y of the least distance from A to B.
          int best = 0;
          for (std::size_t a = 1; a < (std::size_t{1} << n); ++a)
            for (std::size_t b = 1; b < (std::size_t{1} << n); ++b) {
              if (!((a >> x) & 1U) || !((b >> y) & 1U)) continue;
              int low = 3;
              for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                  if (((a >> i) & 1U) && ((b >> j) & 1U)) low = std::min(low, d[i][j]);
              best = std::max(best, low);
            }
          ok = ok && best == d[x][y] && u.d(x, y).index() == d[x][y];
        }
      t.check(ok, "principal collapse");
    }
    std::vector<std::size_t> alpha(n, 0);
    while (true) {
      bool identity = true;
      for (std::size_t x = 0; x < n; ++x) identity = identity && alpha[x] == x;
      t.check(em_algebra_check(n, alpha) == identity, "algebra check");
      std::size_t i = 0;
      while (i < n && ++alpha[i] == n) alpha[i++] = 0;
      if (i == n) break;
    }
  }
  return {t.ok(), "monad laws, Ud(x.,y.) = d(x,y) and algebra => alpha = id, |X| <= 3" + t.notes()};
}

Outcome approach_conversions() {
  Tally t;
  // Oracle count of valid raw tables on two points.
  std::size_t oracle_count = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int e = 0; e <= 3; ++e) {
          // Columns: ∅, {0}, {1}, {0,1}.
          const oracle::Table raw{{3, 0, a, b}, {3, c, 0, e}};
          oracle_count += oracle::dist_axioms(raw, 3) ? 1 : 0;
        }
  const auto two = enumerate_dist_spaces(kChain3, 2);
  t.check(two.size() == oracle_count, "count of two-point spaces");
  auto round_trip = [&](const ApproachSpace& s, const std::string& what) {
    const ApproachSpace c = dist_to_conv(s);
    t.check(oracle::dist_axioms(oracle::table_of(s.table()), 3) && conv_to_dist(c) == s &&
                dist_to_conv(conv_to_dist(c)) == c,
            what);
  };
  for (const ApproachSpace& s : two) round_trip(s, "exhaustive |X| = 2");
  Rng rng(500);
  for (int i = 0; i < 500; ++i) round_trip(random_dist_space(kChain3, 3, rng), "seed " + std::to_string(i));
  std::size_t generated = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const MetricSpace& m : enumerate_metrics(kChain3, n)) {
      ++generated;
      const ApproachSpace a = approach_from_metric(m);
      const oracle::Table dist = oracle::dist_of_metric(oracle::table_of(m), 3);
      t.check(check_approach_axioms(a) && oracle::table_of(conv_to_dist(a).table()) == dist &&
                  oracle::dist_axioms(dist, 3),
              "a_d space #" + std::to_string(generated));
    }
  return {t.ok(), std::to_string(two.size()) + " two-point spaces, 500 seeded three-point spaces, axioms on " +
                      std::to_string(generated) + " a_d spaces" + t.notes()};
}

Outcome theorem_coherence() {
  Tally t;
  std::size_t spaces = 0, cocomplete = 0, weights = 0;
  for (std::size_t n = 1; n <= 2; ++n)
    for (const ApproachSpace& s : enumerate_dist_spaces(kChain3, n)) {
      ++spaces;
      const ApproachSpace a = as_conv(s);
      const oracle::Table conv = oracle::table_of(a.table());
      auto lib_weights = enumerate_app_weights(a);
      auto ora_weights = oracle::contra_weights(conv, 3);
      std::vector<oracle::Weight> lw;
      for (const WeightTable& w : lib_weights) lw.push_back(oracle::weight_of(w));
      std::sort(lw.begin(), lw.end());
      std::sort(ora_weights.begin(), ora_weights.end());
      t.check(lw == ora_weights, "weights on UX");
      bool total = true;
      for (const WeightTable& psi : lib_weights) total = total && weighted_sup_app(a, psi).has_value();
      const bool c = is_cocomplete_app(a);
      t.check(c == total && c == oracle::every_weight_has_sup(conv, 3), "space #" + std::to_string(spaces));
      if (!c) continue;
      ++cocomplete;
      for (const WeightTable& psi : lib_weights) {
        ++weights;
        const auto sups = oracle::sups(conv, oracle::weight_of(psi));
        const std::size_t f = sup_by_formula_app(a, psi);
        t.check(!sups.empty() && oracle::equivalent(conv, f, sups.front()) &&
                    oracle::equivalent(conv, f, *weighted_sup_app(a, psi)),
                "formula on space #" + std::to_string(spaces));
      }
    }
  return {t.ok() && cocomplete > 0, "cocomplete <=> sups total on all " + std::to_string(spaces) +
                                        " spaces with |X| <= 2; formula agrees on " + std::to_string(weights) +
                                        " weights" + t.notes()};
}

// The action side of the classifier, computed without the approach module.
bool action_side(const MetricSpace& m) {
  if (!is_separated(m) || !is_tensored(m)) return false;
  const OrdAction l = action_from_metric(m);
  return check_action_conditions(l).all() && is_op_continuous_lattice(l.poset) && cocomplete_algebra_check(l);
}

Outcome main_equivalence() {
  Tally t;
  // Lattices with actions, generated in parallel per lattice.
  std::vector<FinitePoset> lattices;
  for (std::size_t n = 1; n <= 4; ++n)
    for (FinitePoset& p : enumerate_lattices(n)) lattices.push_back(std::move(p));
  std::vector<std::future<std::vector<OrdAction>>> jobs;
  for (const FinitePoset& p : lattices)
    jobs.push_back(std::async(std::launch::async, [&p] {
      std::vector<OrdAction> out;
      for (OrdAction& l : enumerate_actions(p, kChain3))
        if (is_lattice_action(l)) out.push_back(std::move(l));
      return out;
    }));
  std::vector<OrdAction> corpus;
  for (auto& j : jobs)
    for (OrdAction& l : j.get()) corpus.push_back(std::move(l));
  t.check(corpus.size() >= 50, "corpus size");

  std::vector<std::future<bool>> checks;
  for (const OrdAction& l : corpus)
    checks.push_back(std::async(std::launch::async, [&l] {
      const ApproachSpace a = lattice_action_to_app(l);
      const OrdAction back = app_to_lattice_action(a);
      return is_absolutely_cocomplete(a) && back == l && lattice_action_to_app(back) == a;
    }));
  for (auto& c : checks) t.check(c.get(), "lattice action round trip");

  std::size_t t0 = 0, absolute = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const MetricSpace& m : enumerate_metrics(kChain3, n)) {
      const ApproachSpace a = approach_from_metric(m);
      if (!is_T0(a)) continue;
      ++t0;
      const bool abs = is_absolutely_cocomplete(a);
      absolute += abs ? 1 : 0;
      t.check(abs == action_side(m), "classifier on space #" + std::to_string(t0));
      if (abs) t.check(lattice_action_to_app(app_to_lattice_action(a)) == as_conv(a), "space round trip");
    }

  const bool v = is_absolutely_cocomplete(quantale_approach(kChain3));
  const bool vop = is_absolutely_cocomplete(quantale_op_approach(kChain3));
  t.check(v, "V classified true");
  t.check(!vop, "V^op classified " + std::string(vop ? "true" : "false") + ", expected false");
  return {t.ok(), std::to_string(corpus.size()) + " lattice actions, " + std::to_string(t0) + " T0 spaces (" +
                      std::to_string(absolute) + " absolutely cocomplete), V -> " + (v ? "true" : "false") +
                      ", V^op -> " + (vop ? "true" : "false") + t.notes()};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 10) {
      std::fprintf(stderr, "usage: acceptance [1-10]\n");
      return 2;
    }
  }
  // Criteria 3 and 4 are one run; the shared result is computed lazily.
  std::optional<CocompleteRun> shared;
  auto cocomplete = [&]() -> const CocompleteRun& {
    if (!shared) shared = cocomplete_run();
    return *shared;
  };
  const std::vector<Criterion> criteria{
      {1, "quantale laws", 1, quantale_laws},
      {2, "Yoneda lemma", 5, yoneda_lemma},
      {3, "cocompleteness", 60, [&] { return cocompleteness(cocomplete()); }},
      {4, "closed-form colimit", 60, [&] { return closed_form(cocomplete()); }},
      {5, "Isbell adjunction", 10, isbell},
      {6, "action equivalence", 60, action_equivalence},
      {7, "ultrafilter monad", 10, ultrafilter_monad},
      {8, "approach conversions", 60, approach_conversions},
      {9, "cocompleteness theorem", 30, theorem_coherence},
      {10, "main equivalence", 60, main_equivalence},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::printf("%s  %2d  %-22s %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.summary.c_str(), secs, c.limit_s, in_time ? "" : ", over time");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
