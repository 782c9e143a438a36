/* SPDX-License-Identifier: Apache-2.0 */

// Acceptance runner: the project's exit gate. Each criterion prints one
// PASS/FAIL line; the process exits nonzero when any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pnet/io.hpp"
#include "pnet/pnet.hpp"
#include "pnet/translate.hpp"
#include "support/data.hpp"
#include "support/gen.hpp"

using namespace pnet;
using AT = ArrowTerm;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  std::string what;
  double budget_ms;
  std::function<std::string()> body;  // empty string = pass, else failure note
};

int failures = 0;

void run(const Criterion& c) {
  auto t0 = Clock::now();
  std::string note;
  try {
    note = c.body();
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  bool ok = note.empty() && ms < c.budget_ms;
  if (note.empty() && ms >= c.budget_ms)
    note = "over time budget of " + std::to_string(c.budget_ms) + " ms";
  if (!ok) ++failures;
  std::printf("[%s] criterion %2d: %s (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL",
              c.id, c.what.c_str(), ms, note.empty() ? "" : " — ",
              note.c_str());
}

std::string check_eq(const SplitEquivalence& got, const SplitEquivalence& want,
                     const std::string& label) {
  if (got == want) return "";
  return label + ": got " + to_string(got) + ", want " + to_string(want);
}

Formula F(const char* s) { return parse_formula(s); }

// Golden data is loaded up front so the timed bodies measure the library
// operations, not file parsing.
struct Goldens {
  SplitEquivalence R, P, PR;
  Env g_examples;
  std::vector<std::pair<std::string, SplitEquivalence>> g_expected;
  AT roundtrip;

  Goldens()
      : R(load("compose_example.json", "R")),
        P(load("compose_example.json", "P")),
        PR(load("compose_example.json", "expected")),
        g_examples(testdata::load_defs("g_examples.pnc")),
        roundtrip(testdata::golden_term("roundtrip.pnc", "roundtrip")) {
    for (const char* name : {"gc_and", "gdelta_and", "gsigma_or"})
      g_expected.emplace_back(
          name, split_equivalence_from_json(nlohmann::json::parse(
                    testdata::slurp(std::string(name) + ".json"))));
  }

  static SplitEquivalence load(const std::string& file,
                               const std::string& key) {
    return split_equivalence_from_json(
        nlohmann::json::parse(testdata::slurp(file))[key]);
  }
};

const Goldens& goldens() {
  static Goldens g;
  return g;
}

// --- criterion bodies -------------------------------------------------------

std::string composition_example() {
  const Goldens& g = goldens();
  return check_eq(compose(g.P, g.R), g.PR, "P*R");
}

std::string diagram_goldens() {
  const Goldens& g = goldens();
  for (const auto& [name, want] : g.g_expected) {
    auto got = g_arrow(*g.g_examples.lookup_arrow(name), Theory::PNNeg);
    if (auto err = check_eq(got, want, name); !err.empty()) return err;
  }
  return "";
}

std::string roundtrip_composite() {
  const AT& roundtrip = goldens().roundtrip;
  ArrowType ty = type_of(roundtrip);
  if (!(ty.source == F("p /\\ q") && ty.target == F("p /\\ q")))
    return "type is " + print_formula_typed(ty);
  if (!check_theory(roundtrip, Theory::PN)) return "not a pn term";
  if (auto err = check_eq(g_arrow(roundtrip, Theory::PN), identity(2), "G(roundtrip)");
      !err.empty())
    return err;
  Verdict v = equal_in(roundtrip, AT::id(F("p /\\ q")), Theory::PN);
  if (!v.equal) return "equal_in(roundtrip, id) said unequal";
  return "";
}

std::string catalog_sweep(bool theorems) {
  int checked = 0;
  for (Theory th : all_theories()) {
    testgen::Gen gen(th, theorems ? 0xFEEDu : 0xBEEFu);
    const auto& cat = theorems ? theorem_catalog(th) : axiom_catalog(th);
    for (const EquationSchema& s : cat) {
      for (int i = 0; i < 50; ++i) {
        auto [lhs, rhs] = instantiate(s, gen.rsubst(s, 3, 6));
        if (!(type_of(lhs) == type_of(rhs)))
          return theory_name(th) + " " + s.name + s.variant + ": sides typed differently";
        if (!(g_arrow(lhs, th) == g_arrow(rhs, th)))
          return theory_name(th) + " " + s.name + s.variant +
                 ": G(lhs) != G(rhs) for " + print_arrow(lhs);
        ++checked;
      }
    }
  }
  if (checked < 6 * 26 * 50 / 2) return "sweep ran suspiciously few instances";
  return "";
}

std::string br_laws() {
  std::mt19937_64 rng(0xB12A);
  auto rmatch = [&](std::size_t m, std::size_t n) {
    std::vector<Endpoint> eps;
    for (std::size_t i = 0; i < m; ++i)
      eps.push_back(src_ep(static_cast<std::uint32_t>(i)));
    for (std::size_t i = 0; i < n; ++i)
      eps.push_back(tgt_ep(static_cast<std::uint32_t>(i)));
    std::shuffle(eps.begin(), eps.end(), rng);
    std::vector<Block> blocks;
    for (std::size_t i = 0; i + 1 < eps.size(); i += 2)
      blocks.push_back({eps[i], eps[i + 1]});
    return SplitEquivalence(m, n, std::move(blocks));
  };
  for (int i = 0; i < 500; ++i) {
    std::size_t x = rng() % 12, y = rng() % 12, z = rng() % 12, w = rng() % 12;
    if ((x + y) % 2) ++y;
    if ((y + z) % 2) ++z;
    if ((z + w) % 2) ++w;
    auto r = rmatch(x, y), q = rmatch(y, z), p = rmatch(z, w);
    auto a = compose(p, compose(q, r));
    if (!(a == compose(compose(p, q), r))) return "associativity failed";
    if (!a.is_brauerian()) return "composition left the Brauerian class";
    if (!(compose(identity(y), r) == r)) return "left identity law failed";
    if (!(compose(r, identity(x)) == r)) return "right identity law failed";
  }
  return "";
}

std::string functor_f_suite() {
  testgen::Gen gen(Theory::PNNeg, 0xF00D);
  for (int i = 0; i < 200; ++i) {
    AT f = gen.rterm(2 + gen.irand(9));
    ArrowType ty = type_of(f);
    AT Ff = f_arrow(f);
    if (!check_theory(Ff, Theory::PN))
      return "Ff outside pn for " + print_arrow(f);
    ArrowType tF = type_of(Ff);
    if (!(tF.source == f_object(ty.source) && tF.target == f_object(ty.target)))
      return "Ff typed wrongly for " + print_arrow(f);
    if (!(g_arrow(Ff, Theory::PN) == g_arrow(f, Theory::PNNeg)))
      return "G(Ff) != G(f) for " + print_arrow(f);
    AT wrapped =
        AT::comp(iso_i_inv(ty.target), AT::comp(Ff, iso_i(ty.source)));
    if (!(g_arrow(wrapped, Theory::PNNeg) == g_arrow(f, Theory::PNNeg)))
      return "auxiliary-lemma identity failed for " + print_arrow(f);
  }
  return "";
}

std::string development() {
  for (Theory th : all_theories()) {
    testgen::Gen gen(th, 0xDE7 + static_cast<unsigned>(th));
    for (int i = 0; i < 300; ++i) {
      AT f = gen.rterm(2 + gen.irand(9));
      AT d = develop(f);
      if (!is_developed(d)) return "develop output not developed: " + print_arrow(f);
      if (!(g_arrow(d, th) == g_arrow(f, th)))
        return "develop changed G for " + print_arrow(f);
    }
  }
  return "";
}

std::string rewrite_walks() {
  int done = 0;
  for (Theory th : all_theories()) {
    testgen::Gen gen(th, 0xA1 + static_cast<unsigned>(th));
    for (int i = 0; i < 34 && done < 200; ++i, ++done) {
      AT f = gen.rterm(2 + gen.irand(7));
      SplitEquivalence before = g_arrow(f, th);
      AT g = gen.random_walk(f, 20);
      if (!(g_arrow(g, th) == before))
        return theory_name(th) + " walk changed G, start " + print_arrow(f);
    }
  }
  return "";
}

std::string lemma_fuzz() {
  for (Theory th : {Theory::DS, Theory::MDS}) {
    testgen::Gen gen(th, 0x1E44A);
    for (int i = 0; i < 500; ++i) {
      AT f = gen.rterm(2 + gen.irand(10));
      // The connectedness half has no analogue once mix is present.
      std::string err =
          testgen::check_net_lemmas(f, th, /*connectedness=*/th == Theory::DS);
      if (!err.empty()) return theory_name(th) + ": " + err;
    }
  }
  return "";
}

std::string negative_control() {
  Verdict v = equal_in(AT::c_and(F("p"), F("p")), AT::id(F("p /\\ p")),
                       Theory::DS);
  if (v.equal) return "claimed equal";
  if (v.reason != Verdict::Reason::GraphMismatch) return "wrong reason";
  if (!v.witness || !(*v.witness == Block{src_ep(0), tgt_ep(1)}))
    return "wrong witness";
  return "";
}

}  // namespace

int main() {
  goldens();  // load data before the clocks start
  std::vector<Criterion> criteria = {
      {1, "composition example P*R = {{0s,0t},{1s,2s}}", 1.0,
       composition_example},
      {2, "Gc∧/GΔ∧/GΣ∨ diagram goldens, pair-for-pair", 3.0, diagram_goldens},
      {3, "round-trip composite: type, G = 1_2, equal to id", 50.0, roundtrip_composite},
      {4, "axiom soundness sweep, 6 theories × 50 instantiations", 30000.0,
       [] { return catalog_sweep(false); }},
      {5, "theorem sweep over the derived-equation catalog", 30000.0,
       [] { return catalog_sweep(true); }},
      {6, "Br category laws on 500 random Brauerian triples", 5000.0, br_laws},
      {7, "functor F suite on 200 random pn-neg terms", 30000.0,
       functor_f_suite},
      {8, "development of 300 random terms per theory", 20000.0, development},
      {9, "200 rewrite walks of ≤ 20 axiom applications", 30000.0,
       rewrite_walks},
      {10, "lemma fuzz: 500 ds terms (both), 500 mds terms (acyclicity only)",
       30000.0, lemma_fuzz},
      {11, "negative control: c∧_{p,p} ≠ 1 with witness {0s,1t}", 1.0,
       negative_control},
  };
  for (const Criterion& c : criteria) run(c);
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
