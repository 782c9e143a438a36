/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include "pnet/decide.hpp"
#include "support/data.hpp"
#include "support/gen.hpp"

using namespace pnet;
using AT = ArrowTerm;

namespace {
Formula F(const char* s) { return parse_formula(s); }
}

TEST_CASE("equal_in on the worked equalities") {
  AT lhs = parse_arrow("sigma_or(p,p) . dist(p,~p,p) . delta_and(p,p)");
  Verdict v = equal_in(lhs, AT::id(F("p")), Theory::PNNeg);
  CHECK(v.equal);
  CHECK(v.reason == Verdict::Reason::Equal);

  AT roundtrip = testdata::golden_term("roundtrip.pnc", "roundtrip");
  CHECK(equal_in(roundtrip, AT::id(F("p /\\ q")), Theory::PN).equal);

  AT ml = parse_arrow("mix(q,p) . c_and(p,q)");
  AT mr = parse_arrow("c_or(q,p) . mix(p,q)");
  CHECK(equal_in(ml, mr, Theory::MDS).equal);
}

TEST_CASE("the negative control: c_and(p,p) is not the identity") {
  Verdict v = equal_in(AT::c_and(F("p"), F("p")), AT::id(F("p /\\ p")),
                       Theory::DS);
  CHECK_FALSE(v.equal);
  CHECK(v.reason == Verdict::Reason::GraphMismatch);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == Block{src_ep(0), tgt_ep(1)});
}

TEST_CASE("type mismatches are reported before graphs") {
  Verdict v = equal_in(AT::id(F("p")), AT::id(F("q")), Theory::DS);
  CHECK_FALSE(v.equal);
  CHECK(v.reason == Verdict::Reason::TypeMismatch);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("theory violations surface as errors, not verdicts") {
  CHECK_THROWS_AS(
      equal_in(AT::mix(F("p"), F("q")), AT::mix(F("p"), F("q")), Theory::DS),
      TheoryError);
}

TEST_CASE("equal_in is an equivalence relation") {
  testgen::Gen gen(Theory::PNNeg, 70);
  for (int i = 0; i < 40; ++i) {
    AT f = gen.rterm(7);
    CHECK(equal_in(f, f, Theory::PNNeg).equal);  // reflexive
    AT g = gen.random_walk(f, 6);                // equal by construction
    AT h = gen.random_walk(g, 6);
    CHECK(equal_in(f, g, Theory::PNNeg).equal ==
          equal_in(g, f, Theory::PNNeg).equal);  // symmetric
    if (equal_in(f, g, Theory::PNNeg).equal &&
        equal_in(g, h, Theory::PNNeg).equal)
      CHECK(equal_in(f, h, Theory::PNNeg).equal);  // transitive
  }
}

TEST_CASE("equal_in is a congruence for composition and tensor") {
  testgen::Gen gen(Theory::MPNNeg, 71);
  for (int i = 0; i < 40; ++i) {
    AT g = gen.rterm(5);
    AT f = gen.rterm_from(type_of(g).target, 5);
    AT gp = gen.random_walk(g, 5);
    AT fp = gen.random_walk(f, 5);
    REQUIRE(equal_in(f, fp, Theory::MPNNeg).equal);
    REQUIRE(equal_in(g, gp, Theory::MPNNeg).equal);
    CHECK(equal_in(AT::comp(f, g), AT::comp(fp, gp), Theory::MPNNeg).equal);
    CHECK(equal_in(AT::tensor_and(f, g), AT::tensor_and(fp, gp),
                   Theory::MPNNeg).equal);
    CHECK(equal_in(AT::tensor_or(f, g), AT::tensor_or(fp, gp),
                   Theory::MPNNeg).equal);
  }
}

TEST_CASE("conservativity: DS verdicts survive in MDS and PN¬") {
  testgen::Gen gen(Theory::DS, 72);
  for (int i = 0; i < 60; ++i) {
    AT f = gen.rterm(6);
    AT g = gen.coin() ? gen.random_walk(f, 4) : gen.rterm_from(type_of(f).source, 6);
    if (!(type_of(g).target == type_of(f).target)) continue;
    bool ds = equal_in(f, g, Theory::DS).equal;
    CHECK(equal_in(f, g, Theory::MDS).equal == ds);
    CHECK(equal_in(f, g, Theory::PNNeg).equal == ds);
  }
}

TEST_CASE("commutes") {
  AT f = AT::dist(F("p"), F("q"), F("r"));
  AT g = AT::c_and(F("p"), F("q \\/ r"));
  // square with both paths g then f
  Verdict v = commutes({g, AT::comp(f, AT::c_and(F("q \\/ r"), F("p")))},
                       {g, AT::comp(f, AT::c_and(F("q \\/ r"), F("p")))},
                       Theory::DS);
  CHECK(v.equal);

  // the (Σ∨Δ∧) triangle as a three-edge path against the identity edge
  Verdict t = commutes({AT::delta_and(F("p"), F("p")),
                        AT::dist(F("p"), F("~p"), F("p")),
                        AT::sigma_or(F("p"), F("p"))},
                       {AT::id(F("p"))}, Theory::PNNeg);
  CHECK(t.equal);

  CHECK_THROWS_AS(commutes({AT::id(F("p"))}, {AT::id(F("q"))}, Theory::DS),
                  TypeError);
  CHECK_THROWS_AS(commutes({AT::id(F("p")), AT::id(F("q"))},
                           {AT::id(F("p"))}, Theory::DS),
                  TypeError);
  CHECK_THROWS_AS(commutes({}, {AT::id(F("p"))}, Theory::DS),
                  std::invalid_argument);
}
