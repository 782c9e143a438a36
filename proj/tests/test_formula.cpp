/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include <random>

#include "pnet/formula.hpp"
#include "support/gen.hpp"

using namespace pnet;

namespace {

Formula F(const char* s) { return parse_formula(s); }

// Independent nnf oracle: single-step negation rewrites applied to a
// fixpoint, no polarity bookkeeping shared with the implementation.
Formula nnf_step(const Formula& a, bool& changed) {
  switch (a.kind()) {
    case Formula::Kind::Atom: return a;
    case Formula::Kind::Neg: {
      Formula b = a.sub();
      switch (b.kind()) {
        case Formula::Kind::Neg: changed = true; return b.sub();
        case Formula::Kind::Conj:
          changed = true;
          return Formula::disj(Formula::neg(b.left()),
                               Formula::neg(b.right()));
        case Formula::Kind::Disj:
          changed = true;
          return Formula::conj(Formula::neg(b.left()),
                               Formula::neg(b.right()));
        default: return a;
      }
    }
    case Formula::Kind::Conj:
      return Formula::conj(nnf_step(a.left(), changed),
                           nnf_step(a.right(), changed));
    default:
      return Formula::disj(nnf_step(a.left(), changed),
                           nnf_step(a.right(), changed));
  }
}

Formula nnf_oracle(Formula a) {
  for (;;) {
    bool changed = false;
    a = nnf_step(a, changed);
    if (!changed) return a;
  }
}

}  // namespace

TEST_CASE("letter_count counts atom occurrences") {
  CHECK(letter_count(F("p \\/ q")) == 2);
  CHECK(letter_count(F("p")) == 1);
  CHECK(letter_count(F("(q \\/ ~r) \\/ q")) == 3);
  CHECK(letter_count(F("~~(p /\\ p)")) == 2);
}

TEST_CASE("letter_at reads occurrences left to right with negation parity") {
  auto occ = letter_at(F("(q \\/ ~r) \\/ q"), 1);
  CHECK(occ.letter == "r");
  CHECK(occ.negated);
  occ = letter_at(F("p"), 0);
  CHECK(occ.letter == "p");
  CHECK_FALSE(occ.negated);
  occ = letter_at(F("~(p /\\ q)"), 1);
  CHECK(occ.letter == "q");
  CHECK(occ.negated);
  CHECK(letter_at(F("~~p"), 0).negated == false);  // even nesting
  CHECK_THROWS_AS(letter_at(F("p /\\ q"), 2), std::out_of_range);
}

TEST_CASE("nnf clauses") {
  CHECK(nnf(F("~(p /\\ q)")) == F("~p \\/ ~q"));
  CHECK(nnf(F("~~p")) == F("p"));
  CHECK(nnf(F("~(p \\/ q)")) == F("~p /\\ ~q"));
  // Cross-checked against the rewrite-to-fixpoint oracle.
  Formula a = F("~(~p \\/ (q /\\ r))");
  CHECK(nnf(a) == F("p /\\ (~q \\/ ~r)"));
  CHECK(nnf(a) == nnf_oracle(a));
}

TEST_CASE("nnf agrees with the oracle and preserves occurrences") {
  testgen::Gen gen(Theory::PNNeg, 2024);
  for (int i = 0; i < 300; ++i) {
    Formula a = gen.rformula(4);
    Formula n = nnf(a);
    CHECK(n == nnf_oracle(a));
    REQUIRE(letter_count(n) == letter_count(a));
    for (std::size_t k = 0; k < letter_count(a); ++k)
      CHECK(letter_at(n, k).letter == letter_at(a, k).letter);
    CHECK(check_language(n, Theory::PN));
    CHECK(nnf(n) == n);  // idempotent on the ~p-language
  }
}

TEST_CASE("check_language per theory") {
  CHECK_FALSE(check_language(F("~(p /\\ q)"), Theory::DS));
  CHECK(check_language(F("~p /\\ q"), Theory::PN));
  CHECK_FALSE(check_language(F("~~p"), Theory::PN));
  CHECK(check_language(F("~(p /\\ q)"), Theory::PNNeg));
  CHECK(check_language(F("p /\\ q"), Theory::MDS));
}

TEST_CASE("language monotonicity DS ⊆ PN ⊆ PN¬") {
  testgen::Gen gen(Theory::PNNeg, 7);
  for (int i = 0; i < 200; ++i) {
    Formula a = gen.rformula(4);
    if (check_language(a, Theory::DS)) CHECK(check_language(a, Theory::PN));
    if (check_language(a, Theory::PN)) CHECK(check_language(a, Theory::PNNeg));
  }
}

TEST_CASE("formula text round-trips") {
  for (const char* s : {"p", "~p", "p /\\ (q \\/ r)", "~(p /\\ q) \\/ r",
                        "~~p", "(p /\\ q) /\\ (p /\\ q)",
                        "letter42 \\/ ~another_letter"}) {
    Formula a = parse_formula(s);
    CHECK(print_formula(a) == s);
    CHECK(parse_formula(print_formula(a)) == a);
  }
  testgen::Gen gen(Theory::PNNeg, 11);
  for (int i = 0; i < 200; ++i) {
    Formula a = gen.rformula(4);
    CHECK(parse_formula(print_formula(a)) == a);
  }
}

TEST_CASE("hostile parser input fails cleanly") {
  std::string deep(100000, '(');
  CHECK_THROWS_AS(parse_formula(deep + "p"), ParseError);
  CHECK_THROWS_AS(parse_formula(std::string(100000, '~') + "p"), ParseError);
  CHECK_THROWS_AS(parse_arrow(deep + "id(p)"), ParseError);

  // random byte soup either parses or throws ParseError, never crashes
  std::mt19937_64 rng(13);
  const std::string alphabet = "pq~/\\() .,;:=_ab";
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int k = 0; k < 40; ++k)
      s += alphabet[rng() % alphabet.size()];
    try {
      (void)parse_formula(s);
      (void)parse_arrow(s);
    } catch (const ParseError&) {
    }
  }
}

TEST_CASE("formula parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("p /\\ q \\/ r"), ParseError);  // no precedence
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("p ~"), ParseError);
  try {
    parse_formula("p /\\ ");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col > 1);
    CHECK_FALSE(e.expected.empty());
  }
}
