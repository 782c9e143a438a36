/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pnet/arrows.hpp"
#include "pnet/formula.hpp"

namespace pnet {

// ---------------------------------------------------------------------------
// Patterns: formulas and arrow terms with metavariables. Equation schemata
// are data, so the catalog can be printed, counted and checked clause by
// clause.
// ---------------------------------------------------------------------------

class FPat {
 public:
  enum class Kind { Var, Neg, Conj, Disj };

  static FPat var(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = std::move(name);
    return FPat(std::move(n));
  }
  static FPat neg(FPat a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->a = a.n_;
    return FPat(std::move(n));
  }
  static FPat conj(FPat a, FPat b) { return binary(Kind::Conj, a, b); }
  static FPat disj(FPat a, FPat b) { return binary(Kind::Disj, a, b); }
  static FPat binary(Conn c, FPat a, FPat b) {
    return c == Conn::And ? conj(a, b) : disj(a, b);
  }

  Kind kind() const { return n_->kind; }
  const std::string& name() const { return n_->name; }
  FPat sub() const { return FPat(n_->a); }
  FPat left() const { return FPat(n_->a); }
  FPat right() const { return FPat(n_->b); }

  friend bool operator==(const FPat& x, const FPat& y) {
    if (x.n_ == y.n_) return true;
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
      case Kind::Var: return x.name() == y.name();
      case Kind::Neg: return x.sub() == y.sub();
      default: return x.left() == y.left() && x.right() == y.right();
    }
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;
  };
  static FPat binary(Kind k, FPat a, FPat b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = a.n_;
    n->b = b.n_;
    return FPat(std::move(n));
  }
  explicit FPat(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Arrow pattern: an arrow term over formula patterns, plus arrow
/// metavariables.
class APat {
 public:
  static APat var(std::string name) {
    auto n = std::make_shared<Node>();
    n->is_var = true;
    n->name = std::move(name);
    return APat(std::move(n));
  }
  static APat gen(ArrowTerm::Kind k, std::vector<FPat> idx,
                  Conn c = Conn::And) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->conn = c;
    n->idx = std::move(idx);
    return APat(std::move(n));
  }
  static APat comp(APat f, APat g) {
    auto n = std::make_shared<Node>();
    n->kind = ArrowTerm::Kind::Comp;
    n->f = std::make_shared<APat>(std::move(f));
    n->g = std::make_shared<APat>(std::move(g));
    return APat(std::move(n));
  }
  static APat tensor(Conn c, APat f, APat g) {
    auto n = std::make_shared<Node>();
    n->kind = ArrowTerm::Kind::Tensor;
    n->conn = c;
    n->f = std::make_shared<APat>(std::move(f));
    n->g = std::make_shared<APat>(std::move(g));
    return APat(std::move(n));
  }

  bool is_var() const { return n_->is_var; }
  const std::string& name() const { return n_->name; }
  ArrowTerm::Kind kind() const { return n_->kind; }
  Conn conn() const { return n_->conn; }
  const std::vector<FPat>& indices() const { return n_->idx; }
  const APat& fst() const { return *n_->f; }
  const APat& snd() const { return *n_->g; }
  bool is_node() const {
    return !is_var() && (kind() == ArrowTerm::Kind::Comp ||
                         kind() == ArrowTerm::Kind::Tensor);
  }

 private:
  struct Node {
    bool is_var = false;
    std::string name;
    ArrowTerm::Kind kind = ArrowTerm::Kind::Id;
    Conn conn = Conn::And;
    std::vector<FPat> idx;
    std::shared_ptr<const APat> f, g;
  };
  explicit APat(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Assignment of formulas to formula metavariables and arrow terms to arrow
/// metavariables.
struct Substitution {
  std::map<std::string, Formula> formulas;
  std::map<std::string, ArrowTerm> arrows;
};

/// An arrow metavariable together with its declared type, e.g. f : A ⊢ D.
struct ArrowVarDecl {
  std::string name;
  FPat src, tgt;
};

/// One equation of a theory, under its standard name. `letter_vars` lists the
/// crown metavariables that must be instantiated with letters (nonempty for
/// the PN and MPN catalogs and the stem-increasing equations).
struct EquationSchema {
  std::string name;
  std::string variant;  // disambiguates names that cover two equations
  APat lhs, rhs;
  std::vector<ArrowVarDecl> arrow_vars;
  std::vector<std::string> letter_vars;
  std::vector<Theory> theories;
};

// ---------------------------------------------------------------------------
// Substitution, matching, and symbolic typing of patterns.
// ---------------------------------------------------------------------------

inline Formula subst_formula(const FPat& p, const Substitution& s) {
  switch (p.kind()) {
    case FPat::Kind::Var: {
      auto it = s.formulas.find(p.name());
      if (it == s.formulas.end())
        throw std::invalid_argument("incomplete substitution: formula variable " +
                                    p.name() + " is unbound");
      return it->second;
    }
    case FPat::Kind::Neg: return Formula::neg(subst_formula(p.sub(), s));
    case FPat::Kind::Conj:
      return Formula::conj(subst_formula(p.left(), s),
                           subst_formula(p.right(), s));
    default:
      return Formula::disj(subst_formula(p.left(), s),
                           subst_formula(p.right(), s));
  }
}

inline ArrowTerm subst_arrow(const APat& p, const Substitution& s) {
  if (p.is_var()) {
    auto it = s.arrows.find(p.name());
    if (it == s.arrows.end())
      throw std::invalid_argument("incomplete substitution: arrow variable " +
                                  p.name() + " is unbound");
    return it->second;
  }
  using K = ArrowTerm::Kind;
  if (p.kind() == K::Comp)
    return ArrowTerm::comp(subst_arrow(p.fst(), s), subst_arrow(p.snd(), s));
  if (p.kind() == K::Tensor)
    return ArrowTerm::tensor(p.conn(), subst_arrow(p.fst(), s),
                             subst_arrow(p.snd(), s));
  std::vector<Formula> idx;
  idx.reserve(p.indices().size());
  for (const FPat& fp : p.indices()) idx.push_back(subst_formula(fp, s));
  const detail::GenEntry* e = detail::find_generator(p.kind(), p.conn());
  return detail::leaf_from_entry(*e, std::move(idx));
}

/// Bind-or-check structural match of a formula pattern against a formula.
inline bool match_formula(const FPat& p, const Formula& a, Substitution& s) {
  switch (p.kind()) {
    case FPat::Kind::Var: {
      auto [it, fresh] = s.formulas.try_emplace(p.name(), a);
      return fresh ? true : it->second == a;
    }
    case FPat::Kind::Neg:
      return a.is_neg() && match_formula(p.sub(), a.sub(), s);
    case FPat::Kind::Conj:
      return a.kind() == Formula::Kind::Conj &&
             match_formula(p.left(), a.left(), s) &&
             match_formula(p.right(), a.right(), s);
    default:
      return a.kind() == Formula::Kind::Disj &&
             match_formula(p.left(), a.left(), s) &&
             match_formula(p.right(), a.right(), s);
  }
}

inline bool match_arrow(const APat& p, const ArrowTerm& f, Substitution& s) {
  if (p.is_var()) {
    auto [it, fresh] = s.arrows.try_emplace(p.name(), f);
    return fresh ? true : it->second == f;
  }
  if (p.kind() != f.kind()) return false;
  using K = ArrowTerm::Kind;
  if (p.kind() == K::Comp)
    return match_arrow(p.fst(), f.fst(), s) && match_arrow(p.snd(), f.snd(), s);
  if (p.kind() == K::Tensor)
    return p.conn() == f.conn() && match_arrow(p.fst(), f.fst(), s) &&
           match_arrow(p.snd(), f.snd(), s);
  if ((p.kind() == K::AssocR || p.kind() == K::AssocL) &&
      p.conn() != f.conn())
    return false;
  if (p.indices().size() != f.indices().size()) return false;
  for (std::size_t i = 0; i < p.indices().size(); ++i)
    if (!match_formula(p.indices()[i], f.indices()[i], s)) return false;
  return true;
}

namespace detail {

// Symbolic type of an arrow pattern; composition interfaces must agree
// syntactically, which every catalogued schema satisfies.
inline std::pair<FPat, FPat> ptype_of(
    const APat& p, const std::vector<ArrowVarDecl>& avars) {
  using K = ArrowTerm::Kind;
  if (p.is_var()) {
    for (const ArrowVarDecl& d : avars)
      if (d.name == p.name()) return {d.src, d.tgt};
    throw std::logic_error("undeclared arrow variable " + p.name());
  }
  const auto& ix = p.indices();
  auto N = [](const FPat& a) { return FPat::neg(a); };
  switch (p.kind()) {
    case K::Id: return {ix[0], ix[0]};
    case K::AssocR:
      return {FPat::binary(p.conn(), ix[0], FPat::binary(p.conn(), ix[1], ix[2])),
              FPat::binary(p.conn(), FPat::binary(p.conn(), ix[0], ix[1]), ix[2])};
    case K::AssocL:
      return {FPat::binary(p.conn(), FPat::binary(p.conn(), ix[0], ix[1]), ix[2]),
              FPat::binary(p.conn(), ix[0], FPat::binary(p.conn(), ix[1], ix[2]))};
    case K::SymConj:
      return {FPat::conj(ix[0], ix[1]), FPat::conj(ix[1], ix[0])};
    case K::SymDisj:
      return {FPat::disj(ix[1], ix[0]), FPat::disj(ix[0], ix[1])};
    case K::Dist:
      return {FPat::conj(ix[0], FPat::disj(ix[1], ix[2])),
              FPat::disj(FPat::conj(ix[0], ix[1]), ix[2])};
    case K::DistR:
      return {FPat::conj(FPat::disj(ix[0], ix[1]), ix[2]),
              FPat::disj(ix[0], FPat::conj(ix[1], ix[2]))};
    case K::DeltaConj:
      return {ix[1], FPat::conj(ix[1], FPat::disj(N(ix[0]), ix[0]))};
    case K::SigmaDisj:
      return {FPat::disj(FPat::conj(ix[0], N(ix[0])), ix[1]), ix[1]};
    case K::SigmaConj:
      return {ix[1], FPat::conj(FPat::disj(N(ix[0]), ix[0]), ix[1])};
    case K::DeltaDisj:
      return {FPat::disj(ix[1], FPat::conj(ix[0], N(ix[0]))), ix[1]};
    case K::DeltaConjP:
      return {ix[1], FPat::conj(ix[1], FPat::disj(ix[0], N(ix[0])))};
    case K::SigmaDisjP:
      return {FPat::disj(FPat::conj(N(ix[0]), ix[0]), ix[1]), ix[1]};
    case K::SigmaConjP:
      return {ix[1], FPat::conj(FPat::disj(ix[0], N(ix[0])), ix[1])};
    case K::DeltaDisjP:
      return {FPat::disj(ix[1], FPat::conj(N(ix[0]), ix[0])), ix[1]};
    case K::NNegElim: return {N(N(ix[0])), ix[0]};
    case K::NNegIntro: return {ix[0], N(N(ix[0]))};
    case K::DeMorganConjR:
      return {N(FPat::conj(ix[0], ix[1])), FPat::disj(N(ix[0]), N(ix[1]))};
    case K::DeMorganConjL:
      return {FPat::disj(N(ix[0]), N(ix[1])), N(FPat::conj(ix[0], ix[1]))};
    case K::DeMorganDisjR:
      return {N(FPat::disj(ix[0], ix[1])), FPat::conj(N(ix[0]), N(ix[1]))};
    case K::DeMorganDisjL:
      return {FPat::conj(N(ix[0]), N(ix[1])), N(FPat::disj(ix[0], ix[1]))};
    case K::Mix:
      return {FPat::conj(ix[0], ix[1]), FPat::disj(ix[0], ix[1])};
    case K::Comp: {
      auto tf = ptype_of(p.fst(), avars);
      auto tg = ptype_of(p.snd(), avars);
      if (!(tg.second == tf.first))
        throw std::logic_error("schema composition interfaces disagree");
      return {tg.first, tf.second};
    }
    case K::Tensor: {
      auto tf = ptype_of(p.fst(), avars);
      auto tg = ptype_of(p.snd(), avars);
      return {FPat::binary(p.conn(), tf.first, tg.first),
              FPat::binary(p.conn(), tf.second, tg.second)};
    }
  }
  throw std::logic_error("ptype_of: unreachable");
}

}  // namespace detail

/// Both sides of a schema must have the same symbolic type under any
/// substitution; run once when a catalog is built.
inline void check_schema(const EquationSchema& s) {
  auto tl = detail::ptype_of(s.lhs, s.arrow_vars);
  auto tr = detail::ptype_of(s.rhs, s.arrow_vars);
  if (!(tl.first == tr.first && tl.second == tr.second))
    throw std::logic_error("schema " + s.name + s.variant +
                           " has differently typed sides");
}

/// Closed, well-typed lhs/rhs of identical type from a covering
/// substitution; throws on missing metavariables, typing side-condition
/// violations, or a non-letter in a letter-restricted position.
inline std::pair<ArrowTerm, ArrowTerm> instantiate(const EquationSchema& e,
                                                   const Substitution& sub) {
  Substitution s = sub;
  for (const ArrowVarDecl& d : e.arrow_vars) {
    auto it = s.arrows.find(d.name);
    if (it == s.arrows.end())
      throw std::invalid_argument("incomplete substitution: arrow variable " +
                                  d.name + " is unbound");
    ArrowType ty = type_of(it->second);
    if (!match_formula(d.src, ty.source, s) ||
        !match_formula(d.tgt, ty.target, s))
      throw std::invalid_argument("arrow variable " + d.name +
                                  " violates its typing side condition");
  }
  for (const std::string& lv : e.letter_vars) {
    auto it = s.formulas.find(lv);
    if (it != s.formulas.end() && !it->second.is_atom())
      throw std::invalid_argument("metavariable " + lv +
                                  " must be a letter in this schema");
  }
  return {subst_arrow(e.lhs, s), subst_arrow(e.rhs, s)};
}

// ---------------------------------------------------------------------------
// The catalogs.
// ---------------------------------------------------------------------------

namespace detail {

struct SchemaBuilder {
  std::vector<EquationSchema> out;
  std::vector<Theory> theories;
  std::vector<std::string> letter_vars;

  void add(std::string name, APat lhs, APat rhs,
           std::vector<ArrowVarDecl> avars = {}, std::string variant = "") {
    EquationSchema s{std::move(name), std::move(variant), std::move(lhs),
                     std::move(rhs),  std::move(avars),   letter_vars,
                     theories};
    check_schema(s);
    out.push_back(std::move(s));
  }
};

inline APat pid(FPat a) { return APat::gen(ArrowTerm::Kind::Id, {a}); }
inline APat pb(Conn c, FPat a, FPat b, FPat d) {
  return APat::gen(ArrowTerm::Kind::AssocR, {a, b, d}, c);
}
inline APat pbi(Conn c, FPat a, FPat b, FPat d) {
  return APat::gen(ArrowTerm::Kind::AssocL, {a, b, d}, c);
}
inline APat pc_and(FPat a, FPat b) {
  return APat::gen(ArrowTerm::Kind::SymConj, {a, b});
}
inline APat pc_or(FPat a, FPat b) {
  return APat::gen(ArrowTerm::Kind::SymDisj, {a, b});
}
inline APat pdist(FPat a, FPat b, FPat c) {
  return APat::gen(ArrowTerm::Kind::Dist, {a, b, c});
}
inline APat pdistR(FPat c, FPat b, FPat a) {
  return APat::gen(ArrowTerm::Kind::DistR, {c, b, a});
}
inline APat pdelta(FPat b, FPat a) {
  return APat::gen(ArrowTerm::Kind::DeltaConj, {b, a});
}
inline APat psigma(FPat b, FPat a) {
  return APat::gen(ArrowTerm::Kind::SigmaDisj, {b, a});
}
inline APat psigma_and(FPat b, FPat a) {
  return APat::gen(ArrowTerm::Kind::SigmaConj, {b, a});
}
inline APat pdelta_or(FPat b, FPat a) {
  return APat::gen(ArrowTerm::Kind::DeltaDisj, {b, a});
}
inline APat pdelta_p(FPat b, FPat a) {
  return APat::gen(ArrowTerm::Kind::DeltaConjP, {b, a});
}
inline APat psigma_p(FPat b, FPat a) {
  return APat::gen(ArrowTerm::Kind::SigmaDisjP, {b, a});
}
inline APat psigma_and_p(FPat b, FPat a) {
  return APat::gen(ArrowTerm::Kind::SigmaConjP, {b, a});
}
inline APat pdelta_or_p(FPat b, FPat a) {
  return APat::gen(ArrowTerm::Kind::DeltaDisjP, {b, a});
}
inline APat pnn_elim(FPat a) { return APat::gen(ArrowTerm::Kind::NNegElim, {a}); }
inline APat pnn_intro(FPat a) {
  return APat::gen(ArrowTerm::Kind::NNegIntro, {a});
}
inline APat pdm_and(FPat a, FPat b) {
  return APat::gen(ArrowTerm::Kind::DeMorganConjR, {a, b});
}
inline APat pdm_and_inv(FPat a, FPat b) {
  return APat::gen(ArrowTerm::Kind::DeMorganConjL, {a, b});
}
inline APat pdm_or(FPat a, FPat b) {
  return APat::gen(ArrowTerm::Kind::DeMorganDisjR, {a, b});
}
inline APat pdm_or_inv(FPat a, FPat b) {
  return APat::gen(ArrowTerm::Kind::DeMorganDisjL, {a, b});
}
inline APat pmix(FPat a, FPat b) {
  return APat::gen(ArrowTerm::Kind::Mix, {a, b});
}
inline APat po(APat f, APat g) { return APat::comp(std::move(f), std::move(g)); }
inline APat po(APat f, APat g, APat h) {
  return po(std::move(f), po(std::move(g), std::move(h)));
}
inline APat po(APat f, APat g, APat h, APat k) {
  return po(std::move(f), po(std::move(g), std::move(h), std::move(k)));
}
inline APat po(APat f, APat g, APat h, APat k, APat l) {
  return po(std::move(f), po(std::move(g), std::move(h), std::move(k), std::move(l)));
}
inline APat pt_and(APat f, APat g) {
  return APat::tensor(Conn::And, std::move(f), std::move(g));
}
inline APat pt_or(APat f, APat g) {
  return APat::tensor(Conn::Or, std::move(f), std::move(g));
}

inline void add_ds_axioms(SchemaBuilder& sb) {
  FPat A = FPat::var("A"), B = FPat::var("B"), C = FPat::var("C"),
       D = FPat::var("D"), E = FPat::var("E"), F = FPat::var("F");
  APat f = APat::var("f"), g = APat::var("g"), h = APat::var("h"),
       k = APat::var("k");

  sb.add("(cat 1)", po(f, pid(A)), f, {{"f", A, B}}, " f∘1");
  sb.add("(cat 1)", po(pid(B), f), f, {{"f", A, B}}, " 1∘f");
  sb.add("(cat 2)", po(h, po(g, f)), po(po(h, g), f),
         {{"f", A, B}, {"g", B, C}, {"h", C, D}});
  sb.add("(∧ 1)", pt_and(pid(A), pid(B)), pid(FPat::conj(A, B)));
  sb.add("(∨ 1)", pt_or(pid(A), pid(B)), pid(FPat::disj(A, B)));
  sb.add("(∧ 2)", pt_and(po(g, f), po(k, h)), po(pt_and(g, k), pt_and(f, h)),
         {{"f", A, B}, {"g", B, C}, {"h", D, E}, {"k", E, F}});
  sb.add("(∨ 2)", pt_or(po(g, f), po(k, h)), po(pt_or(g, k), pt_or(f, h)),
         {{"f", A, B}, {"g", B, C}, {"h", D, E}, {"k", E, F}});
  sb.add("(b∧→ nat)", po(pt_and(pt_and(f, g), h), pb(Conn::And, A, B, C)),
         po(pb(Conn::And, D, E, F), pt_and(f, pt_and(g, h))),
         {{"f", A, D}, {"g", B, E}, {"h", C, F}});
  sb.add("(b∨→ nat)", po(pt_or(pt_or(f, g), h), pb(Conn::Or, A, B, C)),
         po(pb(Conn::Or, D, E, F), pt_or(f, pt_or(g, h))),
         {{"f", A, D}, {"g", B, E}, {"h", C, F}});
  sb.add("(c∧ nat)", po(pt_and(g, f), pc_and(A, B)),
         po(pc_and(D, E), pt_and(f, g)), {{"f", A, D}, {"g", B, E}});
  sb.add("(c∨ nat)", po(pt_or(g, f), pc_or(B, A)),
         po(pc_or(E, D), pt_or(f, g)), {{"f", A, D}, {"g", B, E}});
  sb.add("(d nat)", po(pt_or(pt_and(f, g), h), pdist(A, B, C)),
         po(pdist(D, E, F), pt_and(f, pt_or(g, h))),
         {{"f", A, D}, {"g", B, E}, {"h", C, F}});
  sb.add("(b∧b∧)", po(pbi(Conn::And, A, B, C), pb(Conn::And, A, B, C)),
         pid(FPat::conj(A, FPat::conj(B, C))), {}, " ←∘→");
  sb.add("(b∧b∧)", po(pb(Conn::And, A, B, C), pbi(Conn::And, A, B, C)),
         pid(FPat::conj(FPat::conj(A, B), C)), {}, " →∘←");
  sb.add("(b∨b∨)", po(pbi(Conn::Or, A, B, C), pb(Conn::Or, A, B, C)),
         pid(FPat::disj(A, FPat::disj(B, C))), {}, " ←∘→");
  sb.add("(b∨b∨)", po(pb(Conn::Or, A, B, C), pbi(Conn::Or, A, B, C)),
         pid(FPat::disj(FPat::disj(A, B), C)), {}, " →∘←");
  sb.add("(b∧5)",
         po(pbi(Conn::And, A, B, FPat::conj(C, D)),
            pbi(Conn::And, FPat::conj(A, B), C, D)),
         po(pt_and(pid(A), pbi(Conn::And, B, C, D)),
            pbi(Conn::And, A, FPat::conj(B, C), D),
            pt_and(pbi(Conn::And, A, B, C), pid(D))));
  sb.add("(b∨5)",
         po(pbi(Conn::Or, A, B, FPat::disj(C, D)),
            pbi(Conn::Or, FPat::disj(A, B), C, D)),
         po(pt_or(pid(A), pbi(Conn::Or, B, C, D)),
            pbi(Conn::Or, A, FPat::disj(B, C), D),
            pt_or(pbi(Conn::Or, A, B, C), pid(D))));
  sb.add("(c∧c∧)", po(pc_and(B, A), pc_and(A, B)), pid(FPat::conj(A, B)));
  sb.add("(c∨c∨)", po(pc_or(A, B), pc_or(B, A)), pid(FPat::disj(A, B)));
  sb.add("(b∧c∧)",
         po(pt_and(pid(B), pc_and(C, A)), pbi(Conn::And, B, C, A),
            pc_and(A, FPat::conj(B, C)), pbi(Conn::And, A, B, C),
            pt_and(pc_and(B, A), pid(C))),
         pbi(Conn::And, B, A, C));
  sb.add("(b∨c∨)",
         po(pt_or(pid(B), pc_or(A, C)), pbi(Conn::Or, B, C, A),
            pc_or(FPat::disj(B, C), A), pbi(Conn::Or, A, B, C),
            pt_or(pc_or(A, B), pid(C))),
         pbi(Conn::Or, B, A, C));
  sb.add("(d∧)",
         po(pt_or(pbi(Conn::And, A, B, C), pid(D)),
            pdist(FPat::conj(A, B), C, D)),
         po(pdist(A, FPat::conj(B, C), D), pt_and(pid(A), pdist(B, C, D)),
            pbi(Conn::And, A, B, FPat::disj(C, D))));
  sb.add("(d∨)",
         po(pdist(D, C, FPat::disj(B, A)),
            pt_and(pid(D), pbi(Conn::Or, C, B, A))),
         po(pbi(Conn::Or, FPat::conj(D, C), B, A),
            pt_or(pdist(D, C, B), pid(A)), pdist(D, FPat::disj(C, B), A)));
  sb.add("(db∧)",
         po(pdistR(FPat::conj(A, B), C, D), pt_and(pdist(A, B, C), pid(D))),
         po(pdist(A, B, FPat::conj(C, D)), pt_and(pid(A), pdistR(B, C, D)),
            pbi(Conn::And, A, FPat::disj(B, C), D)));
  sb.add("(db∨)",
         po(pt_or(pid(D), pdist(C, B, A)), pdistR(D, C, FPat::disj(B, A))),
         po(pbi(Conn::Or, D, FPat::conj(C, B), A),
            pt_or(pdistR(D, C, B), pid(A)), pdist(FPat::disj(D, C), B, A)));
}

// The PN equations of the delta/sigma group. `crown_letters` restricts each
// schema's crown metavariable to letters (the PN and MPN catalogs).
inline void add_pn_axioms(SchemaBuilder& sb, bool crown_letters) {
  FPat A = FPat::var("A"), B = FPat::var("B"), C = FPat::var("C"),
       D = FPat::var("D");
  APat f = APat::var("f");
  auto crowned = [&](const char* v, auto&& fn) {
    sb.letter_vars = crown_letters ? std::vector<std::string>{v}
                                   : std::vector<std::string>{};
    fn();
    sb.letter_vars.clear();
  };
  crowned("B", [&] {
    sb.add("(Δ∧ nat)",
           po(pt_and(f, pid(FPat::disj(FPat::neg(B), B))), pdelta(B, A)),
           po(pdelta(B, D), f), {{"f", A, D}});
    sb.add("(Σ∨ nat)", po(f, psigma(B, A)),
           po(psigma(B, D), pt_or(pid(FPat::conj(B, FPat::neg(B))), f)),
           {{"f", A, D}});
  });
  crowned("C", [&] {
    sb.add("(b∧Δ∧)",
           po(pbi(Conn::And, A, B, FPat::disj(FPat::neg(C), C)),
              pdelta(C, FPat::conj(A, B))),
           pt_and(pid(A), pdelta(C, B)));
    sb.add("(b∨Σ∨)",
           po(psigma(C, FPat::disj(B, A)),
              pbi(Conn::Or, FPat::conj(C, FPat::neg(C)), B, A)),
           pt_or(psigma(C, B), pid(A)));
  });
  crowned("A", [&] {
    sb.add("(dΣ∧)",
           po(pdist(FPat::disj(FPat::neg(A), A), B, C),
              psigma_and(A, FPat::disj(B, C))),
           pt_or(psigma_and(A, B), pid(C)));
    sb.add("(dΔ∨)",
           po(pdelta_or(A, FPat::conj(C, B)),
              pdist(C, B, FPat::conj(A, FPat::neg(A)))),
           pt_and(pid(C), pdelta_or(A, B)));
    sb.add("(Σ∨Δ∧)",
           po(psigma(A, A), pdist(A, FPat::neg(A), A), pdelta(A, A)), pid(A));
    sb.add("(Σ∨′Δ∧′)",
           po(psigma_p(A, FPat::neg(A)),
              pdist(FPat::neg(A), A, FPat::neg(A)),
              pdelta_p(A, FPat::neg(A))),
           pid(FPat::neg(A)));
  });
}

inline void add_mix_axioms(SchemaBuilder& sb) {
  FPat A = FPat::var("A"), B = FPat::var("B"), C = FPat::var("C"),
       D = FPat::var("D"), E = FPat::var("E");
  APat f = APat::var("f"), g = APat::var("g");
  sb.add("(m nat)", po(pt_or(f, g), pmix(A, B)), po(pmix(D, E), pt_and(f, g)),
         {{"f", A, D}, {"g", B, E}});
  sb.add("(b∧m)", po(pmix(FPat::conj(A, B), C), pb(Conn::And, A, B, C)),
         po(pdist(A, B, C), pt_and(pid(A), pmix(B, C))));
  sb.add("(b∨m)", po(pb(Conn::Or, C, B, A), pmix(C, FPat::disj(B, A))),
         po(pt_or(pmix(C, B), pid(A)), pdist(C, B, A)));
  sb.add("(cm)", po(pmix(B, A), pc_and(A, B)), po(pc_or(B, A), pmix(A, B)));
}

}  // namespace detail

/// Every defining equation of theory t, as pattern data with standard names.
inline const std::vector<EquationSchema>& axiom_catalog(Theory t) {
  static std::map<Theory, std::vector<EquationSchema>> cache = [] {
    std::map<Theory, std::vector<EquationSchema>> m;
    for (Theory th : all_theories()) {
      detail::SchemaBuilder sb;
      sb.theories = {th};
      detail::add_ds_axioms(sb);
      if (th == Theory::PN || th == Theory::MPN)
        detail::add_pn_axioms(sb, /*crown_letters=*/true);
      else if (th == Theory::PNNeg || th == Theory::MPNNeg)
        detail::add_pn_axioms(sb, /*crown_letters=*/false);
      if (has_mix(th)) detail::add_mix_axioms(sb);
      m.emplace(th, std::move(sb.out));
    }
    return m;
  }();
  return cache.at(t);
}

namespace detail {

inline void add_ds_theorems(SchemaBuilder& sb) {
  FPat A = FPat::var("A"), B = FPat::var("B"), C = FPat::var("C"),
       D = FPat::var("D"), E = FPat::var("E"), F = FPat::var("F");
  APat f = APat::var("f"), g = APat::var("g"), h = APat::var("h");
  sb.add("(b∧← nat)", po(pt_and(f, pt_and(g, h)), pbi(Conn::And, A, B, C)),
         po(pbi(Conn::And, D, E, F), pt_and(pt_and(f, g), h)),
         {{"f", A, D}, {"g", B, E}, {"h", C, F}});
  sb.add("(b∨← nat)", po(pt_or(f, pt_or(g, h)), pbi(Conn::Or, A, B, C)),
         po(pbi(Conn::Or, D, E, F), pt_or(pt_or(f, g), h)),
         {{"f", A, D}, {"g", B, E}, {"h", C, F}});
  sb.add("(d^R nat)", po(pt_or(h, pt_and(g, f)), pdistR(C, B, A)),
         po(pdistR(F, E, D), pt_and(pt_or(h, g), f)),
         {{"f", A, D}, {"g", B, E}, {"h", C, F}});
}

inline void add_pn_theorems(SchemaBuilder& sb, bool crown_letters) {
  FPat A = FPat::var("A"), B = FPat::var("B"), C = FPat::var("C"),
       D = FPat::var("D");
  APat f = APat::var("f");
  auto crowned = [&](const char* v, auto&& fn) {
    sb.letter_vars = crown_letters ? std::vector<std::string>{v}
                                   : std::vector<std::string>{};
    fn();
    sb.letter_vars.clear();
  };
  crowned("B", [&] {
    sb.add("(Σ∧ nat)",
           po(pt_and(pid(FPat::disj(FPat::neg(B), B)), f), psigma_and(B, A)),
           po(psigma_and(B, D), f), {{"f", A, D}});
    sb.add("(Δ∨ nat)", po(f, pdelta_or(B, A)),
           po(pdelta_or(B, D), pt_or(f, pid(FPat::conj(B, FPat::neg(B))))),
           {{"f", A, D}});
    sb.add("(Δ∧′ nat)",
           po(pt_and(f, pid(FPat::disj(B, FPat::neg(B)))), pdelta_p(B, A)),
           po(pdelta_p(B, D), f), {{"f", A, D}});
    sb.add("(Σ∨′ nat)", po(f, psigma_p(B, A)),
           po(psigma_p(B, D), pt_or(pid(FPat::conj(FPat::neg(B), B)), f)),
           {{"f", A, D}});
    sb.add("(Σ∧′ nat)",
           po(pt_and(pid(FPat::disj(B, FPat::neg(B))), f), psigma_and_p(B, A)),
           po(psigma_and_p(B, D), f), {{"f", A, D}});
    sb.add("(Δ∨′ nat)", po(f, pdelta_or_p(B, A)),
           po(pdelta_or_p(B, D), pt_or(f, pid(FPat::conj(FPat::neg(B), B)))),
           {{"f", A, D}});
    sb.add("(b∧Δ∧Σ∧)",
           po(pbi(Conn::And, A, FPat::disj(FPat::neg(B), B), C),
              pt_and(pdelta(B, A), pid(C))),
           pt_and(pid(A), psigma_and(B, C)));
    sb.add("(b∨Δ∨Σ∨)",
           po(pt_or(pdelta_or(B, A), pid(C)),
              pb(Conn::Or, A, FPat::conj(B, FPat::neg(B)), C)),
           pt_or(pid(A), psigma(B, C)));
  });
  crowned("C", [&] {
    sb.add("(b∧Σ∧)",
           po(pb(Conn::And, FPat::disj(FPat::neg(C), C), B, A),
              psigma_and(C, FPat::conj(B, A))),
           pt_and(psigma_and(C, B), pid(A)));
    sb.add("(b∨Δ∨)",
           po(pdelta_or(C, FPat::disj(A, B)),
              pb(Conn::Or, A, B, FPat::conj(C, FPat::neg(C)))),
           pt_or(pid(A), pdelta_or(C, B)));
    sb.add("(b∧Δ∧′)",
           po(pbi(Conn::And, A, B, FPat::disj(C, FPat::neg(C))),
              pdelta_p(C, FPat::conj(A, B))),
           pt_and(pid(A), pdelta_p(C, B)));
  });
  crowned("A", [&] {
    sb.add("(d^RΔ∧)",
           po(pdistR(C, B, FPat::disj(FPat::neg(A), A)),
              pdelta(A, FPat::disj(C, B))),
           pt_or(pid(C), pdelta(A, B)));
    sb.add("(d^RΣ∨)",
           po(psigma(A, FPat::conj(B, C)),
              pdistR(FPat::conj(A, FPat::neg(A)), B, C)),
           pt_and(psigma(A, B), pid(C)));
    sb.add("(Δ∨′Σ∧′)",
           po(pdelta_or_p(A, A), pdistR(A, FPat::neg(A), A),
              psigma_and_p(A, A)),
           pid(A));
    sb.add("(Δ∨Σ∧)",
           po(pdelta_or(A, FPat::neg(A)),
              pdistR(FPat::neg(A), A, FPat::neg(A)),
              psigma_and(A, FPat::neg(A))),
           pid(FPat::neg(A)));
  });
}

// Stem-increasing equations; the crown is a letter in every theory.
inline void add_stem_increasing(SchemaBuilder& sb) {
  FPat A = FPat::var("A"), B = FPat::var("B"), p = FPat::var("p");
  FPat crown_d = FPat::disj(FPat::neg(p), p);   // ~p \/ p
  FPat crown_s = FPat::conj(p, FPat::neg(p));   // p /\ ~p
  sb.letter_vars = {"p"};
  sb.add("(1∧Δ∧)", pt_and(pid(A), pdelta(p, B)),
         po(pbi(Conn::And, A, B, crown_d), pdelta(p, FPat::conj(A, B))));
  sb.add("(Δ∧∧1)", pt_and(pdelta(p, B), pid(A)),
         po(pc_and(A, FPat::conj(B, crown_d)), pbi(Conn::And, A, B, crown_d),
            pt_and(pc_and(B, A), pid(crown_d)), pdelta(p, FPat::conj(B, A))));
  sb.add("(1∨Δ∧)", pt_or(pid(A), pdelta(p, B)),
         po(pdistR(A, B, crown_d), pdelta(p, FPat::disj(A, B))));
  sb.add("(Δ∧∨1)", pt_or(pdelta(p, B), pid(A)),
         po(pc_or(FPat::conj(B, crown_d), A), pdistR(A, B, crown_d),
            pt_and(pc_or(A, B), pid(crown_d)), pdelta(p, FPat::disj(B, A))));
  sb.add("(Σ∨∨1)", pt_or(psigma(p, B), pid(A)),
         po(psigma(p, FPat::disj(B, A)), pbi(Conn::Or, crown_s, B, A)));
  sb.add("(1∨Σ∨)", pt_or(pid(A), psigma(p, B)),
         po(psigma(p, FPat::disj(A, B)), pt_or(pid(crown_s), pc_or(A, B)),
            pbi(Conn::Or, crown_s, B, A),
            pc_or(FPat::disj(crown_s, B), A)));
  sb.add("(Σ∨∧1)", pt_and(psigma(p, B), pid(A)),
         po(psigma(p, FPat::conj(B, A)), pdistR(crown_s, B, A)));
  sb.add("(1∧Σ∨)", pt_and(pid(A), psigma(p, B)),
         po(psigma(p, FPat::conj(A, B)), pt_or(pid(crown_s), pc_and(B, A)),
            pdistR(crown_s, B, A), pc_and(A, FPat::disj(crown_s, B))));
  sb.letter_vars.clear();
}

// Inverse pairs and the crown-reduction equations; these use the negation
// generators, so they live in pn-neg and mpn-neg only.
inline void add_pn_neg_theorems(SchemaBuilder& sb) {
  FPat A = FPat::var("A"), B = FPat::var("B"), C = FPat::var("C");
  sb.add("(n→n←)", po(pnn_elim(A), pnn_intro(A)), pid(A));
  sb.add("(n←n→)", po(pnn_intro(A), pnn_elim(A)),
         pid(FPat::neg(FPat::neg(A))));
  sb.add("(r∧→r∧←)", po(pdm_and(A, B), pdm_and_inv(A, B)),
         pid(FPat::disj(FPat::neg(A), FPat::neg(B))));
  sb.add("(r∧←r∧→)", po(pdm_and_inv(A, B), pdm_and(A, B)),
         pid(FPat::neg(FPat::conj(A, B))));
  sb.add("(r∨→r∨←)", po(pdm_or(A, B), pdm_or_inv(A, B)),
         pid(FPat::conj(FPat::neg(A), FPat::neg(B))));
  sb.add("(r∨←r∨→)", po(pdm_or_inv(A, B), pdm_or(A, B)),
         pid(FPat::neg(FPat::disj(A, B))));
  sb.add("(Δ∧ n)", pdelta(FPat::neg(B), A),
         po(pt_and(pid(A), pt_or(pnn_intro(B), pid(FPat::neg(B)))),
            pdelta_p(B, A)));
  sb.add("(Δ∧ r)", pdelta(FPat::conj(B, C), A),
         po(pt_and(pid(A),
                   po(pt_or(po(pdm_and_inv(B, C),
                               pc_or(FPat::neg(B), FPat::neg(C))),
                            pid(FPat::conj(B, C))),
                      pb(Conn::Or, FPat::neg(C), FPat::neg(B),
                         FPat::conj(B, C)),
                      pt_or(pid(FPat::neg(C)),
                            po(pdistR(FPat::neg(B), B, C),
                               psigma_and(B, C))))),
            pdelta(C, A)));
}

}  // namespace detail

/// Equations that follow from the axioms rather than being assumed; the
/// test suites check each of them under G.
inline const std::vector<EquationSchema>& theorem_catalog(Theory t) {
  static std::map<Theory, std::vector<EquationSchema>> cache = [] {
    std::map<Theory, std::vector<EquationSchema>> m;
    for (Theory th : all_theories()) {
      detail::SchemaBuilder sb;
      sb.theories = {th};
      detail::add_ds_theorems(sb);
      if (th == Theory::PN || th == Theory::MPN) {
        detail::add_pn_theorems(sb, /*crown_letters=*/true);
        detail::add_stem_increasing(sb);
      } else if (th == Theory::PNNeg || th == Theory::MPNNeg) {
        detail::add_pn_theorems(sb, /*crown_letters=*/false);
        detail::add_stem_increasing(sb);
        detail::add_pn_neg_theorems(sb);
      }
      m.emplace(th, std::move(sb.out));
    }
    return m;
  }();
  return cache.at(t);
}

// ---------------------------------------------------------------------------
// Pattern display, for the axioms listing.
// ---------------------------------------------------------------------------

namespace detail {

inline void print_fpat_rec(const FPat& p, std::string& out,
                           bool parens_if_binary) {
  switch (p.kind()) {
    case FPat::Kind::Var: out += p.name(); return;
    case FPat::Kind::Neg:
      out += '~';
      print_fpat_rec(p.sub(), out, true);
      return;
    default:
      if (parens_if_binary) out += '(';
      print_fpat_rec(p.left(), out, true);
      out += p.kind() == FPat::Kind::Conj ? " /\\ " : " \\/ ";
      print_fpat_rec(p.right(), out, true);
      if (parens_if_binary) out += ')';
      return;
  }
}

inline void print_apat_rec(const APat& p, std::string& out, bool allow_ops);

inline void print_apat_atom(const APat& p, std::string& out) {
  if (p.is_node()) {
    out += '(';
    print_apat_rec(p, out, true);
    out += ')';
  } else {
    print_apat_rec(p, out, false);
  }
}

inline void print_apat_rec(const APat& p, std::string& out, bool allow_ops) {
  using K = ArrowTerm::Kind;
  if (p.is_var()) {
    out += p.name();
    return;
  }
  switch (p.kind()) {
    case K::Comp:
      if (!allow_ops) {
        out += '(';
        print_apat_rec(p, out, true);
        out += ')';
        return;
      }
      if (!p.fst().is_var() && p.fst().kind() == K::Comp)
        print_apat_atom(p.fst(), out);
      else
        print_apat_rec(p.fst(), out, true);
      out += " . ";
      print_apat_rec(p.snd(), out, true);
      return;
    case K::Tensor:
      if (!allow_ops) {
        out += '(';
        print_apat_rec(p, out, true);
        out += ')';
        return;
      }
      print_apat_atom(p.fst(), out);
      out += p.conn() == Conn::And ? " /\\ " : " \\/ ";
      print_apat_atom(p.snd(), out);
      return;
    default: {
      const GenEntry* e = find_generator(p.kind(), p.conn());
      out += e->name;
      out += '(';
      for (std::size_t i = 0; i < p.indices().size(); ++i) {
        if (i) out += ", ";
        print_fpat_rec(p.indices()[i], out, false);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace detail

inline void collect_formula_vars(const FPat& p, std::vector<std::string>& out) {
  switch (p.kind()) {
    case FPat::Kind::Var:
      if (std::find(out.begin(), out.end(), p.name()) == out.end())
        out.push_back(p.name());
      return;
    case FPat::Kind::Neg: collect_formula_vars(p.sub(), out); return;
    default:
      collect_formula_vars(p.left(), out);
      collect_formula_vars(p.right(), out);
      return;
  }
}

inline void collect_formula_vars(const APat& p, std::vector<std::string>& out) {
  if (p.is_var()) return;
  if (p.is_node()) {
    collect_formula_vars(p.fst(), out);
    collect_formula_vars(p.snd(), out);
    return;
  }
  for (const FPat& fp : p.indices()) collect_formula_vars(fp, out);
}

/// All formula metavariables a schema mentions, in first-seen order.
inline std::vector<std::string> schema_formula_vars(const EquationSchema& s) {
  std::vector<std::string> out;
  collect_formula_vars(s.lhs, out);
  collect_formula_vars(s.rhs, out);
  for (const ArrowVarDecl& d : s.arrow_vars) {
    collect_formula_vars(d.src, out);
    collect_formula_vars(d.tgt, out);
  }
  return out;
}

inline std::string print_schema(const EquationSchema& s) {
  std::string out = s.name + s.variant + "  ";
  detail::print_apat_rec(s.lhs, out, true);
  out += "  =  ";
  detail::print_apat_rec(s.rhs, out, true);
  return out;
}

// ---------------------------------------------------------------------------
// Development: every term equals a composition of a 1-term followed by
// headed factors.
// ---------------------------------------------------------------------------

/// 1-terms: 1_A, and 1_A ξ f / f ξ 1_A for f a 1-term.
inline bool is_one_term(const ArrowTerm& f) {
  using K = ArrowTerm::Kind;
  if (f.kind() == K::Id) return true;
  if (f.kind() != K::Tensor) return false;
  if (f.fst().kind() == K::Id && is_one_term(f.snd())) return true;
  return f.snd().kind() == K::Id && is_one_term(f.fst());
}

/// β-terms: a single non-identity generator wrapped in identity tensors;
/// the generator is the head.
inline bool is_beta_term(const ArrowTerm& f) {
  using K = ArrowTerm::Kind;
  if (f.is_leaf()) return f.kind() != K::Id;
  if (f.kind() != K::Tensor) return false;
  if (f.fst().kind() == K::Id && is_beta_term(f.snd())) return true;
  return f.snd().kind() == K::Id && is_beta_term(f.fst());
}

namespace detail {

inline void dev_factors(const ArrowTerm& f, std::vector<ArrowTerm>& out) {
  using K = ArrowTerm::Kind;
  switch (f.kind()) {
    case K::Id:
      return;
    case K::Comp:
      dev_factors(f.snd(), out);
      dev_factors(f.fst(), out);
      return;
    case K::Tensor: {
      // f ξ g = (f ξ 1) . (1 ξ g), right factor applied first; each factor
      // of the children lifts to a headed factor of the tensor.
      Formula src_l = type_of(f.fst()).source;
      Formula tgt_r = type_of(f.snd()).target;
      std::vector<ArrowTerm> ls, rs;
      dev_factors(f.fst(), ls);
      dev_factors(f.snd(), rs);
      for (const ArrowTerm& r : rs)
        out.push_back(ArrowTerm::tensor(f.conn(), ArrowTerm::id(src_l), r));
      for (const ArrowTerm& l : ls)
        out.push_back(ArrowTerm::tensor(f.conn(), l, ArrowTerm::id(tgt_r)));
      return;
    }
    default:
      out.push_back(f);
      return;
  }
}

}  // namespace detail

/// Deterministic development: a right-associated composition whose first
/// factor is 1_source and whose remaining factors are each headed by a
/// single generator. Derived generators count as heads and are kept as-is.
inline ArrowTerm develop(const ArrowTerm& f) {
  ArrowType ty = type_of(f);
  std::vector<ArrowTerm> factors;
  detail::dev_factors(f, factors);
  ArrowTerm acc = ArrowTerm::id(ty.source);
  for (const ArrowTerm& x : factors) acc = ArrowTerm::comp(x, acc);
  return acc;
}

namespace detail {
inline bool composition_free(const ArrowTerm& f) {
  switch (f.kind()) {
    case ArrowTerm::Kind::Comp: return false;
    case ArrowTerm::Kind::Tensor:
      return composition_free(f.fst()) && composition_free(f.snd());
    default: return true;
  }
}

inline void flatten_comp(const ArrowTerm& f, std::vector<ArrowTerm>& out) {
  if (f.kind() == ArrowTerm::Kind::Comp) {
    flatten_comp(f.snd(), out);  // applied first
    flatten_comp(f.fst(), out);
  } else {
    out.push_back(f);
  }
}
}  // namespace detail

/// The shape predicate: factors f_n ∘ … ∘ f_1 (parenthesized arbitrarily),
/// each composition-free, f_1 a 1-term, every later factor headed.
inline bool is_developed(const ArrowTerm& f) {
  std::vector<ArrowTerm> fs;
  detail::flatten_comp(f, fs);
  for (const ArrowTerm& x : fs)
    if (!detail::composition_free(x)) return false;
  if (!is_one_term(fs.front())) return false;
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (!is_beta_term(fs[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Oriented schema application at a subterm position (fuzzing machinery).
// ---------------------------------------------------------------------------

using TermPath = std::vector<int>;  // 0 = fst, 1 = snd at each Comp/Tensor

namespace detail {
inline void collect_paths(const ArrowTerm& f, TermPath& cur,
                          std::vector<TermPath>& out) {
  out.push_back(cur);
  if (!f.is_leaf()) {
    cur.push_back(0);
    collect_paths(f.fst(), cur, out);
    cur.back() = 1;
    collect_paths(f.snd(), cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

inline std::vector<TermPath> subterm_paths(const ArrowTerm& f) {
  std::vector<TermPath> out;
  TermPath cur;
  detail::collect_paths(f, cur, out);
  return out;
}

inline ArrowTerm subterm_at(const ArrowTerm& f, const TermPath& p,
                            std::size_t from = 0) {
  if (from == p.size()) return f;
  return subterm_at(p[from] == 0 ? f.fst() : f.snd(), p, from + 1);
}

inline ArrowTerm replace_at(const ArrowTerm& f, const TermPath& p,
                            const ArrowTerm& repl, std::size_t from = 0) {
  if (from == p.size()) return repl;
  ArrowTerm l = f.fst(), r = f.snd();
  if (p[from] == 0)
    l = replace_at(l, p, repl, from + 1);
  else
    r = replace_at(r, p, repl, from + 1);
  if (f.kind() == ArrowTerm::Kind::Comp) return ArrowTerm::comp(l, r);
  return ArrowTerm::tensor(f.conn(), l, r);
}

/// Try to rewrite the subterm at `path` with schema `s`, left-to-right when
/// `forward`, right-to-left otherwise. Returns the rewritten whole term, or
/// nullopt when the pattern does not match there.
inline std::optional<ArrowTerm> apply_schema_at(const ArrowTerm& root,
                                                const TermPath& path,
                                                const EquationSchema& s,
                                                bool forward) {
  ArrowTerm sub = subterm_at(root, path);
  Substitution sig;
  const APat& from = forward ? s.lhs : s.rhs;
  const APat& to = forward ? s.rhs : s.lhs;
  if (!match_arrow(from, sub, sig)) return std::nullopt;
  for (const ArrowVarDecl& d : s.arrow_vars) {
    auto it = sig.arrows.find(d.name);
    if (it == sig.arrows.end()) return std::nullopt;
    ArrowType ty = type_of(it->second);
    if (!match_formula(d.src, ty.source, sig)) return std::nullopt;
    if (!match_formula(d.tgt, ty.target, sig)) return std::nullopt;
  }
  for (const std::string& lv : s.letter_vars) {
    auto it = sig.formulas.find(lv);
    if (it == sig.formulas.end() || !it->second.is_atom())
      return std::nullopt;
  }
  ArrowTerm repl = [&] {
    try {
      return subst_arrow(to, sig);
    } catch (const std::invalid_argument&) {
      return sub;  // other side mentions an unbound variable; no rewrite
    }
  }();
  if (repl == sub) return std::nullopt;
  return replace_at(root, path, repl);
}

}  // namespace pnet
