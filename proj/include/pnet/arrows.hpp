/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cassert>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pnet/formula.hpp"
#include "pnet/theory.hpp"

namespace pnet {

/// Typed syntax tree of a proof. Leaves are generators indexed by formulas;
/// inner nodes are composition `f . g` (g applied first) and the two tensors
/// `f /\ g`, `f \/ g`. Derived generators (distR, sigma_and, the primed
/// family, nn_*, dm_*) are first-class nodes; expand_derived rewrites them
/// into their defining terms over the primitive generators.
class ArrowTerm {
 public:
  enum class Kind {
    Id,            // id(A)             : A ⊢ A
    AssocR,        // b_and(A,B,C)      : A/\(B/\C) ⊢ (A/\B)/\C   (and b_or)
    AssocL,        // b_and_inv(A,B,C)  : (A/\B)/\C ⊢ A/\(B/\C)
    SymConj,       // c_and(A,B)        : A/\B ⊢ B/\A
    SymDisj,       // c_or(A,B)         : B\/A ⊢ A\/B
    Dist,          // dist(A,B,C)       : A/\(B\/C) ⊢ (A/\B)\/C
    DistR,         // distR(C,B,A)      : (C\/B)/\A ⊢ C\/(B/\A)
    DeltaConj,     // delta_and(B,A)    : A ⊢ A/\(~B\/B)
    SigmaDisj,     // sigma_or(B,A)     : (B/\~B)\/A ⊢ A
    SigmaConj,     // sigma_and(B,A)    : A ⊢ (~B\/B)/\A
    DeltaDisj,     // delta_or(B,A)     : A\/(B/\~B) ⊢ A
    DeltaConjP,    // delta_and_p(B,A)  : A ⊢ A/\(B\/~B)
    SigmaDisjP,    // sigma_or_p(B,A)   : (~B/\B)\/A ⊢ A
    SigmaConjP,    // sigma_and_p(B,A)  : A ⊢ (B\/~B)/\A
    DeltaDisjP,    // delta_or_p(B,A)   : A\/(~B/\B) ⊢ A
    NNegElim,      // nn_elim(A)        : ~~A ⊢ A
    NNegIntro,     // nn_intro(A)       : A ⊢ ~~A
    DeMorganConjR, // dm_and(A,B)       : ~(A/\B) ⊢ ~A\/~B
    DeMorganConjL, // dm_and_inv(A,B)   : ~A\/~B ⊢ ~(A/\B)
    DeMorganDisjR, // dm_or(A,B)        : ~(A\/B) ⊢ ~A/\~B
    DeMorganDisjL, // dm_or_inv(A,B)    : ~A/\~B ⊢ ~(A\/B)
    Mix,           // mix(A,B)          : A/\B ⊢ A\/B
    Comp,          // f . g
    Tensor         // f /\ g, f \/ g
  };

  static ArrowTerm id(Formula a) { return leaf(Kind::Id, {std::move(a)}); }
  static ArrowTerm assoc_r(Conn c, Formula a, Formula b, Formula d) {
    return leaf(Kind::AssocR, {std::move(a), std::move(b), std::move(d)}, c);
  }
  static ArrowTerm assoc_l(Conn c, Formula a, Formula b, Formula d) {
    return leaf(Kind::AssocL, {std::move(a), std::move(b), std::move(d)}, c);
  }
  static ArrowTerm c_and(Formula a, Formula b) {
    return leaf(Kind::SymConj, {std::move(a), std::move(b)});
  }
  static ArrowTerm c_or(Formula a, Formula b) {
    return leaf(Kind::SymDisj, {std::move(a), std::move(b)});
  }
  static ArrowTerm dist(Formula a, Formula b, Formula c) {
    return leaf(Kind::Dist, {std::move(a), std::move(b), std::move(c)});
  }
  static ArrowTerm dist_r(Formula c, Formula b, Formula a) {
    return leaf(Kind::DistR, {std::move(c), std::move(b), std::move(a)});
  }
  static ArrowTerm delta_and(Formula crown, Formula stem) {
    return leaf(Kind::DeltaConj, {std::move(crown), std::move(stem)});
  }
  static ArrowTerm sigma_or(Formula crown, Formula stem) {
    return leaf(Kind::SigmaDisj, {std::move(crown), std::move(stem)});
  }
  static ArrowTerm sigma_and(Formula crown, Formula stem) {
    return leaf(Kind::SigmaConj, {std::move(crown), std::move(stem)});
  }
  static ArrowTerm delta_or(Formula crown, Formula stem) {
    return leaf(Kind::DeltaDisj, {std::move(crown), std::move(stem)});
  }
  static ArrowTerm delta_and_p(Formula crown, Formula stem) {
    return leaf(Kind::DeltaConjP, {std::move(crown), std::move(stem)});
  }
  static ArrowTerm sigma_or_p(Formula crown, Formula stem) {
    return leaf(Kind::SigmaDisjP, {std::move(crown), std::move(stem)});
  }
  static ArrowTerm sigma_and_p(Formula crown, Formula stem) {
    return leaf(Kind::SigmaConjP, {std::move(crown), std::move(stem)});
  }
  static ArrowTerm delta_or_p(Formula crown, Formula stem) {
    return leaf(Kind::DeltaDisjP, {std::move(crown), std::move(stem)});
  }
  static ArrowTerm nn_elim(Formula a) {
    return leaf(Kind::NNegElim, {std::move(a)});
  }
  static ArrowTerm nn_intro(Formula a) {
    return leaf(Kind::NNegIntro, {std::move(a)});
  }
  static ArrowTerm dm_and(Formula a, Formula b) {
    return leaf(Kind::DeMorganConjR, {std::move(a), std::move(b)});
  }
  static ArrowTerm dm_and_inv(Formula a, Formula b) {
    return leaf(Kind::DeMorganConjL, {std::move(a), std::move(b)});
  }
  static ArrowTerm dm_or(Formula a, Formula b) {
    return leaf(Kind::DeMorganDisjR, {std::move(a), std::move(b)});
  }
  static ArrowTerm dm_or_inv(Formula a, Formula b) {
    return leaf(Kind::DeMorganDisjL, {std::move(a), std::move(b)});
  }
  static ArrowTerm mix(Formula a, Formula b) {
    return leaf(Kind::Mix, {std::move(a), std::move(b)});
  }
  /// f . g — g applied first; the types must meet in the middle.
  static ArrowTerm comp(ArrowTerm f, ArrowTerm g) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Comp;
    n->f = std::make_shared<ArrowTerm>(std::move(f));
    n->g = std::make_shared<ArrowTerm>(std::move(g));
    return ArrowTerm(std::move(n));
  }
  static ArrowTerm tensor(Conn c, ArrowTerm f, ArrowTerm g) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tensor;
    n->conn = c;
    n->f = std::make_shared<ArrowTerm>(std::move(f));
    n->g = std::make_shared<ArrowTerm>(std::move(g));
    return ArrowTerm(std::move(n));
  }
  static ArrowTerm tensor_and(ArrowTerm f, ArrowTerm g) {
    return tensor(Conn::And, std::move(f), std::move(g));
  }
  static ArrowTerm tensor_or(ArrowTerm f, ArrowTerm g) {
    return tensor(Conn::Or, std::move(f), std::move(g));
  }

  Kind kind() const { return n_->kind; }
  Conn conn() const {
    assert(kind() == Kind::AssocR || kind() == Kind::AssocL ||
           kind() == Kind::Tensor);
    return n_->conn;
  }
  const std::vector<Formula>& indices() const { return n_->idx; }
  const ArrowTerm& fst() const { return *n_->f; }  // f of f.g / left of tensor
  const ArrowTerm& snd() const { return *n_->g; }
  bool is_leaf() const {
    return kind() != Kind::Comp && kind() != Kind::Tensor;
  }

  friend bool operator==(const ArrowTerm& x, const ArrowTerm& y) {
    if (x.n_ == y.n_) return true;
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
      case Kind::Comp:
        return x.fst() == y.fst() && x.snd() == y.snd();
      case Kind::Tensor:
        return x.conn() == y.conn() && x.fst() == y.fst() &&
               x.snd() == y.snd();
      case Kind::AssocR:
      case Kind::AssocL:
        if (x.conn() != y.conn()) return false;
        [[fallthrough]];
      default:
        return x.indices() == y.indices();
    }
  }
  friend bool operator!=(const ArrowTerm& x, const ArrowTerm& y) {
    return !(x == y);
  }

 private:
  struct Node {
    Kind kind;
    Conn conn = Conn::And;
    std::vector<Formula> idx;
    std::shared_ptr<const ArrowTerm> f, g;
  };
  static ArrowTerm leaf(Kind k, std::vector<Formula> idx, Conn c = Conn::And) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->conn = c;
    n->idx = std::move(idx);
    return ArrowTerm(std::move(n));
  }
  explicit ArrowTerm(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct ArrowType {
  Formula source, target;
  friend bool operator==(const ArrowType& a, const ArrowType& b) {
    return a.source == b.source && a.target == b.target;
  }
};

inline std::string print_formula_typed(const ArrowType& t) {
  return print_formula(t.source) + " ⊢ " + print_formula(t.target);
}

namespace detail {

inline ArrowType type_of_rec(const ArrowTerm& f, std::string& path) {
  using K = ArrowTerm::Kind;
  auto F = [&](std::size_t i) { return f.indices()[i]; };
  auto N = [](const Formula& a) { return Formula::neg(a); };
  switch (f.kind()) {
    case K::Id: return {F(0), F(0)};
    case K::AssocR: {
      Conn c = f.conn();
      return {Formula::binary(c, F(0), Formula::binary(c, F(1), F(2))),
              Formula::binary(c, Formula::binary(c, F(0), F(1)), F(2))};
    }
    case K::AssocL: {
      Conn c = f.conn();
      return {Formula::binary(c, Formula::binary(c, F(0), F(1)), F(2)),
              Formula::binary(c, F(0), Formula::binary(c, F(1), F(2)))};
    }
    case K::SymConj:
      return {Formula::conj(F(0), F(1)), Formula::conj(F(1), F(0))};
    case K::SymDisj:
      return {Formula::disj(F(1), F(0)), Formula::disj(F(0), F(1))};
    case K::Dist:
      return {Formula::conj(F(0), Formula::disj(F(1), F(2))),
              Formula::disj(Formula::conj(F(0), F(1)), F(2))};
    case K::DistR:
      return {Formula::conj(Formula::disj(F(0), F(1)), F(2)),
              Formula::disj(F(0), Formula::conj(F(1), F(2)))};
    case K::DeltaConj:
      return {F(1), Formula::conj(F(1), Formula::disj(N(F(0)), F(0)))};
    case K::SigmaDisj:
      return {Formula::disj(Formula::conj(F(0), N(F(0))), F(1)), F(1)};
    case K::SigmaConj:
      return {F(1), Formula::conj(Formula::disj(N(F(0)), F(0)), F(1))};
    case K::DeltaDisj:
      return {Formula::disj(F(1), Formula::conj(F(0), N(F(0)))), F(1)};
    case K::DeltaConjP:
      return {F(1), Formula::conj(F(1), Formula::disj(F(0), N(F(0))))};
    case K::SigmaDisjP:
      return {Formula::disj(Formula::conj(N(F(0)), F(0)), F(1)), F(1)};
    case K::SigmaConjP:
      return {F(1), Formula::conj(Formula::disj(F(0), N(F(0))), F(1))};
    case K::DeltaDisjP:
      return {Formula::disj(F(1), Formula::conj(N(F(0)), F(0))), F(1)};
    case K::NNegElim: return {N(N(F(0))), F(0)};
    case K::NNegIntro: return {F(0), N(N(F(0)))};
    case K::DeMorganConjR:
      return {N(Formula::conj(F(0), F(1))),
              Formula::disj(N(F(0)), N(F(1)))};
    case K::DeMorganConjL:
      return {Formula::disj(N(F(0)), N(F(1))),
              N(Formula::conj(F(0), F(1)))};
    case K::DeMorganDisjR:
      return {N(Formula::disj(F(0), F(1))),
              Formula::conj(N(F(0)), N(F(1)))};
    case K::DeMorganDisjL:
      return {Formula::conj(N(F(0)), N(F(1))),
              N(Formula::disj(F(0), F(1)))};
    case K::Mix:
      return {Formula::conj(F(0), F(1)), Formula::disj(F(0), F(1))};
    case K::Comp: {
      std::size_t mark = path.size();
      path += ".lhs";
      ArrowType tf = type_of_rec(f.fst(), path);
      path.resize(mark);
      path += ".rhs";
      ArrowType tg = type_of_rec(f.snd(), path);
      path.resize(mark);
      if (!(tg.target == tf.source))
        throw TypeError("composition mismatch at <root>" + path +
                        ": right factor ends in " +
                        print_formula(tg.target) +
                        " but left factor starts from " +
                        print_formula(tf.source));
      return {tg.source, tf.target};
    }
    case K::Tensor: {
      std::size_t mark = path.size();
      path += ".lhs";
      ArrowType tf = type_of_rec(f.fst(), path);
      path.resize(mark);
      path += ".rhs";
      ArrowType tg = type_of_rec(f.snd(), path);
      path.resize(mark);
      Conn c = f.conn();
      return {Formula::binary(c, tf.source, tg.source),
              Formula::binary(c, tf.target, tg.target)};
    }
  }
  throw std::logic_error("type_of: unreachable");
}

}  // namespace detail

/// Type of a term by the schema of each generator; throws TypeError when a
/// composition does not meet in the middle.
inline ArrowType type_of(const ArrowTerm& f) {
  std::string path;
  return detail::type_of_rec(f, path);
}

// ---------------------------------------------------------------------------
// Theory admissibility.
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_delta_sigma(ArrowTerm::Kind k) {
  using K = ArrowTerm::Kind;
  return k == K::DeltaConj || k == K::SigmaDisj || k == K::SigmaConj ||
         k == K::DeltaDisj || k == K::DeltaConjP || k == K::SigmaDisjP ||
         k == K::SigmaConjP || k == K::DeltaDisjP;
}

inline bool is_neg_structural(ArrowTerm::Kind k) {
  using K = ArrowTerm::Kind;
  return k == K::NNegElim || k == K::NNegIntro || k == K::DeMorganConjR ||
         k == K::DeMorganConjL || k == K::DeMorganDisjR ||
         k == K::DeMorganDisjL;
}

inline std::optional<std::string> check_theory_rec(const ArrowTerm& f,
                                                   Theory t) {
  using K = ArrowTerm::Kind;
  if (!f.is_leaf()) {
    if (auto e = check_theory_rec(f.fst(), t)) return e;
    return check_theory_rec(f.snd(), t);
  }
  K k = f.kind();
  if (k == K::Mix && !has_mix(t))
    return "mix is not a generator of " + theory_name(t);
  if (is_delta_sigma(k)) {
    if (t == Theory::DS || t == Theory::MDS)
      return "delta/sigma generators do not exist in " + theory_name(t);
    if ((t == Theory::PN || t == Theory::MPN) && !f.indices()[0].is_atom())
      return "crown index " + print_formula(f.indices()[0]) +
             " must be a letter in " + theory_name(t);
  }
  if (is_neg_structural(k) && t != Theory::PNNeg && t != Theory::MPNNeg)
    return "nn/dm generators exist only in pn-neg and mpn-neg";
  for (const Formula& a : f.indices())
    if (!check_language(a, t))
      return "index formula " + print_formula(a) +
             " is outside the language of " + theory_name(t);
  return std::nullopt;
}

}  // namespace detail

/// Human-readable first violation, or nullopt when f is admissible in t.
inline std::optional<std::string> check_theory_explain(const ArrowTerm& f,
                                                       Theory t) {
  return detail::check_theory_rec(f, t);
}

/// True iff every generator and every index formula of f is admissible in t.
inline bool check_theory(const ArrowTerm& f, Theory t) {
  return !check_theory_explain(f, t).has_value();
}

// ---------------------------------------------------------------------------
// Expansion of derived generators into their defining terms.
// ---------------------------------------------------------------------------

namespace detail {

using AT = ArrowTerm;
inline Formula nf(const Formula& a) { return Formula::neg(a); }

// d^R_{C,B,A} = c\/_{C,B/\A} . (c/\_{A,B} \/ 1_C) . d_{A,B,C}
//             . (1_A /\ c\/_{B,C}) . c/\_{C\/B,A}
inline AT x_dist_r(const Formula& c, const Formula& b, const Formula& a) {
  return AT::comp(
      AT::c_or(c, Formula::conj(b, a)),
      AT::comp(
          AT::tensor_or(AT::c_and(a, b), AT::id(c)),
          AT::comp(AT::dist(a, b, c),
                   AT::comp(AT::tensor_and(AT::id(a), AT::c_or(b, c)),
                            AT::c_and(Formula::disj(c, b), a)))));
}

// Sigma/\_{B,A} = c/\_{A,~B\/B} . Delta/\_{B,A}
inline AT x_sigma_and(const Formula& b, const Formula& a) {
  return AT::comp(AT::c_and(a, Formula::disj(nf(b), b)), AT::delta_and(b, a));
}

// Delta\/_{B,A} = Sigma\/_{B,A} . c\/_{B/\~B,A}
inline AT x_delta_or(const Formula& b, const Formula& a) {
  return AT::comp(AT::sigma_or(b, a), AT::c_or(Formula::conj(b, nf(b)), a));
}

// Delta/\'_{B,A} = (1_A /\ c\/_{B,~B}) . Delta/\_{B,A}
inline AT x_delta_and_p(const Formula& b, const Formula& a) {
  return AT::comp(AT::tensor_and(AT::id(a), AT::c_or(b, nf(b))),
                  AT::delta_and(b, a));
}

// Sigma\/'_{B,A} = Sigma\/_{B,A} . (c/\_{~B,B} \/ 1_A)
inline AT x_sigma_or_p(const Formula& b, const Formula& a) {
  return AT::comp(AT::sigma_or(b, a),
                  AT::tensor_or(AT::c_and(nf(b), b), AT::id(a)));
}

// Sigma/\'_{B,A} = c/\_{A,B\/~B} . Delta/\'_{B,A}
inline AT x_sigma_and_p(const Formula& b, const Formula& a) {
  return AT::comp(AT::c_and(a, Formula::disj(b, nf(b))), x_delta_and_p(b, a));
}

// Delta\/'_{B,A} = Sigma\/'_{B,A} . c\/_{~B/\B,A}
inline AT x_delta_or_p(const Formula& b, const Formula& a) {
  return AT::comp(x_sigma_or_p(b, a), AT::c_or(Formula::conj(nf(b), b), a));
}

// n->_A = Sigma\/'_{~A,A} . d_{~~A,~A,A} . Delta/\_{A,~~A}
inline AT x_nn_elim(const Formula& a) {
  return AT::comp(x_sigma_or_p(nf(a), a),
                  AT::comp(AT::dist(nf(nf(a)), nf(a), a),
                           AT::delta_and(a, nf(nf(a)))));
}

// n<-_A = Sigma\/_{A,~~A} . d_{A,~A,~~A} . Delta/\'_{~A,A}
inline AT x_nn_intro(const Formula& a) {
  return AT::comp(AT::sigma_or(a, nf(nf(a))),
                  AT::comp(AT::dist(a, nf(a), nf(nf(a))),
                           x_delta_and_p(nf(a), a)));
}

// r/\->_{A,B} : ~(A/\B) ⊢ ~A\/~B
inline AT x_dm_and(const Formula& a, const Formula& b) {
  Formula ab = Formula::conj(a, b);
  Formula nab = nf(ab);
  Formula na_nb = Formula::disj(nf(a), nf(b));
  AT inner = AT::comp(
      AT::tensor_or(AT::id(ab), AT::c_or(nf(a), nf(b))),
      AT::comp(AT::assoc_l(Conn::Or, ab, nf(b), nf(a)),
               AT::tensor_or(AT::comp(AT::dist(a, b, nf(b)),
                                      x_delta_and_p(b, a)),
                             AT::id(nf(a)))));
  return AT::comp(
      x_sigma_or_p(ab, na_nb),
      AT::comp(AT::dist(nab, ab, na_nb),
               AT::comp(AT::tensor_and(AT::id(nab), inner),
                        x_delta_and_p(a, nab))));
}

// r/\<-_{A,B} : ~A\/~B ⊢ ~(A/\B)
inline AT x_dm_and_inv(const Formula& a, const Formula& b) {
  Formula ab = Formula::conj(a, b);
  Formula nab = nf(ab);
  Formula na_nb = Formula::disj(nf(a), nf(b));
  AT inner = AT::comp(
      AT::tensor_and(AT::comp(x_delta_or_p(b, nf(a)),
                              x_dist_r(nf(a), nf(b), b)),
                     AT::id(a)),
      AT::comp(AT::assoc_r(Conn::And, na_nb, b, a),
               AT::tensor_and(AT::id(na_nb), AT::c_and(a, b))));
  return AT::comp(
      x_sigma_or_p(a, nab),
      AT::comp(AT::tensor_or(inner, AT::id(nab)),
               AT::comp(AT::dist(na_nb, ab, nab),
                        x_delta_and_p(ab, na_nb))));
}

// r\/->_{A,B} : ~(A\/B) ⊢ ~A/\~B
inline AT x_dm_or(const Formula& a, const Formula& b) {
  Formula ab = Formula::disj(a, b);
  Formula nab = nf(ab);
  Formula na_nb = Formula::conj(nf(a), nf(b));
  AT inner = AT::comp(
      AT::tensor_or(AT::c_or(a, b), AT::id(na_nb)),
      AT::comp(AT::assoc_r(Conn::Or, b, a, na_nb),
               AT::tensor_or(AT::id(b),
                             AT::comp(x_dist_r(a, nf(a), nf(b)),
                                      x_sigma_and_p(a, nf(b))))));
  return AT::comp(
      x_sigma_or_p(ab, na_nb),
      AT::comp(AT::dist(nab, ab, na_nb),
               AT::comp(AT::tensor_and(AT::id(nab), inner),
                        x_delta_and_p(b, nab))));
}

// r\/<-_{A,B} : ~A/\~B ⊢ ~(A\/B)
inline AT x_dm_or_inv(const Formula& a, const Formula& b) {
  Formula ab = Formula::disj(a, b);
  Formula nab = nf(ab);
  Formula na_nb = Formula::conj(nf(a), nf(b));
  AT inner = AT::comp(
      AT::tensor_and(AT::id(nf(b)),
                     AT::comp(x_sigma_or_p(a, b), AT::dist(nf(a), a, b))),
      AT::comp(AT::assoc_l(Conn::And, nf(b), nf(a), ab),
               AT::tensor_and(AT::c_and(nf(a), nf(b)), AT::id(ab))));
  return AT::comp(
      x_sigma_or_p(b, nab),
      AT::comp(AT::tensor_or(inner, AT::id(nab)),
               AT::comp(AT::dist(na_nb, ab, nab),
                        x_delta_and_p(ab, na_nb))));
}

}  // namespace detail

/// Replace every derived generator by its defining term. The result contains
/// only id, b_*, c_*, dist, delta_and, sigma_or, mix, composition and
/// tensor, and has the same type as the input.
inline ArrowTerm expand_derived(const ArrowTerm& f) {
  using K = ArrowTerm::Kind;
  switch (f.kind()) {
    case K::Comp:
      return ArrowTerm::comp(expand_derived(f.fst()), expand_derived(f.snd()));
    case K::Tensor:
      return ArrowTerm::tensor(f.conn(), expand_derived(f.fst()),
                               expand_derived(f.snd()));
    case K::DistR:
      return detail::x_dist_r(f.indices()[0], f.indices()[1], f.indices()[2]);
    case K::SigmaConj:
      return detail::x_sigma_and(f.indices()[0], f.indices()[1]);
    case K::DeltaDisj:
      return detail::x_delta_or(f.indices()[0], f.indices()[1]);
    case K::DeltaConjP:
      return detail::x_delta_and_p(f.indices()[0], f.indices()[1]);
    case K::SigmaDisjP:
      return detail::x_sigma_or_p(f.indices()[0], f.indices()[1]);
    case K::SigmaConjP:
      return detail::x_sigma_and_p(f.indices()[0], f.indices()[1]);
    case K::DeltaDisjP:
      return detail::x_delta_or_p(f.indices()[0], f.indices()[1]);
    case K::NNegElim:
      return detail::x_nn_elim(f.indices()[0]);
    case K::NNegIntro:
      return detail::x_nn_intro(f.indices()[0]);
    case K::DeMorganConjR:
      return detail::x_dm_and(f.indices()[0], f.indices()[1]);
    case K::DeMorganConjL:
      return detail::x_dm_and_inv(f.indices()[0], f.indices()[1]);
    case K::DeMorganDisjR:
      return detail::x_dm_or(f.indices()[0], f.indices()[1]);
    case K::DeMorganDisjL:
      return detail::x_dm_or_inv(f.indices()[0], f.indices()[1]);
    default:
      return f;
  }
}

// ---------------------------------------------------------------------------
// Text form of arrow terms.
//
//   term    := tensor ( '.' term )?          -- '.' is ∘, right-associative
//   tensor  := atom ( ('/\' | '\/') atom )?  -- non-associative
//   atom    := gen '(' args ')' | name | '(' term ')'
//
// Generator arguments are formulas. A bare name refers to a definition.
// ---------------------------------------------------------------------------

namespace detail {

struct GenEntry {
  const char* name;
  ArrowTerm::Kind kind;
  Conn conn;
  int arity;
};

inline const std::vector<GenEntry>& generator_table() {
  using K = ArrowTerm::Kind;
  static const std::vector<GenEntry> table = {
      {"id", K::Id, Conn::And, 1},
      {"b_and", K::AssocR, Conn::And, 3},
      {"b_or", K::AssocR, Conn::Or, 3},
      {"b_and_inv", K::AssocL, Conn::And, 3},
      {"b_or_inv", K::AssocL, Conn::Or, 3},
      {"c_and", K::SymConj, Conn::And, 2},
      {"c_or", K::SymDisj, Conn::Or, 2},
      {"dist", K::Dist, Conn::And, 3},
      {"distR", K::DistR, Conn::And, 3},
      {"delta_and", K::DeltaConj, Conn::And, 2},
      {"sigma_or", K::SigmaDisj, Conn::Or, 2},
      {"sigma_and", K::SigmaConj, Conn::And, 2},
      {"delta_or", K::DeltaDisj, Conn::Or, 2},
      {"delta_and_p", K::DeltaConjP, Conn::And, 2},
      {"sigma_or_p", K::SigmaDisjP, Conn::Or, 2},
      {"sigma_and_p", K::SigmaConjP, Conn::And, 2},
      {"delta_or_p", K::DeltaDisjP, Conn::Or, 2},
      {"nn_elim", K::NNegElim, Conn::And, 1},
      {"nn_intro", K::NNegIntro, Conn::And, 1},
      {"dm_and", K::DeMorganConjR, Conn::And, 2},
      {"dm_and_inv", K::DeMorganConjL, Conn::And, 2},
      {"dm_or", K::DeMorganDisjR, Conn::Or, 2},
      {"dm_or_inv", K::DeMorganDisjL, Conn::Or, 2},
      {"mix", K::Mix, Conn::And, 2},
  };
  return table;
}

inline const GenEntry* find_generator(std::string_view name) {
  for (const GenEntry& e : generator_table())
    if (name == e.name) return &e;
  return nullptr;
}

inline const GenEntry* find_generator(ArrowTerm::Kind k, Conn c) {
  for (const GenEntry& e : generator_table())
    if (e.kind == k &&
        (k != ArrowTerm::Kind::AssocR && k != ArrowTerm::Kind::AssocL
             ? true
             : e.conn == c))
      return &e;
  return nullptr;
}

}  // namespace detail

/// Named formula and arrow definitions usable from term text.
struct Env : detail::FormulaEnv {
  std::map<std::string, Formula> formulas;
  std::map<std::string, ArrowTerm> arrows;
  std::vector<std::string> order;  // definition order, for reports

  const Formula* lookup_formula(const std::string& n) const override {
    auto it = formulas.find(n);
    return it == formulas.end() ? nullptr : &it->second;
  }
  const ArrowTerm* lookup_arrow(const std::string& n) const {
    auto it = arrows.find(n);
    return it == arrows.end() ? nullptr : &it->second;
  }
};

namespace detail {

inline ArrowTerm parse_term_expr(Lexer& lx, const Env* env);

inline ArrowTerm leaf_from_entry(const GenEntry& e, std::vector<Formula> args) {
  using K = ArrowTerm::Kind;
  const Formula& a0 = args[0];
  switch (e.kind) {
    case K::Id: return ArrowTerm::id(a0);
    case K::AssocR: return ArrowTerm::assoc_r(e.conn, a0, args[1], args[2]);
    case K::AssocL: return ArrowTerm::assoc_l(e.conn, a0, args[1], args[2]);
    case K::SymConj: return ArrowTerm::c_and(a0, args[1]);
    case K::SymDisj: return ArrowTerm::c_or(a0, args[1]);
    case K::Dist: return ArrowTerm::dist(a0, args[1], args[2]);
    case K::DistR: return ArrowTerm::dist_r(a0, args[1], args[2]);
    case K::DeltaConj: return ArrowTerm::delta_and(a0, args[1]);
    case K::SigmaDisj: return ArrowTerm::sigma_or(a0, args[1]);
    case K::SigmaConj: return ArrowTerm::sigma_and(a0, args[1]);
    case K::DeltaDisj: return ArrowTerm::delta_or(a0, args[1]);
    case K::DeltaConjP: return ArrowTerm::delta_and_p(a0, args[1]);
    case K::SigmaDisjP: return ArrowTerm::sigma_or_p(a0, args[1]);
    case K::SigmaConjP: return ArrowTerm::sigma_and_p(a0, args[1]);
    case K::DeltaDisjP: return ArrowTerm::delta_or_p(a0, args[1]);
    case K::NNegElim: return ArrowTerm::nn_elim(a0);
    case K::NNegIntro: return ArrowTerm::nn_intro(a0);
    case K::DeMorganConjR: return ArrowTerm::dm_and(a0, args[1]);
    case K::DeMorganConjL: return ArrowTerm::dm_and_inv(a0, args[1]);
    case K::DeMorganDisjR: return ArrowTerm::dm_or(a0, args[1]);
    case K::DeMorganDisjL: return ArrowTerm::dm_or_inv(a0, args[1]);
    case K::Mix: return ArrowTerm::mix(a0, args[1]);
    default: break;
  }
  throw std::logic_error("leaf_from_entry: unreachable");
}

inline ArrowTerm parse_term_atom(Lexer& lx, const Env* env) {
  DepthGuard guard(lx);
  const Token& t = lx.peek();
  if (t.type == Token::Type::LParen) {
    lx.next();
    ArrowTerm f = parse_term_expr(lx, env);
    lx.expect(Token::Type::RParen);
    return f;
  }
  if (t.type != Token::Type::Ident)
    throw ParseError("expected an arrow term, found " + Lexer::describe(t),
                     t.line, t.col, {"identifier", "'('"});
  Token id = lx.next();
  if (const GenEntry* e = find_generator(id.text)) {
    lx.expect(Token::Type::LParen);
    std::vector<Formula> args;
    args.push_back(parse_formula_expr(lx, env));
    while (lx.peek().type == Token::Type::Comma) {
      lx.next();
      args.push_back(parse_formula_expr(lx, env));
    }
    lx.expect(Token::Type::RParen);
    if (static_cast<int>(args.size()) != e->arity)
      throw ParseError(std::string(e->name) + " takes " +
                           std::to_string(e->arity) + " formula arguments, got " +
                           std::to_string(args.size()),
                       id.line, id.col);
    return leaf_from_entry(*e, std::move(args));
  }
  if (env) {
    if (const ArrowTerm* f = env->lookup_arrow(id.text)) return *f;
  }
  throw ParseError("unknown arrow name '" + id.text + "'", id.line, id.col,
                   {"generator", "defined name"});
}

inline ArrowTerm parse_term_tensor(Lexer& lx, const Env* env) {
  ArrowTerm lhs = parse_term_atom(lx, env);
  const Token& t = lx.peek();
  if (t.type == Token::Type::AndOp || t.type == Token::Type::OrOp) {
    Conn c = t.type == Token::Type::AndOp ? Conn::And : Conn::Or;
    lx.next();
    ArrowTerm rhs = parse_term_atom(lx, env);
    const Token& u = lx.peek();
    if (u.type == Token::Type::AndOp || u.type == Token::Type::OrOp)
      throw ParseError("tensors do not associate; use parentheses", u.line,
                       u.col, {"')'", "'.'"});
    return ArrowTerm::tensor(c, std::move(lhs), std::move(rhs));
  }
  return lhs;
}

inline ArrowTerm parse_term_expr(Lexer& lx, const Env* env) {
  // Composition chains fold right-associatively.
  std::vector<ArrowTerm> units;
  units.push_back(parse_term_tensor(lx, env));
  while (lx.peek().type == Token::Type::Dot) {
    lx.next();
    units.push_back(parse_term_tensor(lx, env));
  }
  ArrowTerm acc = std::move(units.back());
  for (std::size_t i = units.size() - 1; i-- > 0;)
    acc = ArrowTerm::comp(std::move(units[i]), std::move(acc));
  return acc;
}

}  // namespace detail

inline ArrowTerm parse_arrow(std::string_view text, const Env* env = nullptr) {
  detail::Lexer lx(text);
  ArrowTerm f = detail::parse_term_expr(lx, env);
  const detail::Token& t = lx.peek();
  if (t.type != detail::Token::Type::End)
    throw ParseError("trailing input after term: " + detail::Lexer::describe(t),
                     t.line, t.col);
  return f;
}

namespace detail {
inline void print_arrow_rec(const ArrowTerm& f, std::string& out,
                            bool at_comp_tail);

inline void print_arrow_atom(const ArrowTerm& f, std::string& out) {
  if (f.is_leaf()) {
    print_arrow_rec(f, out, false);
  } else {
    out += '(';
    print_arrow_rec(f, out, true);
    out += ')';
  }
}

inline void print_arrow_rec(const ArrowTerm& f, std::string& out,
                            bool allow_ops) {
  using K = ArrowTerm::Kind;
  switch (f.kind()) {
    case K::Comp: {
      if (!allow_ops) {
        out += '(';
        print_arrow_rec(f, out, true);
        out += ')';
        return;
      }
      // Left operand of '.' may be a tensor but not a composition.
      if (f.fst().kind() == K::Comp)
        print_arrow_atom(f.fst(), out);
      else
        print_arrow_rec(f.fst(), out, true);
      out += " . ";
      print_arrow_rec(f.snd(), out, true);
      return;
    }
    case K::Tensor: {
      if (!allow_ops) {
        out += '(';
        print_arrow_rec(f, out, true);
        out += ')';
        return;
      }
      print_arrow_atom(f.fst(), out);
      out += f.conn() == Conn::And ? " /\\ " : " \\/ ";
      print_arrow_atom(f.snd(), out);
      return;
    }
    default: {
      bool assoc = f.kind() == K::AssocR || f.kind() == K::AssocL;
      const GenEntry* e =
          find_generator(f.kind(), assoc ? f.conn() : Conn::And);
      out += e->name;
      out += '(';
      const auto& ix = f.indices();
      for (std::size_t i = 0; i < ix.size(); ++i) {
        if (i) out += ", ";
        out += print_formula(ix[i]);
      }
      out += ')';
      return;
    }
  }
}
}  // namespace detail

/// Canonical text form; parse_arrow(print_arrow(f)) == f.
inline std::string print_arrow(const ArrowTerm& f) {
  std::string out;
  detail::print_arrow_rec(f, out, true);
  return out;
}

// ---------------------------------------------------------------------------
// Definition files: `name := term;`, `formula name := A;`, later entries may
// use earlier names. The `.pnc` extension is conventional.
// ---------------------------------------------------------------------------

inline Env parse_definitions(std::string_view text, Env env = {}) {
  detail::Lexer lx(text);
  using T = detail::Token::Type;
  while (lx.peek().type != T::End) {
    detail::Token id = lx.expect(T::Ident);
    bool is_formula = false;
    if (id.text == "formula" && lx.peek().type == T::Ident) {
      is_formula = true;
      id = lx.next();
    }
    if (env.formulas.count(id.text) || env.arrows.count(id.text))
      throw ParseError("duplicate definition of '" + id.text + "'", id.line,
                       id.col);
    lx.expect(T::Assign);
    if (is_formula) {
      Formula f = detail::parse_formula_expr(lx, &env);
      env.formulas.emplace(id.text, std::move(f));
    } else {
      ArrowTerm f = detail::parse_term_expr(lx, &env);
      env.arrows.emplace(id.text, std::move(f));
    }
    env.order.push_back(id.text);
    lx.expect(T::Semi);
  }
  return env;
}

}  // namespace pnet
