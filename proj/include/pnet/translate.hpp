/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "pnet/arrows.hpp"
#include "pnet/formula.hpp"

namespace pnet {

/// F on objects: negation normal form.
inline Formula f_object(const Formula& a) { return nnf(a); }

namespace detail {

using AT = ArrowTerm;

inline Formula f_neg(const Formula& a) { return nnf_neg(a); }

// F Delta/\_{B,S} for a stem S already in negation normal form. The crown
// recursion mirrors the defining clauses: letters map straight through,
// ~ swaps the crown with c\/, and the binary crowns splice the recursive
// call into the previously built crown.
inline AT f_delta(const Formula& b, const Formula& s) {
  switch (b.kind()) {
    case Formula::Kind::Atom:
      return AT::delta_and(b, s);
    case Formula::Kind::Neg: {
      const Formula b1 = b.sub();
      return AT::comp(
          AT::tensor_and(AT::id(s), AT::c_or(nnf(b1), f_neg(b1))),
          f_delta(b1, s));
    }
    case Formula::Kind::Conj: {
      const Formula b1 = b.left(), b2 = b.right();
      const Formula fb1 = nnf(b1), fb2 = nnf(b2);
      const Formula n1 = f_neg(b1), n2 = f_neg(b2);
      AT inner = AT::comp(
          AT::tensor_or(AT::c_or(n1, n2), AT::id(Formula::conj(fb1, fb2))),
          AT::comp(
              AT::assoc_r(Conn::Or, n2, n1, Formula::conj(fb1, fb2)),
              AT::tensor_or(
                  AT::id(n2),
                  AT::comp(AT::dist_r(n1, fb1, fb2),
                           AT::comp(AT::c_and(fb2, Formula::disj(n1, fb1)),
                                    f_delta(b1, fb2))))));
      return AT::comp(AT::tensor_and(AT::id(s), inner), f_delta(b2, s));
    }
    default: {  // Disj
      const Formula b1 = b.left(), b2 = b.right();
      const Formula fb1 = nnf(b1), fb2 = nnf(b2);
      const Formula n1 = f_neg(b1), n2 = f_neg(b2);
      AT inner = AT::comp(
          AT::tensor_or(AT::c_and(n2, n1), AT::id(Formula::disj(fb1, fb2))),
          AT::comp(AT::assoc_l(Conn::Or, Formula::conj(n2, n1), fb1, fb2),
                   AT::tensor_or(AT::comp(AT::dist(n2, n1, fb1),
                                          f_delta(b1, n2)),
                                 AT::id(fb2))));
      return AT::comp(AT::tensor_and(AT::id(s), inner), f_delta(b2, s));
    }
  }
}

// F Sigma\/_{B,S}, dual to f_delta.
inline AT f_sigma(const Formula& b, const Formula& s) {
  switch (b.kind()) {
    case Formula::Kind::Atom:
      return AT::sigma_or(b, s);
    case Formula::Kind::Neg: {
      const Formula b1 = b.sub();
      return AT::comp(
          f_sigma(b1, s),
          AT::tensor_or(AT::c_and(f_neg(b1), nnf(b1)), AT::id(s)));
    }
    case Formula::Kind::Conj: {
      const Formula b1 = b.left(), b2 = b.right();
      const Formula fb1 = nnf(b1), fb2 = nnf(b2);
      const Formula n1 = f_neg(b1), n2 = f_neg(b2);
      AT inner = AT::comp(
          AT::tensor_and(AT::id(fb2),
                         AT::comp(f_sigma(b1, n2), AT::dist(fb1, n1, n2))),
          AT::comp(AT::assoc_l(Conn::And, fb2, fb1, Formula::disj(n1, n2)),
                   AT::tensor_and(AT::c_and(fb1, fb2),
                                  AT::id(Formula::disj(n1, n2)))));
      return AT::comp(f_sigma(b2, s), AT::tensor_or(inner, AT::id(s)));
    }
    default: {  // Disj
      const Formula b1 = b.left(), b2 = b.right();
      const Formula fb1 = nnf(b1), fb2 = nnf(b2);
      const Formula n1 = f_neg(b1), n2 = f_neg(b2);
      AT inner = AT::comp(
          AT::tensor_and(
              AT::comp(f_sigma(b1, fb2),
                       AT::comp(AT::c_or(Formula::conj(fb1, n1), fb2),
                                AT::dist_r(fb2, fb1, n1))),
              AT::id(n2)),
          AT::comp(AT::assoc_r(Conn::And, Formula::disj(fb2, fb1), n1, n2),
                   AT::tensor_and(AT::c_or(fb2, fb1),
                                  AT::id(Formula::conj(n1, n2)))));
      return AT::comp(f_sigma(b2, s), AT::tensor_or(inner, AT::id(s)));
    }
  }
}

inline AT f_arrow_rec(const ArrowTerm& f) {
  using K = ArrowTerm::Kind;
  auto F = [&](std::size_t i) { return nnf(f.indices()[i]); };
  switch (f.kind()) {
    case K::Id: return AT::id(F(0));
    case K::AssocR: return AT::assoc_r(f.conn(), F(0), F(1), F(2));
    case K::AssocL: return AT::assoc_l(f.conn(), F(0), F(1), F(2));
    case K::SymConj: return AT::c_and(F(0), F(1));
    case K::SymDisj: return AT::c_or(F(0), F(1));
    case K::Dist: return AT::dist(F(0), F(1), F(2));
    case K::Mix: return AT::mix(F(0), F(1));
    case K::DeltaConj: return f_delta(f.indices()[0], F(1));
    case K::SigmaDisj: return f_sigma(f.indices()[0], F(1));
    case K::Comp:
      return AT::comp(f_arrow_rec(f.fst()), f_arrow_rec(f.snd()));
    case K::Tensor:
      return AT::tensor(f.conn(), f_arrow_rec(f.fst()), f_arrow_rec(f.snd()));
    default:
      throw std::logic_error("f_arrow: derived generator not expanded");
  }
}

}  // namespace detail

/// F on arrows: a term whose crowns are letters and whose index formulas are
/// in negation normal form, of type f_object(source) ⊢ f_object(target).
/// Derived generators are expanded first.
inline ArrowTerm f_arrow(const ArrowTerm& f) {
  (void)type_of(f);
  return detail::f_arrow_rec(expand_derived(f));
}

/// The isomorphism i_A : A ⊢ FA.
inline ArrowTerm iso_i(const Formula& a) {
  using AT = ArrowTerm;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return AT::id(a);
    case Formula::Kind::Conj:
    case Formula::Kind::Disj:
      return AT::tensor(a.conn(), iso_i(a.left()), iso_i(a.right()));
    default: {
      const Formula b = a.sub();
      switch (b.kind()) {
        case Formula::Kind::Atom:
          return AT::id(a);  // i_{~p} = 1_{~p}
        case Formula::Kind::Neg:
          return AT::comp(iso_i(b.sub()), AT::nn_elim(b.sub()));
        case Formula::Kind::Conj:
          return AT::comp(
              AT::tensor_or(iso_i(Formula::neg(b.left())),
                            iso_i(Formula::neg(b.right()))),
              AT::dm_and(b.left(), b.right()));
        default:
          return AT::comp(
              AT::tensor_and(iso_i(Formula::neg(b.left())),
                             iso_i(Formula::neg(b.right()))),
              AT::dm_or(b.left(), b.right()));
      }
    }
  }
}

/// The inverse isomorphism i_A^{-1} : FA ⊢ A.
inline ArrowTerm iso_i_inv(const Formula& a) {
  using AT = ArrowTerm;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return AT::id(a);
    case Formula::Kind::Conj:
    case Formula::Kind::Disj:
      return AT::tensor(a.conn(), iso_i_inv(a.left()), iso_i_inv(a.right()));
    default: {
      const Formula b = a.sub();
      switch (b.kind()) {
        case Formula::Kind::Atom:
          return AT::id(a);
        case Formula::Kind::Neg:
          return AT::comp(AT::nn_intro(b.sub()), iso_i_inv(b.sub()));
        case Formula::Kind::Conj:
          return AT::comp(
              AT::dm_and_inv(b.left(), b.right()),
              AT::tensor_or(iso_i_inv(Formula::neg(b.left())),
                            iso_i_inv(Formula::neg(b.right()))));
        default:
          return AT::comp(
              AT::dm_or_inv(b.left(), b.right()),
              AT::tensor_and(iso_i_inv(Formula::neg(b.left())),
                             iso_i_inv(Formula::neg(b.right()))));
      }
    }
  }
}

}  // namespace pnet
