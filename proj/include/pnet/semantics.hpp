/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pnet/arrows.hpp"
#include "pnet/brauer.hpp"
#include "pnet/formula.hpp"

namespace pnet {

/// On objects G counts letter occurrences.
inline std::size_t g_object(const Formula& a) { return letter_count(a); }

namespace detail {

inline std::uint32_t u32(std::size_t n) { return static_cast<std::uint32_t>(n); }

// Structural recursion over a term containing only the primitive
// generators (callers expand derived generators first).
inline SplitEquivalence g_rec(const ArrowTerm& f) {
  using K = ArrowTerm::Kind;
  switch (f.kind()) {
    case K::Id:
    case K::AssocR:
    case K::AssocL:
    case K::Dist:
    case K::Mix: {
      std::size_t n = 0;
      for (const Formula& a : f.indices()) n += letter_count(a);
      return identity(n);
    }
    case K::SymConj: {
      // c/\_{A,B} : A/\B ⊢ B/\A — A's letters shift right by GB, B's left
      // by GA, so (m-n-GA)(m-n+GB) = 0.
      std::size_t ga = letter_count(f.indices()[0]);
      std::size_t gb = letter_count(f.indices()[1]);
      std::vector<Block> blocks;
      for (std::size_t m = 0; m < ga; ++m)
        blocks.push_back({src_ep(u32(m)), tgt_ep(u32(m + gb))});
      for (std::size_t m = 0; m < gb; ++m)
        blocks.push_back({src_ep(u32(ga + m)), tgt_ep(u32(m))});
      return SplitEquivalence(ga + gb, ga + gb, std::move(blocks));
    }
    case K::SymDisj: {
      // c\/_{A,B} : B\/A ⊢ A\/B — the mirror image of the c/\ clause.
      std::size_t ga = letter_count(f.indices()[0]);
      std::size_t gb = letter_count(f.indices()[1]);
      std::vector<Block> blocks;
      for (std::size_t n = 0; n < gb; ++n)
        blocks.push_back({src_ep(u32(n)), tgt_ep(u32(n + ga))});
      for (std::size_t n = 0; n < ga; ++n)
        blocks.push_back({src_ep(u32(gb + n)), tgt_ep(u32(n))});
      return SplitEquivalence(ga + gb, ga + gb, std::move(blocks));
    }
    case K::DeltaConj: {
      // A ⊢ A/\(~B\/B): transversals on the stem, caps |m-n| = GB on the
      // crown.
      std::size_t gb = letter_count(f.indices()[0]);
      std::size_t ga = letter_count(f.indices()[1]);
      std::vector<Block> blocks;
      for (std::size_t m = 0; m < ga; ++m)
        blocks.push_back({src_ep(u32(m)), tgt_ep(u32(m))});
      for (std::size_t k = 0; k < gb; ++k)
        blocks.push_back({tgt_ep(u32(ga + k)), tgt_ep(u32(ga + gb + k))});
      return SplitEquivalence(ga, ga + 2 * gb, std::move(blocks));
    }
    case K::SigmaDisj: {
      // (B/\~B)\/A ⊢ A: cups |m-n| = GB on the crown, transversals on the
      // stem.
      std::size_t gb = letter_count(f.indices()[0]);
      std::size_t ga = letter_count(f.indices()[1]);
      std::vector<Block> blocks;
      for (std::size_t k = 0; k < gb; ++k)
        blocks.push_back({src_ep(u32(k)), src_ep(u32(gb + k))});
      for (std::size_t k = 0; k < ga; ++k)
        blocks.push_back({src_ep(u32(2 * gb + k)), tgt_ep(u32(k))});
      return SplitEquivalence(2 * gb + ga, ga, std::move(blocks));
    }
    case K::Comp:
      return compose(g_rec(f.fst()), g_rec(f.snd()));
    case K::Tensor:
      return shift_union(g_rec(f.fst()), g_rec(f.snd()));
    default:
      throw std::logic_error("g_rec: derived generator not expanded: " +
                             print_arrow(f));
  }
}

}  // namespace detail

/// The Brauerian split equivalence of an arrow term, of type
/// g_object(source) ⊢ g_object(target). Validates typing and theory
/// membership first.
inline SplitEquivalence g_arrow(const ArrowTerm& f, Theory t) {
  if (auto why = check_theory_explain(f, t))
    throw TheoryError("g_arrow: " + *why);
  (void)type_of(f);
  return detail::g_rec(expand_derived(f));
}

/// One transversal of part(Gf): the n-th source occurrence is tied to the
/// m-th target occurrence of the same letter. Positions are 0-based.
struct LinkedPair {
  std::size_t src_pos = 0;
  std::size_t tgt_pos = 0;
  Letter letter;

  friend bool operator==(const LinkedPair&, const LinkedPair&) = default;
};

/// The transversals of g_arrow(f), with the letter at each end.
inline std::vector<LinkedPair> linked(const ArrowTerm& f, Theory t) {
  ArrowType ty = type_of(f);
  SplitEquivalence g = g_arrow(f, t);
  std::vector<LinkedPair> out;
  for (const Block& b : g.blocks()) {
    if (b.size() == 2 && !b[0].target && b[1].target) {
      LinkedPair lp;
      lp.src_pos = b[0].pos;
      lp.tgt_pos = b[1].pos;
      lp.letter = letter_at(ty.source, b[0].pos).letter;
      out.push_back(std::move(lp));
    }
  }
  return out;
}

}  // namespace pnet
