/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pnet/arrows.hpp"
#include "pnet/brauer.hpp"
#include "pnet/semantics.hpp"

namespace pnet {

/// Outcome of an equality query. On a graph mismatch the witness is the
/// lexicographically least block present in exactly one of the two
/// partitions, for reproducible error messages.
struct Verdict {
  enum class Reason { Equal, TypeMismatch, GraphMismatch };
  bool equal = false;
  Reason reason = Reason::Equal;
  std::optional<Block> witness;
  std::optional<ArrowType> lhs_type, rhs_type;
};

/// Decides f = g in the free category of theory t by comparing types and
/// Brauerian graphs; coherence makes the graph comparison complete.
inline Verdict equal_in(const ArrowTerm& f, const ArrowTerm& g, Theory t) {
  if (auto why = check_theory_explain(f, t))
    throw TheoryError("left term: " + *why);
  if (auto why = check_theory_explain(g, t))
    throw TheoryError("right term: " + *why);
  Verdict v;
  v.lhs_type = type_of(f);
  v.rhs_type = type_of(g);
  if (!(*v.lhs_type == *v.rhs_type)) {
    v.equal = false;
    v.reason = Verdict::Reason::TypeMismatch;
    return v;
  }
  SplitEquivalence gf = g_arrow(f, t);
  SplitEquivalence gg = g_arrow(g, t);
  if (gf == gg) {
    v.equal = true;
    v.reason = Verdict::Reason::Equal;
    return v;
  }
  v.equal = false;
  v.reason = Verdict::Reason::GraphMismatch;
  // Witness: the least block of part(Gf) that part(Gg) lacks. Both graphs
  // partition the same endpoints, so this side of the difference is never
  // empty when they differ.
  std::vector<Block> diff;
  std::set_difference(gf.blocks().begin(), gf.blocks().end(),
                      gg.blocks().begin(), gg.blocks().end(),
                      std::back_inserter(diff));
  v.witness = diff.front();  // blocks are kept sorted
  return v;
}

/// Composes each path (edges listed in application order, first edge
/// applied first) and delegates to equal_in. Paths must be non-empty,
/// composable, and share endpoints.
inline Verdict commutes(const std::vector<ArrowTerm>& path1,
                        const std::vector<ArrowTerm>& path2, Theory t) {
  auto fold = [](const std::vector<ArrowTerm>& path, const char* which) {
    if (path.empty())
      throw std::invalid_argument(std::string(which) + " path is empty");
    ArrowTerm acc = path.front();
    for (std::size_t i = 1; i < path.size(); ++i)
      acc = ArrowTerm::comp(path[i], acc);
    return acc;
  };
  ArrowTerm f = fold(path1, "first");
  ArrowTerm g = fold(path2, "second");
  ArrowType tf = type_of(f);  // non-composable paths surface here
  ArrowType tg = type_of(g);
  if (!(tf == tg))
    throw TypeError("paths have different endpoints: " +
                    print_formula_typed(tf) + " vs " +
                    print_formula_typed(tg));
  return equal_in(f, g, t);
}

}  // namespace pnet
