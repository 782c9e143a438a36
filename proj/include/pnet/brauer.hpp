/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnet {

/// One endpoint of a split equivalence: a source or target position.
/// Source endpoints order before target endpoints, positions ascending.
struct Endpoint {
  bool target = false;
  std::uint32_t pos = 0;

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

inline Endpoint src_ep(std::uint32_t pos) { return {false, pos}; }
inline Endpoint tgt_ep(std::uint32_t pos) { return {true, pos}; }

inline std::string to_string(const Endpoint& e) {
  return std::to_string(e.pos) + (e.target ? "t" : "s");
}

using Block = std::vector<Endpoint>;

/// A partition of the disjoint union of source positions [0, src) and
/// target positions [0, tgt). Brauerian when every class has exactly two
/// members. Values are immutable and kept in canonical form: each block
/// sorted, blocks sorted by first member, so equality is plain comparison.
class SplitEquivalence {
 public:
  SplitEquivalence(std::size_t src, std::size_t tgt, std::vector<Block> blocks)
      : src_(src), tgt_(tgt), blocks_(std::move(blocks)) {
    canonicalize();
  }

  std::size_t src_size() const { return src_; }
  std::size_t tgt_size() const { return tgt_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  bool is_brauerian() const {
    for (const Block& b : blocks_)
      if (b.size() != 2) return false;
    return true;
  }

  /// The blocks as ordered pairs; only meaningful for Brauerian values.
  std::vector<std::pair<Endpoint, Endpoint>> pairs() const {
    std::vector<std::pair<Endpoint, Endpoint>> out;
    out.reserve(blocks_.size());
    for (const Block& b : blocks_) {
      if (b.size() != 2)
        throw std::logic_error("pairs(): split equivalence is not Brauerian");
      out.emplace_back(b[0], b[1]);
    }
    return out;
  }

  friend bool operator==(const SplitEquivalence&,
                         const SplitEquivalence&) = default;

 private:
  void canonicalize() {
    std::vector<bool> seen(src_ + tgt_, false);
    auto index = [&](const Endpoint& e) -> std::size_t {
      if (!e.target && e.pos < src_) return e.pos;
      if (e.target && e.pos < tgt_) return src_ + e.pos;
      throw std::invalid_argument("endpoint " + to_string(e) +
                                  " out of range for " + std::to_string(src_) +
                                  " ⊢ " + std::to_string(tgt_));
    };
    for (Block& b : blocks_) {
      for (const Endpoint& e : b) {
        std::size_t i = index(e);
        if (seen[i])
          throw std::invalid_argument("endpoint " + to_string(e) +
                                      " occurs in two blocks");
        seen[i] = true;
      }
      std::sort(b.begin(), b.end());
    }
    // Uncovered endpoints become singleton classes.
    for (std::size_t i = 0; i < src_ + tgt_; ++i)
      if (!seen[i])
        blocks_.push_back({i < src_ ? src_ep(static_cast<std::uint32_t>(i))
                                    : tgt_ep(static_cast<std::uint32_t>(
                                          i - src_))});
    std::erase_if(blocks_, [](const Block& b) { return b.empty(); });
    std::sort(blocks_.begin(), blocks_.end());
  }

  std::size_t src_, tgt_;
  std::vector<Block> blocks_;
};

/// Raw check on unvalidated blocks: true iff they form a perfect pairing of
/// all endpoints (no reuse, no gap, no block of size other than two).
inline bool is_brauerian(std::size_t src, std::size_t tgt,
                         const std::vector<Block>& blocks) {
  std::vector<bool> seen(src + tgt, false);
  for (const Block& b : blocks) {
    if (b.size() != 2) return false;
    for (const Endpoint& e : b) {
      std::size_t i;
      if (!e.target && e.pos < src) i = e.pos;
      else if (e.target && e.pos < tgt) i = src + e.pos;
      else return false;
      if (seen[i]) return false;
      seen[i] = true;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
}

inline SplitEquivalence from_pairs(
    std::size_t src, std::size_t tgt,
    const std::vector<std::pair<Endpoint, Endpoint>>& ps) {
  std::vector<Block> blocks;
  blocks.reserve(ps.size());
  for (const auto& [a, b] : ps) blocks.push_back({a, b});
  return SplitEquivalence(src, tgt, std::move(blocks));
}

/// part(1_n) = {{m_s, m_t} | m < n}.
inline SplitEquivalence identity(std::size_t n) {
  std::vector<Block> blocks;
  blocks.reserve(n);
  for (std::size_t m = 0; m < n; ++m)
    blocks.push_back({src_ep(static_cast<std::uint32_t>(m)),
                      tgt_ep(static_cast<std::uint32_t>(m))});
  return SplitEquivalence(n, n, std::move(blocks));
}

namespace detail {
struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};
}  // namespace detail

/// Composition P∗R for R : X ⊢ Y and P : Y ⊢ Z (R acts first). R's target
/// endpoints and P's source endpoints are identified over the middle block Y,
/// connected components are formed, and each component keeps its surviving
/// X-source / Z-target endpoints. Components that lie wholly inside Y are
/// dropped; `dropped_loops`, when given, counts them (they arise in the mix
/// theories).
inline SplitEquivalence compose(const SplitEquivalence& p,
                                const SplitEquivalence& r,
                                std::size_t* dropped_loops = nullptr) {
  if (r.tgt_size() != p.src_size())
    throw std::invalid_argument(
        "compose: middle sizes differ (" + std::to_string(r.tgt_size()) +
        " vs " + std::to_string(p.src_size()) + ")");
  const std::size_t x = r.src_size(), y = r.tgt_size(), z = p.tgt_size();
  detail::UnionFind uf(x + y + z);
  auto r_index = [&](const Endpoint& e) {
    return e.target ? x + e.pos : e.pos;
  };
  auto p_index = [&](const Endpoint& e) {
    return e.target ? x + y + e.pos : x + e.pos;
  };
  for (const Block& b : r.blocks())
    for (std::size_t i = 1; i < b.size(); ++i)
      uf.unite(r_index(b[0]), r_index(b[i]));
  for (const Block& b : p.blocks())
    for (std::size_t i = 1; i < b.size(); ++i)
      uf.unite(p_index(b[0]), p_index(b[i]));

  std::vector<Block> comp(x + y + z);
  std::vector<std::size_t> middle_members(x + y + z, 0);
  for (std::size_t i = 0; i < x + y + z; ++i) {
    std::size_t root = uf.find(i);
    if (i < x)
      comp[root].push_back(src_ep(static_cast<std::uint32_t>(i)));
    else if (i < x + y)
      ++middle_members[root];
    else
      comp[root].push_back(tgt_ep(static_cast<std::uint32_t>(i - x - y)));
  }
  std::vector<Block> blocks;
  std::size_t loops = 0;
  for (std::size_t root = 0; root < comp.size(); ++root) {
    if (!comp[root].empty())
      blocks.push_back(std::move(comp[root]));
    else if (middle_members[root] >= 2)
      ++loops;
  }
  if (dropped_loops) *dropped_loops = loops;
  return SplitEquivalence(x, z, std::move(blocks));
}

/// Disjoint union with P laid out to the right of R: P's source positions
/// shift by R's source size and its target positions by R's target size.
inline SplitEquivalence shift_union(const SplitEquivalence& r,
                                    const SplitEquivalence& p) {
  std::vector<Block> blocks = r.blocks();
  const auto ds = static_cast<std::uint32_t>(r.src_size());
  const auto dt = static_cast<std::uint32_t>(r.tgt_size());
  for (const Block& b : p.blocks()) {
    Block shifted;
    shifted.reserve(b.size());
    for (const Endpoint& e : b)
      shifted.push_back(e.target ? tgt_ep(e.pos + dt) : src_ep(e.pos + ds));
    blocks.push_back(std::move(shifted));
  }
  return SplitEquivalence(r.src_size() + p.src_size(),
                          r.tgt_size() + p.tgt_size(), std::move(blocks));
}

inline std::string to_string(const SplitEquivalence& r) {
  std::string out = std::to_string(r.src_size()) + " ⊢ " +
                    std::to_string(r.tgt_size()) + " :";
  for (const Block& b : r.blocks()) {
    out += " {";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ",";
      out += to_string(b[i]);
    }
    out += "}";
  }
  return out;
}

}  // namespace pnet
