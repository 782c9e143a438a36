/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>

#include <json.hpp>

#include "pnet/brauer.hpp"

namespace pnet {

/// {"src": n, "tgt": m, "pairs": [[["s",0],["t",0]], ...]} with blocks in
/// canonical order. Non-pair blocks serialize as longer arrays.
inline nlohmann::json to_json(const SplitEquivalence& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const Block& b : r.blocks()) {
    nlohmann::json blk = nlohmann::json::array();
    for (const Endpoint& e : b)
      blk.push_back({e.target ? "t" : "s", e.pos});
    pairs.push_back(std::move(blk));
  }
  return {{"src", r.src_size()}, {"tgt", r.tgt_size()}, {"pairs", pairs}};
}

inline SplitEquivalence split_equivalence_from_json(const nlohmann::json& j) {
  std::vector<Block> blocks;
  for (const auto& blk : j.at("pairs")) {
    Block b;
    for (const auto& e : blk) {
      std::string tag = e.at(0).get<std::string>();
      if (tag != "s" && tag != "t")
        throw std::invalid_argument("endpoint tag must be \"s\" or \"t\"");
      b.push_back({tag == "t", e.at(1).get<std::uint32_t>()});
    }
    blocks.push_back(std::move(b));
  }
  return SplitEquivalence(j.at("src").get<std::size_t>(),
                          j.at("tgt").get<std::size_t>(), std::move(blocks));
}

/// Graphviz rendering with source endpoints on the top row and target
/// endpoints on the bottom, matching the orientation of the diagrams the
/// library reproduces. Cups and caps come out as same-row arcs.
inline std::string to_dot(const SplitEquivalence& r) {
  std::string out = "graph split_equivalence {\n  rankdir=TB;\n"
                    "  node [shape=circle, fontsize=10, width=0.25];\n";
  out += "  { rank=min;";
  for (std::size_t i = 0; i < r.src_size(); ++i)
    out += " s" + std::to_string(i) + " [label=\"" + std::to_string(i) + "\"];";
  out += " }\n  { rank=max;";
  for (std::size_t i = 0; i < r.tgt_size(); ++i)
    out += " t" + std::to_string(i) + " [label=\"" + std::to_string(i) + "\"];";
  out += " }\n";
  auto node = [](const Endpoint& e) {
    return (e.target ? "t" : "s") + std::to_string(e.pos);
  };
  for (const Block& b : r.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) {
      bool same_row = b[i - 1].target == b[i].target;
      out += "  " + node(b[i - 1]) + " -- " + node(b[i]) +
             (same_row ? " [constraint=false, style=dashed];\n" : ";\n");
    }
  out += "}\n";
  return out;
}

}  // namespace pnet
