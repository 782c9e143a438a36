/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pnet {

/// The six equational theories the library decides equality for.
/// DS has /\, \/ only; PN restricts ~ to letters; PN¬ allows ~ anywhere.
/// The M-variants add the mix arrow m : A /\ B ⊢ A \/ B.
enum class Theory { DS, MDS, PN, MPN, PNNeg, MPNNeg };

/// Binary connective selector, used by the associativity arrows and by
/// tensoring of arrow terms.
enum class Conn { And, Or };

inline bool has_mix(Theory t) {
  return t == Theory::MDS || t == Theory::MPN || t == Theory::MPNNeg;
}

inline std::string theory_name(Theory t) {
  switch (t) {
    case Theory::DS: return "ds";
    case Theory::MDS: return "mds";
    case Theory::PN: return "pn";
    case Theory::MPN: return "mpn";
    case Theory::PNNeg: return "pn-neg";
    case Theory::MPNNeg: return "mpn-neg";
  }
  return "?";
}

inline std::optional<Theory> theory_from_name(std::string_view s) {
  if (s == "ds") return Theory::DS;
  if (s == "mds") return Theory::MDS;
  if (s == "pn") return Theory::PN;
  if (s == "mpn") return Theory::MPN;
  if (s == "pn-neg" || s == "pnneg") return Theory::PNNeg;
  if (s == "mpn-neg" || s == "mpnneg") return Theory::MPNNeg;
  return std::nullopt;
}

inline const std::vector<Theory>& all_theories() {
  static const std::vector<Theory> ts = {Theory::DS,  Theory::MDS,
                                         Theory::PN,  Theory::MPN,
                                         Theory::PNNeg, Theory::MPNNeg};
  return ts;
}

/// Ill-typed composition, reported with the offending formulas and the
/// path to the composition node.
struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A generator or index formula not admissible in the requested theory.
struct TheoryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error with position and the tokens that would have been accepted.
struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  std::vector<std::string> expected;
  ParseError(const std::string& msg, int ln, int cl,
             std::vector<std::string> exp = {})
      : std::runtime_error(msg + " at " + std::to_string(ln) + ":" +
                           std::to_string(cl)),
        line(ln), col(cl), expected(std::move(exp)) {}
};

}  // namespace pnet
