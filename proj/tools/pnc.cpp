/* SPDX-License-Identifier: Apache-2.0 */

// pnc — type-check, draw, normalize, translate and decide equality of
// proof terms in the theories ds, mds, pn, mpn, pn-neg and mpn-neg.
//
// Exit codes: 0 success (or "equal"), 1 unequal, 2 usage/parse/type error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pnet/io.hpp"
#include "pnet/pnet.hpp"
#include "pnet/translate.hpp"

namespace {

using namespace pnet;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
  }
};

Theory parse_theory(const std::string& name) {
  if (auto t = theory_from_name(name)) return *t;
  throw CLI::ValidationError(
      "--theory", "unknown theory '" + name +
                      "' (expected ds, mds, pn, mpn, pn-neg or mpn-neg)");
}

Env load_defs(const std::vector<std::string>& files) {
  Env env;
  for (const std::string& f : files) env = parse_definitions(slurp(f), env);
  return env;
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["equal"] = v.equal;
  switch (v.reason) {
    case Verdict::Reason::Equal: j["reason"] = "equal"; break;
    case Verdict::Reason::TypeMismatch: j["reason"] = "type-mismatch"; break;
    case Verdict::Reason::GraphMismatch: j["reason"] = "graph-mismatch"; break;
  }
  if (v.lhs_type) j["lhs_type"] = print_formula_typed(*v.lhs_type);
  if (v.rhs_type) j["rhs_type"] = print_formula_typed(*v.rhs_type);
  if (v.witness) {
    nlohmann::json blk = nlohmann::json::array();
    for (const Endpoint& e : *v.witness)
      blk.push_back({e.target ? "t" : "s", e.pos});
    j["witness"] = blk;
  }
  return j;
}

std::string block_text(const Block& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ",";
    out += to_string(b[i]);
  }
  return out + "}";
}

int cmd_check(const std::vector<std::string>& files, Theory theory) {
  Env env;
  for (const std::string& path : files) {
    env = parse_definitions(slurp(path), env);
  }
  for (const std::string& name : env.order) {
    if (const ArrowTerm* f = env.lookup_arrow(name)) {
      if (auto why = check_theory_explain(*f, theory))
        throw TheoryError(name + ": " + *why);
      std::cout << name << " : " << print_formula_typed(type_of(*f)) << "\n";
    } else {
      std::cout << name << " = " << print_formula(env.formulas.at(name))
                << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pnc — proof-net calculus toolkit.\n"
      "Occurrence positions in graphs are 0-based; DOT output draws sources "
      "on the top row and targets on the bottom."};
  app.require_subcommand(1);
  std::string theory_name_opt = "pn-neg";

  // check
  auto* check = app.add_subcommand("check", "type- and theory-check a file "
                                            "of definitions");
  std::vector<std::string> check_files;
  check->add_option("files", check_files, "definition files (.pnc)")
      ->required();
  check->add_option("--theory", theory_name_opt, "theory")->capture_default_str();

  // graph
  auto* graph = app.add_subcommand("graph", "print part(Gf) of a term");
  std::string graph_term;
  std::vector<std::string> graph_defs;
  bool graph_json = false, graph_dot = false;
  std::string out_path;
  graph->add_option("term", graph_term, "arrow term")->required();
  graph->add_option("--theory", theory_name_opt, "theory")->capture_default_str();
  graph->add_option("--defs", graph_defs, "definition files to load first");
  graph->add_flag("--json", graph_json, "emit JSON");
  graph->add_flag("--dot", graph_dot, "emit Graphviz DOT");
  graph->add_option("--out", out_path, "write to a file instead of stdout");

  // eq
  auto* eq = app.add_subcommand("eq", "decide whether two terms are equal");
  std::string eq_lhs, eq_rhs;
  std::vector<std::string> eq_defs;
  bool eq_json = false;
  eq->add_option("lhs", eq_lhs, "first term")->required();
  eq->add_option("rhs", eq_rhs, "second term")->required();
  eq->add_option("--theory", theory_name_opt, "theory")->capture_default_str();
  eq->add_option("--defs", eq_defs, "definition files to load first");
  eq->add_flag("--json", eq_json, "emit the verdict as JSON");
  eq->add_option("--out", out_path, "write to a file instead of stdout");

  // normalize
  auto* normalize =
      app.add_subcommand("normalize", "develop a term into a factor stack");
  std::string norm_term;
  std::vector<std::string> norm_defs;
  normalize->add_option("term", norm_term, "arrow term")->required();
  normalize->add_option("--theory", theory_name_opt, "theory")->capture_default_str();
  normalize->add_option("--defs", norm_defs, "definition files");
  normalize->add_option("--out", out_path, "write to a file instead of stdout");

  // translate
  auto* translate = app.add_subcommand(
      "translate", "rewrite a pn-neg/mpn-neg term into pn/mpn form");
  std::string tr_term, tr_to = "pn";
  std::vector<std::string> tr_defs;
  translate->add_option("term", tr_term, "arrow term")->required();
  translate->add_option("--to", tr_to, "target theory (pn or mpn)")->capture_default_str();
  translate->add_option("--theory", theory_name_opt, "source theory")->capture_default_str();
  translate->add_option("--defs", tr_defs, "definition files");
  translate->add_option("--out", out_path, "write to a file instead of stdout");

  // iso
  auto* iso = app.add_subcommand(
      "iso", "print the isomorphism i_A : A ⊢ FA (or its inverse)");
  std::string iso_formula;
  bool iso_inv = false;
  iso->add_option("formula", iso_formula, "formula A")->required();
  iso->add_flag("--inv", iso_inv, "print i_A^{-1} : FA ⊢ A instead");

  // axioms
  auto* axioms =
      app.add_subcommand("axioms", "list the equation catalog of a theory");
  bool ax_theorems = false;
  axioms->add_option("--theory", theory_name_opt, "theory")->capture_default_str();
  axioms->add_flag("--theorems", ax_theorems,
                   "list derived equations instead of axioms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints usage or help text
    return code == 0 ? 0 : 2;
  }

  try {
    Theory theory = parse_theory(theory_name_opt);
    Output out{out_path};

    if (*check) return cmd_check(check_files, theory);

    if (*graph) {
      Env env = load_defs(graph_defs);
      ArrowTerm f = parse_arrow(graph_term, &env);
      SplitEquivalence g = g_arrow(f, theory);
      if (graph_json) {
        out.write(to_json(g).dump() + "\n");
      } else if (graph_dot) {
        out.write(to_dot(g));
      } else {
        std::string text = std::to_string(g.src_size()) + " ⊢ " +
                           std::to_string(g.tgt_size()) + "\n";
        for (const Block& b : g.blocks()) text += block_text(b) + " ";
        text += "\n";
        out.write(text);
      }
      return 0;
    }

    if (*eq) {
      Env env = load_defs(eq_defs);
      ArrowTerm lhs = parse_arrow(eq_lhs, &env);
      ArrowTerm rhs = parse_arrow(eq_rhs, &env);
      Verdict v = equal_in(lhs, rhs, theory);
      if (eq_json) {
        out.write(verdict_json(v).dump() + "\n");
      } else if (v.equal) {
        out.write("equal\n");
      } else if (v.reason == Verdict::Reason::TypeMismatch) {
        out.write("unequal: type mismatch: " +
                  print_formula_typed(*v.lhs_type) + "  vs  " +
                  print_formula_typed(*v.rhs_type) + "\n");
      } else {
        out.write("unequal: graphs differ at block " +
                  block_text(*v.witness) + "\n");
      }
      return v.equal ? 0 : 1;
    }

    if (*normalize) {
      Env env = load_defs(norm_defs);
      ArrowTerm f = parse_arrow(norm_term, &env);
      if (auto why = check_theory_explain(f, theory)) throw TheoryError(*why);
      ArrowTerm d = develop(f);
      // Factor stack, topmost applied last.
      std::vector<ArrowTerm> factors;
      ArrowTerm cur = d;
      while (cur.kind() == ArrowTerm::Kind::Comp) {
        factors.push_back(cur.fst());
        cur = cur.snd();
      }
      factors.push_back(cur);
      std::string text;
      for (const ArrowTerm& x : factors) text += print_arrow(x) + "\n";
      out.write(text);
      return 0;
    }

    if (*translate) {
      if (theory != Theory::PNNeg && theory != Theory::MPNNeg)
        throw TheoryError("translate expects --theory=pn-neg or mpn-neg");
      if (tr_to != "pn" && tr_to != "mpn")
        throw TheoryError("translate --to expects pn or mpn");
      Theory target = tr_to == "pn" ? Theory::PN : Theory::MPN;
      Env env = load_defs(tr_defs);
      ArrowTerm f = parse_arrow(tr_term, &env);
      if (auto why = check_theory_explain(f, theory)) throw TheoryError(*why);
      ArrowTerm Ff = f_arrow(f);
      if (auto why = check_theory_explain(Ff, target))
        throw TheoryError("translated term fails " + theory_name(target) +
                          ": " + *why);
      out.write(print_arrow(Ff) + "\n");
      return 0;
    }

    if (*iso) {
      Formula a = parse_formula(iso_formula);
      out.write(print_arrow(iso_inv ? iso_i_inv(a) : iso_i(a)) + "\n");
      return 0;
    }

    if (*axioms) {
      const auto& catalog =
          ax_theorems ? theorem_catalog(theory) : axiom_catalog(theory);
      std::string text;
      for (const EquationSchema& s : catalog) text += print_schema(s) + "\n";
      text += std::to_string(catalog.size()) + " schemata\n";
      out.write(text);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
