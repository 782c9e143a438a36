/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cassert>
#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pnet/theory.hpp"

namespace pnet {

/// Propositional letters are plain identifiers; equality is by name and
/// ordering is lexicographic.
using Letter = std::string;

/// Immutable formula tree over letters with ~, /\ and \/.
/// Structural equality only: (p /\ q) and (q /\ p) are different formulas.
class Formula {
 public:
  enum class Kind { Atom, Neg, Conj, Disj };

  static Formula atom(Letter name) {
    assert(!name.empty());
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->letter = std::move(name);
    return Formula(std::move(n));
  }
  static Formula neg(Formula a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->a = a.n_;
    return Formula(std::move(n));
  }
  static Formula conj(Formula a, Formula b) {
    return mk_binary(Kind::Conj, std::move(a), std::move(b));
  }
  static Formula disj(Formula a, Formula b) {
    return mk_binary(Kind::Disj, std::move(a), std::move(b));
  }
  static Formula binary(Conn c, Formula a, Formula b) {
    return c == Conn::And ? conj(std::move(a), std::move(b))
                          : disj(std::move(a), std::move(b));
  }

  Kind kind() const { return n_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_neg() const { return kind() == Kind::Neg; }
  bool is_binary() const {
    return kind() == Kind::Conj || kind() == Kind::Disj;
  }
  Conn conn() const {
    assert(is_binary());
    return kind() == Kind::Conj ? Conn::And : Conn::Or;
  }
  const Letter& letter() const {
    assert(is_atom());
    return n_->letter;
  }
  Formula sub() const {
    assert(is_neg());
    return Formula(n_->a);
  }
  Formula left() const {
    assert(is_binary());
    return Formula(n_->a);
  }
  Formula right() const {
    assert(is_binary());
    return Formula(n_->b);
  }

  friend bool operator==(const Formula& x, const Formula& y) {
    if (x.n_ == y.n_) return true;
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
      case Kind::Atom: return x.letter() == y.letter();
      case Kind::Neg: return x.sub() == y.sub();
      default: return x.left() == y.left() && x.right() == y.right();
    }
  }
  friend bool operator!=(const Formula& x, const Formula& y) {
    return !(x == y);
  }

 private:
  struct Node {
    Kind kind;
    Letter letter;
    std::shared_ptr<const Node> a, b;
  };
  static Formula mk_binary(Kind k, Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = a.n_;
    n->b = b.n_;
    return Formula(std::move(n));
  }
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Number of letter occurrences in A; negation hides nothing.
inline std::size_t letter_count(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atom: return 1;
    case Formula::Kind::Neg: return letter_count(a.sub());
    default: return letter_count(a.left()) + letter_count(a.right());
  }
}

/// One letter occurrence: the letter itself and whether it sits under an
/// odd number of negations.
struct LetterOccurrence {
  Letter letter;
  bool negated = false;
};

namespace detail {
inline bool letter_at_rec(const Formula& a, std::size_t& k, bool neg,
                          LetterOccurrence& out) {
  switch (a.kind()) {
    case Formula::Kind::Atom:
      if (k == 0) {
        out = {a.letter(), neg};
        return true;
      }
      --k;
      return false;
    case Formula::Kind::Neg:
      return letter_at_rec(a.sub(), k, !neg, out);
    default:
      if (letter_at_rec(a.left(), k, neg, out)) return true;
      return letter_at_rec(a.right(), k, neg, out);
  }
}
}  // namespace detail

/// The k-th letter occurrence of A, reading left to right, 0-based.
inline LetterOccurrence letter_at(const Formula& a, std::size_t k) {
  LetterOccurrence out;
  std::size_t i = k;
  if (!detail::letter_at_rec(a, i, false, out))
    throw std::out_of_range("letter_at: index " + std::to_string(k) +
                            " out of range (formula has " +
                            std::to_string(letter_count(a)) + " letters)");
  return out;
}

namespace detail {
inline Formula nnf_pos(const Formula& a);
inline Formula nnf_neg(const Formula& a);

inline Formula nnf_pos(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atom: return a;
    case Formula::Kind::Neg: return nnf_neg(a.sub());
    case Formula::Kind::Conj:
      return Formula::conj(nnf_pos(a.left()), nnf_pos(a.right()));
    default:
      return Formula::disj(nnf_pos(a.left()), nnf_pos(a.right()));
  }
}

inline Formula nnf_neg(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atom: return Formula::neg(a);
    case Formula::Kind::Neg: return nnf_pos(a.sub());
    case Formula::Kind::Conj:
      return Formula::disj(nnf_neg(a.left()), nnf_neg(a.right()));
    default:
      return Formula::conj(nnf_neg(a.left()), nnf_neg(a.right()));
  }
}
}  // namespace detail

/// Negation normal form: double negations cancel and ~ is pushed down to
/// letters. Letter occurrences keep their count and left-to-right order.
inline Formula nnf(const Formula& a) { return detail::nnf_pos(a); }

/// Language membership for a theory's objects. DS/MDS forbid ~ entirely,
/// PN/MPN allow ~ only immediately over a letter, PN¬/MPN¬ are unrestricted.
inline bool check_language(const Formula& a, Theory t) {
  switch (t) {
    case Theory::DS:
    case Theory::MDS:
      switch (a.kind()) {
        case Formula::Kind::Atom: return true;
        case Formula::Kind::Neg: return false;
        default:
          return check_language(a.left(), t) && check_language(a.right(), t);
      }
    case Theory::PN:
    case Theory::MPN:
      switch (a.kind()) {
        case Formula::Kind::Atom: return true;
        case Formula::Kind::Neg: return a.sub().is_atom();
        default:
          return check_language(a.left(), t) && check_language(a.right(), t);
      }
    default:
      return true;
  }
}

// ---------------------------------------------------------------------------
// Text form. Atoms are identifiers, `~A`, `A /\ B`, `A \/ B`; binary
// connectives are non-associative, so nested binaries need parentheses.
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
  enum class Type {
    Ident, LParen, RParen, Comma, Tilde, AndOp, OrOp, Dot, Assign, Semi, End
  };
  Type type;
  std::string text;
  int line = 1, col = 1;
};

inline const char* token_name(Token::Type t) {
  switch (t) {
    case Token::Type::Ident: return "identifier";
    case Token::Type::LParen: return "'('";
    case Token::Type::RParen: return "')'";
    case Token::Type::Comma: return "','";
    case Token::Type::Tilde: return "'~'";
    case Token::Type::AndOp: return "'/\\'";
    case Token::Type::OrOp: return "'\\/'";
    case Token::Type::Dot: return "'.'";
    case Token::Type::Assign: return "':='";
    case Token::Type::Semi: return "';'";
    case Token::Type::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  // Parsers are recursive-descent; cap nesting so hostile input fails with
  // a ParseError instead of exhausting the stack. Composition chains do not
  // nest, so the limit only constrains parentheses and unary negation.
  static constexpr int kMaxDepth = 256;
  void enter() {
    if (++depth_ > kMaxDepth)
      throw ParseError("nesting too deep", tok_.line, tok_.col);
  }
  void leave() { --depth_; }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }
  Token expect(Token::Type ty) {
    if (tok_.type != ty)
      throw ParseError(std::string("expected ") + token_name(ty) + ", found " +
                           describe(tok_),
                       tok_.line, tok_.col, {token_name(ty)});
    return next();
  }
  static std::string describe(const Token& t) {
    if (t.type == Token::Type::Ident) return "'" + t.text + "'";
    return token_name(t.type);
  }

 private:
  void advance() {
    skip_ws();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::Type::End, "", line_, col_};
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        bump();
      }
      tok_.type = Token::Type::Ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    switch (c) {
      case '(': bump(); tok_ = mk(Token::Type::LParen, "("); return;
      case ')': bump(); tok_ = mk(Token::Type::RParen, ")"); return;
      case ',': bump(); tok_ = mk(Token::Type::Comma, ","); return;
      case '~': bump(); tok_ = mk(Token::Type::Tilde, "~"); return;
      case ';': bump(); tok_ = mk(Token::Type::Semi, ";"); return;
      case '.': bump(); tok_ = mk(Token::Type::Dot, "."); return;
      case '/':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '\\') {
          bump(); bump();
          tok_ = mk(Token::Type::AndOp, "/\\");
          return;
        }
        break;
      case '\\':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
          bump(); bump();
          tok_ = mk(Token::Type::OrOp, "\\/");
          return;
        }
        break;
      case ':':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
          bump(); bump();
          tok_ = mk(Token::Type::Assign, ":=");
          return;
        }
        break;
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

  Token mk(Token::Type ty, const char* text) {
    return {ty, text, tok_.line, tok_.col};
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {  // line comment
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  int depth_ = 0;
  Token tok_{Token::Type::End, "", 1, 1};
};

struct DepthGuard {
  Lexer& lx;
  explicit DepthGuard(Lexer& l) : lx(l) { lx.enter(); }
  ~DepthGuard() { lx.leave(); }
};

/// Hook for resolving identifiers inside formulas; by default every
/// identifier is an atom. Definition files may alias formulas by name.
struct FormulaEnv {
  virtual ~FormulaEnv() = default;
  virtual const Formula* lookup_formula(const std::string&) const {
    return nullptr;
  }
};

inline Formula parse_formula_expr(Lexer& lx, const FormulaEnv* env);

inline Formula parse_formula_unary(Lexer& lx, const FormulaEnv* env) {
  DepthGuard guard(lx);
  const Token& t = lx.peek();
  switch (t.type) {
    case Token::Type::Tilde:
      lx.next();
      return Formula::neg(parse_formula_unary(lx, env));
    case Token::Type::Ident: {
      Token id = lx.next();
      if (env) {
        if (const Formula* f = env->lookup_formula(id.text)) return *f;
      }
      return Formula::atom(id.text);
    }
    case Token::Type::LParen: {
      lx.next();
      Formula f = parse_formula_expr(lx, env);
      lx.expect(Token::Type::RParen);
      return f;
    }
    default:
      throw ParseError("expected a formula, found " + Lexer::describe(t),
                       t.line, t.col, {"identifier", "'~'", "'('"});
  }
}

inline Formula parse_formula_expr(Lexer& lx, const FormulaEnv* env) {
  Formula lhs = parse_formula_unary(lx, env);
  const Token& t = lx.peek();
  if (t.type == Token::Type::AndOp || t.type == Token::Type::OrOp) {
    Conn c = t.type == Token::Type::AndOp ? Conn::And : Conn::Or;
    lx.next();
    Formula rhs = parse_formula_unary(lx, env);
    // Non-associative: a second binary connective at the same level needs
    // explicit grouping.
    const Token& u = lx.peek();
    if (u.type == Token::Type::AndOp || u.type == Token::Type::OrOp)
      throw ParseError(
          "binary connectives do not associate; use parentheses", u.line,
          u.col, {"')'"});
    return Formula::binary(c, lhs, rhs);
  }
  return lhs;
}

}  // namespace detail

inline Formula parse_formula(std::string_view text,
                             const detail::FormulaEnv* env = nullptr) {
  detail::Lexer lx(text);
  Formula f = detail::parse_formula_expr(lx, env);
  const detail::Token& t = lx.peek();
  if (t.type != detail::Token::Type::End)
    throw ParseError("trailing input after formula: " + detail::Lexer::describe(t),
                     t.line, t.col);
  return f;
}

namespace detail {
inline void print_formula_rec(const Formula& f, std::string& out,
                              bool parens_if_binary) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.letter();
      return;
    case Formula::Kind::Neg:
      out += '~';
      print_formula_rec(f.sub(), out, true);
      return;
    default: {
      if (parens_if_binary) out += '(';
      print_formula_rec(f.left(), out, true);
      out += f.kind() == Formula::Kind::Conj ? " /\\ " : " \\/ ";
      print_formula_rec(f.right(), out, true);
      if (parens_if_binary) out += ')';
      return;
    }
  }
}
}  // namespace detail

/// Canonical text form; parse_formula(print_formula(A)) == A.
inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_formula_rec(f, out, false);
  return out;
}

}  // namespace pnet
