#pragma once

// Propositional formulas: immutable AST, text grammar, evaluation.
//
// Grammar (whitespace insignificant):
//   formula := imp
//   imp     := or ("->" imp)?            right-associative
//   or      := and ("|" and)*            left-associative
//   and     := neg ("&" neg)*            left-associative
//   neg     := "~" neg | atom | "true" | "false" | "(" formula ")"
//   atom    := [a-z][A-Za-z0-9_]*        (not "true"/"false")

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nmc {

class Formula;

struct ParseError : std::runtime_error {
  ParseError(std::size_t off, std::vector<std::string> exp, const std::string& what)
      : std::runtime_error(what), offset(off), expected(std::move(exp)) {}
  std::size_t offset;
  std::vector<std::string> expected;
};

struct EvalError : std::runtime_error {
  EvalError(std::string atom_name, const std::string& what)
      : std::runtime_error(what), atom(std::move(atom_name)) {}
  std::string atom;
};

class Formula {
 public:
  enum class Kind { Atom, True, False, Not, And, Or, Implies };

  static Formula atom(std::string name) {
    if (!valid_atom_name(name))
      throw std::invalid_argument("invalid atom name: '" + name + "'");
    return Formula(std::make_shared<Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
  }
  static Formula truth() { return leaf(Kind::True); }
  static Formula falsity() { return leaf(Kind::False); }
  static Formula negate(Formula a) { return unary(Kind::Not, std::move(a)); }
  static Formula conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
  static Formula implies(Formula a, Formula b) {
    return binary(Kind::Implies, std::move(a), std::move(b));
  }

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  bool operator==(const Formula& o) const { return equal(node_.get(), o.node_.get()); }
  bool operator!=(const Formula& o) const { return !(*this == o); }

  static bool valid_atom_name(std::string_view s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    for (char c : s.substr(1))
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return s != "true" && s != "false";
  }

  void collect_atoms(std::set<std::string>& out) const {
    collect(node_.get(), out);
  }
  std::set<std::string> atoms() const {
    std::set<std::string> out;
    collect_atoms(out);
    return out;
  }

 private:
  struct Node {
    Kind kind;
    std::string name;  // Atom only
    std::shared_ptr<const Node> lhs, rhs;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula leaf(Kind k) {
    return Formula(std::make_shared<Node>(Node{k, {}, nullptr, nullptr}));
  }
  static Formula unary(Kind k, Formula a) {
    return Formula(std::make_shared<Node>(Node{k, {}, a.node_, nullptr}));
  }
  static Formula binary(Kind k, Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{k, {}, a.node_, b.node_}));
  }

  static bool equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind || a->name != b->name) return false;
    return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
  }

  static void collect(const Node* n, std::set<std::string>& out) {
    if (!n) return;
    if (n->kind == Kind::Atom) out.insert(n->name);
    collect(n->lhs.get(), out);
    collect(n->rhs.get(), out);
  }

  std::shared_ptr<const Node> node_;
};

using Valuation = std::map<std::string, bool>;

inline bool eval(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = v.find(f.atom_name());
      if (it == v.end())
        throw EvalError(f.atom_name(), "unbound atom '" + f.atom_name() + "'");
      return it->second;
    }
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Not: return !eval(f.lhs(), v);
    case Formula::Kind::And: return eval(f.lhs(), v) && eval(f.rhs(), v);
    case Formula::Kind::Or: return eval(f.lhs(), v) || eval(f.rhs(), v);
    case Formula::Kind::Implies: return !eval(f.lhs(), v) || eval(f.rhs(), v);
  }
  throw std::logic_error("unreachable formula kind");
}

namespace detail {

inline int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

inline void render_rec(const Formula& f, int min_prec, std::string& out) {
  const int p = precedence(f.kind());
  const bool parens = p < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Atom: out += f.atom_name(); break;
    case Formula::Kind::True: out += "true"; break;
    case Formula::Kind::False: out += "false"; break;
    case Formula::Kind::Not:
      out += '~';
      render_rec(f.lhs(), 4, out);
      break;
    case Formula::Kind::And:
      render_rec(f.lhs(), 3, out);
      out += " & ";
      render_rec(f.rhs(), 4, out);
      break;
    case Formula::Kind::Or:
      render_rec(f.lhs(), 2, out);
      out += " | ";
      render_rec(f.rhs(), 3, out);
      break;
    case Formula::Kind::Implies:
      render_rec(f.lhs(), 2, out);
      out += " -> ";
      render_rec(f.rhs(), 1, out);
      break;
  }
  if (parens) out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse_formula();
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input", "'&'", "'|'", "'->'"});
    return f;
  }

 private:
  Formula parse_formula() { return parse_imp(); }

  Formula parse_imp() {
    Formula left = parse_or();
    skip_ws();
    if (match("->")) {
      Formula right = parse_imp();
      return Formula::implies(std::move(left), std::move(right));
    }
    return left;
  }

  Formula parse_or() {
    Formula left = parse_and();
    skip_ws();
    while (peek('|')) {
      ++pos_;
      Formula right = parse_and();
      left = Formula::disj(std::move(left), std::move(right));
      skip_ws();
    }
    return left;
  }

  Formula parse_and() {
    Formula left = parse_neg();
    skip_ws();
    while (peek('&')) {
      ++pos_;
      Formula right = parse_neg();
      left = Formula::conj(std::move(left), std::move(right));
      skip_ws();
    }
    return left;
  }

  Formula parse_neg() {
    skip_ws();
    if (peek('~')) {
      ++pos_;
      return Formula::negate(parse_neg());
    }
    if (peek('(')) {
      ++pos_;
      Formula f = parse_formula();
      skip_ws();
      if (!peek(')')) fail({"')'"});
      ++pos_;
      return f;
    }
    if (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word == "true") return Formula::truth();
      if (word == "false") return Formula::falsity();
      return Formula::atom(std::move(word));
    }
    fail({"atom", "'true'", "'false'", "'~'", "'('"});
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  bool match(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "syntax error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += " or ";
      msg += expected[i];
    }
    throw ParseError(pos_, std::move(expected), msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Minimal-parenthesis rendering; parse(render(f)) == f.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_rec(f, 0, out);
  return out;
}

}  // namespace nmc
