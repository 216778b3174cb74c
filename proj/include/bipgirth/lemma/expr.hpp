#pragma once

// Tiny arithmetic expression trees over exact rationals. Long composite
// inequalities are written once as text and evaluated from the parsed tree.
// Grammar: sum := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,
// unary := '-' unary | atom, atom := number | name | '(' sum ')'.
// Numbers may be decimals ("0.38"); they are read exactly.

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bipgirth/error.hpp"
#include "bipgirth/rational.hpp"

namespace bipgirth::lemma {

class Expr {
 public:
  using Bindings = std::map<std::string, Rational, std::less<>>;

  static Expr parse(std::string_view text) {
    Parser p{text, 0};
    Expr e;
    e.root_ = p.sum();
    p.skip();
    if (p.pos != text.size()) p.error("unexpected trailing input");
    return e;
  }

  Rational eval(const Bindings& env) const { return eval(*root_, env); }

 private:
  struct Node {
    char op = 0;  // '+', '-', '*', '/', 'n' (negate), 'c' (constant), 'v' (variable)
    Rational value;
    std::string name;
    std::shared_ptr<const Node> lhs, rhs;
  };
  using Ptr = std::shared_ptr<const Node>;

  struct Parser {
    std::string_view s;
    std::size_t pos;

    [[noreturn]] void error(const std::string& why) const {
      throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos) + " in '" + std::string(s) + "'");
    }
    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
      skip();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    static Ptr binary(char op, Ptr l, Ptr r) {
      auto n = std::make_shared<Node>();
      n->op = op;
      n->lhs = std::move(l);
      n->rhs = std::move(r);
      return n;
    }
    Ptr sum() {
      Ptr l = term();
      while (true) {
        if (eat('+')) l = binary('+', l, term());
        else if (eat('-')) l = binary('-', l, term());
        else return l;
      }
    }
    Ptr term() {
      Ptr l = unary();
      while (true) {
        if (eat('*')) l = binary('*', l, unary());
        else if (eat('/')) l = binary('/', l, unary());
        else return l;
      }
    }
    Ptr unary() {
      if (eat('-')) return binary('n', unary(), nullptr);
      return atom();
    }
    Ptr atom() {
      skip();
      if (eat('(')) {
        Ptr e = sum();
        if (!eat(')')) error("expected ')'");
        return e;
      }
      if (pos >= s.size()) error("unexpected end");
      auto n = std::make_shared<Node>();
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        Integer whole = 0, scale = 1;
        bool frac = false;
        for (; pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'); ++pos) {
          if (s[pos] == '.') {
            if (frac) error("second decimal point");
            frac = true;
            continue;
          }
          whole = whole * 10 + (s[pos] - '0');
          if (frac) scale *= 10;
        }
        n->op = 'c';
        n->value = Rational(whole, scale);
        return n;
      }
      if (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_') {
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        n->op = 'v';
        n->name = std::string(s.substr(start, pos - start));
        return n;
      }
      error("unexpected character");
    }
  };

  static Rational eval(const Node& n, const Bindings& env) {
    switch (n.op) {
      case 'c': return n.value;
      case 'v': {
        auto it = env.find(n.name);
        if (it == env.end()) throw Error(ErrorCode::PreconditionViolated, "unbound variable '" + n.name + "'");
        return it->second;
      }
      case 'n': return -eval(*n.lhs, env);
      case '+': return eval(*n.lhs, env) + eval(*n.rhs, env);
      case '-': return eval(*n.lhs, env) - eval(*n.rhs, env);
      case '*': return eval(*n.lhs, env) * eval(*n.rhs, env);
      case '/': {
        Rational d = eval(*n.rhs, env);
        if (d == 0) throw Error(ErrorCode::PreconditionViolated, "division by zero");
        return eval(*n.lhs, env) / d;
      }
    }
    throw Error(ErrorCode::PreconditionViolated, "corrupt expression");
  }

  Ptr root_;
};

}  // namespace bipgirth::lemma
