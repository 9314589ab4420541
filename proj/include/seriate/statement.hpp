#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "seriate/universe.hpp"

namespace seriate::lang {

enum class TokKind {
  point, var, op, lparen, rparen, lbrack, rbrack, lbrace, rbrace,
  comma, semi, slash, underscore, tilde,
  kw_line, kw_ser, kw_ring, kw_fam, kw_area,  // "L(", "SL(", "RING(", "S2!(", "A!("
  end,
};

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos = 0;
};

enum class SyntaxErrc { lex, parse, negated_map_target };

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SyntaxErrc code, std::size_t pos, const std::string& msg);
  SyntaxErrc code() const noexcept { return code_; }
  std::size_t pos() const noexcept { return pos_; }

 private:
  SyntaxErrc code_;
  std::size_t pos_;
};

std::vector<Token> lex(const std::string& src);

enum class Kind { point, var, line, seriating, ring, between, family, area, negation, binary };
enum class Op { and_, or_, implies, iff, maps_to, maps_both, identity, sum, difference };

// point/var: name. line/seriating: args = e1, e2, then the argument list.
// ring: args = listed points, name = var. between: args = 3 points, name = var.
// family: name = var, children = the two E-row line terms if given.
// area: name = var, args = boundary var if given.
struct Formula {
  Kind kind = Kind::point;
  Op op = Op::and_;
  std::string name;
  std::vector<std::string> args;
  std::vector<Formula> children;
  std::size_t pos = 0;  // source offset; not part of equality

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.kind == b.kind && a.op == b.op && a.name == b.name && a.args == b.args && a.children == b.children;
  }

  static Formula point(std::string n) { return {Kind::point, Op::and_, std::move(n), {}, {}, 0}; }
  static Formula var(std::string n) { return {Kind::var, Op::and_, std::move(n), {}, {}, 0}; }
  static Formula neg(Formula f) { return {Kind::negation, Op::and_, {}, {}, {std::move(f)}, 0}; }
  static Formula bin(Op op, Formula l, Formula r) { return {Kind::binary, op, {}, {}, {std::move(l), std::move(r)}, 0}; }
};

Formula parse(const std::string& src);
std::string pretty(const Formula& f);
std::string_view op_text(Op op);
// Indented tree dump.
std::string ast_dump(const Formula& f);

using Referent = std::variant<PointId, Line>;

struct Environment {
  std::map<std::string, std::vector<Referent>> vars;
  std::map<std::string, PointId> names;
};

enum class Betweenness { interval, free };

struct EvalOptions {
  Betweenness betweenness = Betweenness::interval;
};

enum class EvalErrc { unbound_name, dimension_mix, bad_difference, type_mismatch };

class EvalError : public std::runtime_error {
 public:
  EvalError(EvalErrc code, const std::string& msg);
  EvalErrc code() const noexcept { return code_; }

 private:
  EvalErrc code_;
};

std::string_view to_string(EvalErrc code) noexcept;
std::string_view to_string(SyntaxErrc code) noexcept;

bool evaluate(const Formula& f, const ModelUniverse& u, const Environment& env, const EvalOptions& opt = {});

}  // namespace seriate::lang
