#include "seriate/statement.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace seriate::lang {

SyntaxError::SyntaxError(SyntaxErrc code, std::size_t pos, const std::string& msg)
    : std::runtime_error(std::string(to_string(code)) + " at " + std::to_string(pos) + ": " + msg), code_(code), pos_(pos) {}

EvalError::EvalError(EvalErrc code, const std::string& msg) : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

std::string_view to_string(SyntaxErrc code) noexcept {
  switch (code) {
    case SyntaxErrc::lex: return "LexError";
    case SyntaxErrc::parse: return "ParseError";
    case SyntaxErrc::negated_map_target: return "NegatedMapTarget";
  }
  return "SyntaxError";
}

std::string_view to_string(EvalErrc code) noexcept {
  switch (code) {
    case EvalErrc::unbound_name: return "UnboundName";
    case EvalErrc::dimension_mix: return "DimensionMix";
    case EvalErrc::bad_difference: return "BadDifference";
    case EvalErrc::type_mismatch: return "TypeMismatch";
  }
  return "EvalError";
}

// ---------------------------------------------------------------- lexer

std::vector<Token> lex(const std::string& src) {
  static const std::pair<const char*, TokKind> keywords[] = {
      {"RING(", TokKind::kw_ring}, {"S2!(", TokKind::kw_fam}, {"SL(", TokKind::kw_ser},
      {"A!(", TokKind::kw_area},   {"L(", TokKind::kw_line},
  };
  static const char* ops[] = {"<->", "<=>", "->", "=>", "\\/", "=", "&", "|", "+", "-"};

  std::vector<Token> out;
  std::size_t i = 0;
  auto name_suffix = [&](std::size_t start) {
    std::size_t j = start + 1;
    if (j < src.size() && src[j] == '^') {
      std::size_t k = j + 1;
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
      if (k == j + 1) throw SyntaxError(SyntaxErrc::lex, j, "caret must be followed by digits");
      j = k;
    }
    return j;
  };

  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(ch))) {
      bool matched = false;
      for (auto [kw, kind] : keywords) {
        if (src.compare(i, std::char_traits<char>::length(kw), kw) == 0) {
          std::size_t len = std::char_traits<char>::length(kw);
          out.push_back({kind, src.substr(i, len), i});
          i += len;
          matched = true;
          break;
        }
      }
      if (matched) continue;
      std::size_t j = name_suffix(i);
      out.push_back({TokKind::point, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::islower(static_cast<unsigned char>(ch))) {
      std::size_t j = name_suffix(i);
      out.push_back({TokKind::var, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const char* op : ops) {
      std::size_t len = std::char_traits<char>::length(op);
      if (src.compare(i, len, op) == 0) {
        out.push_back({TokKind::op, op, i});
        i += len;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    TokKind k;
    switch (ch) {
      case '(': k = TokKind::lparen; break;
      case ')': k = TokKind::rparen; break;
      case '[': k = TokKind::lbrack; break;
      case ']': k = TokKind::rbrack; break;
      case '{': k = TokKind::lbrace; break;
      case '}': k = TokKind::rbrace; break;
      case ',': k = TokKind::comma; break;
      case ';': k = TokKind::semi; break;
      case '/': k = TokKind::slash; break;
      case '_': k = TokKind::underscore; break;
      case '~': k = TokKind::tilde; break;
      default: throw SyntaxError(SyntaxErrc::lex, i, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({k, std::string(1, ch), i});
    ++i;
  }
  out.push_back({TokKind::end, "", src.size()});
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

Op op_of(const std::string& t) {
  if (t == "&") return Op::and_;
  if (t == "|" || t == "\\/") return Op::or_;
  if (t == "=>") return Op::implies;
  if (t == "<=>") return Op::iff;
  if (t == "->") return Op::maps_to;
  if (t == "<->") return Op::maps_both;
  if (t == "=") return Op::identity;
  if (t == "+") return Op::sum;
  return Op::difference;
}

// First negation reachable from a map target through groups, '&' and '|'.
const Formula* negated_target(const Formula& f) {
  if (f.kind == Kind::negation) return &f;
  if (f.kind == Kind::binary && (f.op == Op::and_ || f.op == Op::or_)) {
    if (auto* n = negated_target(f.children[0])) return n;
    return negated_target(f.children[1]);
  }
  return nullptr;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula formula() {
    Formula f = chain();
    if (peek().kind != TokKind::end) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(at_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[std::min(at_++, toks_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(SyntaxErrc::parse, peek().pos, msg); }

  const Token& expect(TokKind k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return take();
  }

  Formula chain() {
    Formula left = unary();
    while (peek().kind == TokKind::op) {
      const Token& t = take();
      Op op = op_of(t.text);
      Formula right = unary();
      if (op == Op::maps_to || op == Op::maps_both) {
        if (const Formula* n = negated_target(right)) {
          throw SyntaxError(SyntaxErrc::negated_map_target, n->pos, "a mapping target may not be negated");
        }
      }
      Formula b = Formula::bin(op, std::move(left), std::move(right));
      b.pos = t.pos;
      left = std::move(b);
    }
    return left;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::tilde: {
        take();
        Formula f = Formula::neg(unary());
        f.pos = t.pos;
        return f;
      }
      case TokKind::lparen: return group(TokKind::rparen, "')'");
      case TokKind::lbrack: return group(TokKind::rbrack, "']'");
      case TokKind::lbrace: return group(TokKind::rbrace, "'}'");
      default: return atom();
    }
  }

  Formula group(TokKind close, const char* what) {
    take();
    Formula f = chain();
    expect(close, what);
    return f;
  }

  std::string arg_name() {
    if (peek().kind != TokKind::point && peek().kind != TokKind::var) fail("expected a point or variable");
    return take().text;
  }

  Formula line_term(Kind kind, std::size_t pos) {
    Formula f{kind, Op::and_, {}, {}, {}, pos};
    f.args.push_back(expect(TokKind::point, "a point").text);
    expect(TokKind::comma, "','");
    f.args.push_back(expect(TokKind::point, "a point").text);
    if (peek().kind == TokKind::semi) {
      take();
      f.args.push_back(arg_name());
      while (peek().kind == TokKind::comma) {
        take();
        f.args.push_back(arg_name());
      }
    }
    expect(TokKind::rparen, "')'");
    return f;
  }

  Formula atom() {
    const Token& t = take();
    switch (t.kind) {
      case TokKind::point: {
        if (peek().kind != TokKind::slash) return {Kind::point, Op::and_, t.text, {}, {}, t.pos};
        Formula f{Kind::between, Op::and_, {}, {t.text}, {}, t.pos};
        take();
        f.args.push_back(expect(TokKind::point, "a point").text);
        expect(TokKind::slash, "'/'");
        if (peek().kind == TokKind::kw_line) {
          take();  // a point named L directly followed by its '('
          f.args.push_back("L");
        } else {
          f.args.push_back(expect(TokKind::point, "a point").text);
          expect(TokKind::lparen, "'('");
        }
        f.name = expect(TokKind::var, "a variable").text;
        expect(TokKind::rparen, "')'");
        return f;
      }
      case TokKind::var: return {Kind::var, Op::and_, t.text, {}, {}, t.pos};
      case TokKind::kw_line: return line_term(Kind::line, t.pos);
      case TokKind::kw_ser: return line_term(Kind::seriating, t.pos);
      case TokKind::kw_ring: {
        Formula f{Kind::ring, Op::and_, {}, {}, {}, t.pos};
        f.args.push_back(expect(TokKind::point, "a point").text);
        while (peek().kind == TokKind::comma) {
          take();
          f.args.push_back(expect(TokKind::point, "a point").text);
        }
        expect(TokKind::semi, "';'");
        f.name = expect(TokKind::var, "a variable").text;
        expect(TokKind::rparen, "')'");
        return f;
      }
      case TokKind::kw_fam: {
        Formula f{Kind::family, Op::and_, expect(TokKind::var, "a variable").text, {}, {}, t.pos};
        if (peek().kind == TokKind::comma) {
          for (int i = 0; i < 2; ++i) {
            expect(TokKind::comma, "','");
            const Token& kw = expect(TokKind::kw_line, "a line term");
            f.children.push_back(line_term(Kind::line, kw.pos));
          }
        }
        expect(TokKind::rparen, "')'");
        return f;
      }
      case TokKind::kw_area: {
        Formula f{Kind::area, Op::and_, expect(TokKind::var, "a variable").text, {}, {}, t.pos};
        if (peek().kind == TokKind::semi) {
          take();
          expect(TokKind::underscore, "'_'");
          f.args.push_back(expect(TokKind::var, "a variable").text);
        }
        expect(TokKind::rparen, "')'");
        return f;
      }
      default:
        --at_;
        fail(t.kind == TokKind::end ? "unexpected end of statement" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

void join(std::ostringstream& os, const std::vector<std::string>& xs, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) os << (i > from ? "," : "") << xs[i];
}

}  // namespace

Formula parse(const std::string& src) { return Parser(lex(src)).formula(); }

std::string_view op_text(Op op) {
  switch (op) {
    case Op::and_: return "&";
    case Op::or_: return "|";
    case Op::implies: return "=>";
    case Op::iff: return "<=>";
    case Op::maps_to: return "->";
    case Op::maps_both: return "<->";
    case Op::identity: return "=";
    case Op::sum: return "+";
    case Op::difference: return "-";
  }
  return "?";
}

std::string pretty(const Formula& f) {
  std::ostringstream os;
  auto sub = [](const Formula& c) { return c.kind == Kind::binary ? "[" + pretty(c) + "]" : pretty(c); };
  switch (f.kind) {
    case Kind::point:
    case Kind::var: os << f.name; break;
    case Kind::line:
    case Kind::seriating:
      os << (f.kind == Kind::line ? "L(" : "SL(") << f.args[0] << "," << f.args[1];
      if (f.args.size() > 2) {
        os << ";";
        join(os, f.args, 2, f.args.size());
      }
      os << ")";
      break;
    case Kind::ring:
      os << "RING(";
      join(os, f.args, 0, f.args.size());
      os << ";" << f.name << ")";
      break;
    case Kind::between: os << f.args[0] << "/" << f.args[1] << "/" << f.args[2] << "(" << f.name << ")"; break;
    case Kind::family:
      os << "S2!(" << f.name;
      for (const Formula& c : f.children) os << "," << pretty(c);
      os << ")";
      break;
    case Kind::area:
      os << "A!(" << f.name;
      if (!f.args.empty()) os << ";_" << f.args[0];
      os << ")";
      break;
    case Kind::negation: os << "~" << sub(f.children[0]); break;
    case Kind::binary: os << sub(f.children[0]) << " " << op_text(f.op) << " " << sub(f.children[1]); break;
  }
  return os.str();
}

std::string ast_dump(const Formula& f) {
  std::ostringstream os;
  auto rec = [&](auto&& self, const Formula& g, int depth) -> void {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ');
    switch (g.kind) {
      case Kind::point: os << "Point " << g.name; break;
      case Kind::var: os << "Var " << g.name; break;
      case Kind::line:
      case Kind::seriating:
      case Kind::ring:
      case Kind::between:
      case Kind::family:
      case Kind::area: os << pretty(g); break;
      case Kind::negation: os << "Not"; break;
      case Kind::binary: {
        static const char* names[] = {"And", "Or", "Implies", "Iff", "MapsTo", "MapsBoth", "Identity", "Sum", "Difference"};
        os << names[static_cast<int>(g.op)];
        break;
      }
    }
    os << "\n";
    if (g.kind == Kind::negation || g.kind == Kind::binary) {
      for (const Formula& c : g.children) self(self, c, depth + 1);
    }
  };
  rec(rec, f, 0);
  return os.str();
}

// ---------------------------------------------------------------- evaluation

namespace {

using Refs = std::vector<Referent>;  // sorted, unique

int dimension(const Refs& r) {
  if (r.empty()) return -1;
  int d = static_cast<int>(r.front().index());
  for (const Referent& x : r) {
    if (static_cast<int>(x.index()) != d) throw EvalError(EvalErrc::dimension_mix, "a variable mixes dimensions");
  }
  return d;
}

Refs normalized(Refs r) {
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

std::vector<PointId> atoms(const Refs& r) {
  std::vector<PointId> out;
  for (const Referent& x : r) {
    if (auto* p = std::get_if<PointId>(&x)) {
      out.push_back(*p);
    } else {
      const Line& l = std::get<Line>(x);
      out.insert(out.end(), l.points().begin(), l.points().end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class Evaluator {
 public:
  Evaluator(const ModelUniverse& u, const Environment& env, const EvalOptions& opt) : u_(u), env_(env), opt_(opt) {}

  bool truth(const Formula& f) const {
    switch (f.kind) {
      case Kind::point: return u_.points.count(point(f.name)) > 0;
      case Kind::var: {
        for (const Referent& r : var(f.name)) {
          if (auto* p = std::get_if<PointId>(&r); p ? !u_.points.count(*p) : !u_.lines.count(std::get<Line>(r))) return false;
        }
        return true;
      }
      case Kind::line:
      case Kind::seriating: {
        PointId a = point(f.args[0]);
        PointId b = point(f.args[1]);
        for (const Line* l : u_.lines_with_ends(a, b)) {
          if (line_matches(f, *l) && (f.kind == Kind::line || seriating(*l))) return true;
        }
        return false;
      }
      case Kind::ring: return ring_term(f);
      case Kind::between: return between_term(f);
      case Kind::family: return family_term(f);
      case Kind::area: return area_term(f);
      case Kind::negation: return !truth(f.children[0]);
      case Kind::binary: break;
    }
    const Formula& l = f.children[0];
    const Formula& r = f.children[1];
    switch (f.op) {
      case Op::and_: return truth(l) && truth(r);
      case Op::or_: return truth(l) || truth(r);
      case Op::implies: return !truth(l) || truth(r);
      case Op::iff: return truth(l) == truth(r);
      case Op::maps_to:
      case Op::maps_both:
      case Op::identity: return relation(f.op, l, r);
      case Op::sum:
      case Op::difference: break;
    }
    throw EvalError(EvalErrc::type_mismatch, "'" + std::string(op_text(f.op)) + "' builds referents, not a proposition");
  }

 private:
  PointId point(const std::string& n) const {
    auto it = env_.names.find(n);
    if (it == env_.names.end()) throw EvalError(EvalErrc::unbound_name, "point " + n + " is unbound");
    return it->second;
  }

  const std::vector<Referent>& var(const std::string& n) const {
    auto it = env_.vars.find(n);
    if (it == env_.vars.end()) throw EvalError(EvalErrc::unbound_name, "variable " + n + " is unbound");
    return it->second;
  }

  Refs var_refs(const std::string& n) const {
    Refs r = normalized(var(n));
    dimension(r);
    return r;
  }

  std::vector<PointId> var_points(const std::string& n) const {
    Refs r = var_refs(n);
    if (dimension(r) == 1) throw EvalError(EvalErrc::dimension_mix, "variable " + n + " references lines where points are expected");
    return atoms(r);
  }

  Refs referents(const Formula& f) const {
    switch (f.kind) {
      case Kind::point: return {point(f.name)};
      case Kind::var: return var_refs(f.name);
      case Kind::binary:
        if (f.op == Op::sum || f.op == Op::difference) {
          Refs a = referents(f.children[0]);
          Refs b = referents(f.children[1]);
          int da = dimension(a), db = dimension(b);
          if (da >= 0 && db >= 0 && da != db) throw EvalError(EvalErrc::dimension_mix, "operands differ in dimension");
          Refs out;
          if (f.op == Op::sum) {
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
          } else {
            if (!std::includes(a.begin(), a.end(), b.begin(), b.end())) {
              throw EvalError(EvalErrc::bad_difference, "subtrahend is not a subset of the minuend");
            }
            std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
          }
          return out;
        }
        break;
      default: break;
    }
    throw EvalError(EvalErrc::type_mismatch, "'" + pretty(f) + "' does not reference objects");
  }

  bool distributes(const Formula& f) const { return f.kind == Kind::binary && (f.op == Op::and_ || f.op == Op::or_); }

  bool relation(Op op, const Formula& l, const Formula& r) const {
    if (distributes(l)) {
      bool a = relation(op, l.children[0], r);
      bool b = relation(op, l.children[1], r);
      return l.op == Op::and_ ? a && b : a || b;
    }
    if (distributes(r)) {
      bool a = relation(op, l, r.children[0]);
      bool b = relation(op, l, r.children[1]);
      return r.op == Op::and_ ? a && b : a || b;
    }
    Refs a = referents(l);
    Refs b = referents(r);
    int da = dimension(a), db = dimension(b);
    if (op == Op::maps_to) {
      if (da == db || da < 0) return std::includes(b.begin(), b.end(), a.begin(), a.end());
      auto aa = atoms(a), bb = atoms(b);
      return std::includes(bb.begin(), bb.end(), aa.begin(), aa.end());
    }
    if (da >= 0 && db >= 0 && da != db) throw EvalError(EvalErrc::dimension_mix, "identity across dimensions");
    return a == b;
  }

  bool line_matches(const Formula& term, const Line& l) const {
    for (std::size_t i = 2; i < term.args.size(); ++i) {
      const std::string& n = term.args[i];
      if (std::isupper(static_cast<unsigned char>(n[0]))) {
        if (!l.contains(point(n))) return false;
      } else if (var_points(n) != l.member_set()) {
        return false;
      }
    }
    return true;
  }

  bool seriating(const Line& l) const {
    std::vector<PointId> seq(l.points().begin(), l.points().end());
    for (const LineFamily& f : u_.families) {
      try {
        if (is_seriating(seq, f)) return true;
      } catch (const Error&) {
      }
    }
    return false;
  }

  bool ring_term(const Formula& f) const {
    std::vector<PointId> members = var_points(f.name);
    std::vector<PointId> listed;
    for (const std::string& n : f.args) listed.push_back(point(n));
    for (const Ring& r : u_.rings) {
      if (r.member_set() != members) continue;
      std::vector<std::size_t> idx;
      bool all = true;
      for (PointId p : listed) {
        auto i = r.index_of(p);
        if (!i) {
          all = false;
          break;
        }
        idx.push_back(*i);
      }
      if (!all) continue;
      // Listed points must follow the ring in one direction, wrapping once.
      auto cyclic = [&](bool forward) {
        std::size_t wraps = 0;
        for (std::size_t k = 0; k < idx.size(); ++k) {
          std::size_t a = idx[k], b = idx[(k + 1) % idx.size()];
          if (forward ? b <= a : b >= a) ++wraps;
        }
        return idx.size() < 2 || wraps <= 1;
      };
      if (cyclic(true) || cyclic(false)) return true;
    }
    return false;
  }

  bool between_term(const Formula& f) const {
    PointId a = point(f.args[0]), b = point(f.args[1]), c = point(f.args[2]);
    std::vector<PointId> x = var_points(f.name);
    if (a == b || b == c || a == c) return false;
    auto in_x = [&](PointId p) { return std::binary_search(x.begin(), x.end(), p); };
    if (!in_x(a) || !in_x(b) || !in_x(c)) return false;
    if (opt_.betweenness == Betweenness::free) return true;
    for (const Line& l : u_.lines) {
      if (l.member_set() == x && between(l, a, b, c)) return true;
    }
    for (const Ring& r : u_.rings) {
      if (r.member_set() == x && between(r, a, b, c)) return true;
    }
    return false;
  }

  bool family_term(const Formula& f) const {
    Refs rows = var_refs(f.name);
    for (const LineFamily& fam : u_.families) {
      Refs mine;
      for (std::size_t i = 0; i < fam.row_count(); ++i) mine.push_back(fam.row_line(i));
      if (normalized(mine) != rows) continue;
      if (f.children.empty()) return true;
      Line first = fam.row_line(0), last = fam.row_line(fam.row_count() - 1);
      auto fits = [&](const Formula& term, const Line& l) {
        PointId a = point(term.args[0]), b = point(term.args[1]);
        bool ends = (l.front() == a && l.back() == b) || (l.front() == b && l.back() == a);
        return ends && line_matches(term, l);
      };
      if ((fits(f.children[0], first) && fits(f.children[1], last)) || (fits(f.children[0], last) && fits(f.children[1], first))) {
        return true;
      }
    }
    return false;
  }

  bool area_term(const Formula& f) const {
    std::vector<PointId> pts = var_points(f.name);
    for (const LatticeArea& a : u_.areas) {
      std::vector<PointId> verts;
      for (Coord v : a.vertices()) verts.push_back(vertex_id(v));
      std::sort(verts.begin(), verts.end());
      if (verts != pts) continue;
      if (f.args.empty() || var_points(f.args[0]) == a.boundary_ring().member_set()) return true;
    }
    return false;
  }

  const ModelUniverse& u_;
  const Environment& env_;
  const EvalOptions& opt_;
};

}  // namespace

bool evaluate(const Formula& f, const ModelUniverse& u, const Environment& env, const EvalOptions& opt) {
  return Evaluator(u, env, opt).truth(f);
}

}  // namespace seriate::lang
