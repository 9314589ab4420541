#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "seriate/model_file.hpp"
#include "seriate/statement.hpp"

using namespace seriate;
using namespace seriate::lang;

namespace {

SyntaxErrc syntax_code(const std::string& src) {
  try {
    parse(src);
  } catch (const SyntaxError& e) {
    return e.code();
  }
  FAIL("parsed: " << src);
  return SyntaxErrc::parse;
}

bool eval_in(const ModelFile& m, const std::string& src, std::map<std::string, std::vector<std::string>> vars = {}) {
  LoadedModel lm = load_model(m);
  for (const auto& [v, names] : vars) {
    std::vector<Referent> refs;
    for (const auto& n : names) refs.push_back(lm.env.names.at(n));
    lm.env.vars[v] = refs;
  }
  return evaluate(parse(src), lm.universe, lm.env);
}

ModelFile line_model(std::vector<std::string> pts) {
  ModelFile m;
  m.points = pts;
  m.lines.push_back({"x", pts});
  return m;
}

}  // namespace

TEST_CASE("lexer forms") {
  auto toks = lex("N^12 & x^3");
  REQUIRE(toks.size() >= 3);
  CHECK(toks[0].text == "N^12");
  CHECK(toks[0].pos == 0);
  CHECK(toks[2].text == "x^3");
  CHECK(toks[2].pos == 7);
  CHECK(syntax_code("A # B") == SyntaxErrc::lex);
  CHECK(syntax_code("A^") == SyntaxErrc::lex);
  CHECK(syntax_code("A B") == SyntaxErrc::parse);
}

TEST_CASE("golden: equal precedence groups to the left") {
  Formula f = parse("A & B -> x");
  CHECK(f == Formula::bin(Op::maps_to, Formula::bin(Op::and_, Formula::point("A"), Formula::point("B")), Formula::var("x")));
  CHECK(pretty(f) == "[A & B] -> x");
  CHECK(ast_dump(f) == "MapsTo\n  And\n    Point A\n    Point B\n  Var x\n");
  CHECK(pretty(parse("a -> x | y")) == "[a -> x] | y");
}

TEST_CASE("golden: disjunctive target") {
  Formula f = parse("[A & B] -> [x \\/ y]");
  CHECK(f == Formula::bin(Op::maps_to, Formula::bin(Op::and_, Formula::point("A"), Formula::point("B")),
                          Formula::bin(Op::or_, Formula::var("x"), Formula::var("y"))));
  CHECK(pretty(f) == "[A & B] -> [x | y]");
  CHECK(parse("{A & B} -> (x | y)") == f);
}

TEST_CASE("golden: negated mapping target") {
  try {
    parse("P -> ~a");
    FAIL("accepted a negated target");
  } catch (const SyntaxError& e) {
    CHECK(e.code() == SyntaxErrc::negated_map_target);
    CHECK(e.pos() == 5);
    CHECK(std::string(e.what()) == "NegatedMapTarget at 5: a mapping target may not be negated");
  }
  CHECK(syntax_code("P -> [~a]") == SyntaxErrc::negated_map_target);
  CHECK(syntax_code("P -> [x | ~a]") == SyntaxErrc::negated_map_target);
  CHECK_NOTHROW(parse("~[P -> a]"));
  CHECK_NOTHROW(parse("P -> [x => ~a]"));
}

TEST_CASE("terms") {
  Formula l = parse("L(A,B;x)");
  CHECK(l.kind == Kind::line);
  CHECK(l.args == std::vector<std::string>{"A", "B", "x"});
  CHECK(pretty(parse("A/B/C(x)")) == "A/B/C(x)");
  CHECK(parse("A/B/C(x)").kind == Kind::between);
  CHECK(parse("RING(A,B,C,D;r)").kind == Kind::ring);
  CHECK(parse("S2!(x,L(A,B),L(C,D))").children.size() == 2);
  CHECK(parse("A!(a;_b)").args == std::vector<std::string>{"b"});
  CHECK(syntax_code("L(A,B") == SyntaxErrc::parse);
  CHECK(syntax_code("A &") == SyntaxErrc::parse);
  CHECK(syntax_code("[A & B)") == SyntaxErrc::parse);
}

TEST_CASE("flat chains build a left comb") {
  const char* ops[] = {"&", "|", "=>", "<=>", "->", "<->", "=", "+", "-"};
  for (int len = 2; len <= 5; ++len) {
    std::string src = "a";
    for (int i = 1; i < len; ++i) src += std::string(" ") + ops[(i * 7 + len) % 9] + " " + static_cast<char>('a' + i);
    Formula f = parse(src);
    for (int i = len - 1; i >= 1; --i) {
      REQUIRE(f.kind == Kind::binary);
      CHECK(f.children[1] == Formula::var(std::string(1, static_cast<char>('a' + i))));
      Formula left = f.children[0];
      f = left;
    }
    CHECK(f == Formula::var("a"));
  }
}

TEST_CASE("pretty then parse is the identity") {
  oracle::FormulaGen gen(2024);
  for (int i = 0; i < 2000; ++i) {
    std::string src = gen.formula(5);
    Formula f = parse(src);
    CHECK_MESSAGE(parse(pretty(f)) == f, src);
    CHECK(pretty(parse(pretty(f))) == pretty(f));
  }
}

TEST_CASE("evaluate") {
  ModelFile apb;
  apb.points = {"A", "P", "B"};
  apb.lines.push_back({"x", {"A", "P", "B"}});
  CHECK(eval_in(apb, "L(A,B;x)"));
  CHECK_FALSE(eval_in(apb, "L(A,P;x)"));
  CHECK(eval_in(line_model({"A", "B", "C"}), "A/B/C(x)"));
  CHECK_FALSE(eval_in(line_model({"A", "B", "C"}), "B/A/C(x)"));

  ModelFile pts;
  pts.points = {"A", "P"};
  CHECK_FALSE(eval_in(pts, "a <-> b", {{"a", {"A", "P"}}, {"b", {"A"}}}));
  CHECK(eval_in(pts, "a <-> b", {{"a", {"A", "P"}}, {"b", {"P", "A"}}}));
  CHECK(eval_in(pts, "b -> a", {{"a", {"A", "P"}}, {"b", {"A"}}}));
  CHECK_FALSE(eval_in(pts, "a -> b", {{"a", {"A", "P"}}, {"b", {"A"}}}));
  CHECK(eval_in(pts, "A = [A | P]"));
  CHECK_FALSE(eval_in(pts, "A = P"));
  CHECK(eval_in(pts, "[a - b] <-> c", {{"a", {"A", "P"}}, {"b", {"A"}}, {"c", {"P"}}}));
  CHECK(eval_in(pts, "[b + c] <-> a", {{"a", {"A", "P"}}, {"b", {"A"}}, {"c", {"P"}}}));
}

TEST_CASE("evaluation errors") {
  ModelFile pts;
  pts.points = {"A", "P"};
  auto code = [&](const std::string& src, std::map<std::string, std::vector<std::string>> vars = {}) {
    try {
      eval_in(pts, src, vars);
    } catch (const EvalError& e) {
      return e.code();
    }
    FAIL("evaluated: " << src);
    return EvalErrc::type_mismatch;
  };
  CHECK(code("A -> q") == EvalErrc::unbound_name);
  CHECK(code("Z -> a", {{"a", {"A"}}}) == EvalErrc::unbound_name);
  CHECK(code("[b - a] <-> b", {{"a", {"A", "P"}}, {"b", {"A"}}}) == EvalErrc::bad_difference);

  ModelFile mixed = line_model({"A", "B", "C"});
  LoadedModel lm = load_model(mixed);
  lm.env.vars["m"] = {lm.env.names.at("A"), Line::from({lm.env.names.at("A"), lm.env.names.at("B"), lm.env.names.at("C")})};
  CHECK_THROWS_AS(evaluate(parse("A -> m"), lm.universe, lm.env), EvalError);
}

TEST_CASE("a conjunction maps exactly when each side maps") {
  // Every pair of points and every target subset over four points.
  ModelFile m;
  m.points = {"A", "B", "C", "D"};
  LoadedModel lm = load_model(m);
  const char* names[] = {"A", "B", "C", "D"};
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Referent> t;
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1u) t.push_back(lm.env.names.at(names[i]));
    lm.env.vars["t"] = t;
    for (const char* a : names) {
      for (const char* b : names) {
        std::string sa(a), sb(b);
        bool joint = evaluate(parse("[" + sa + " & " + sb + "] -> t"), lm.universe, lm.env);
        bool each = evaluate(parse(sa + " -> t"), lm.universe, lm.env) && evaluate(parse(sb + " -> t"), lm.universe, lm.env);
        CHECK(joint == each);
      }
    }
  }
}

TEST_CASE("a variable maps into a disjunction only as a whole") {
  ModelFile m;
  m.points = {"A", "B"};
  LoadedModel lm = load_model(m);
  PointId A = lm.env.names.at("A"), B = lm.env.names.at("B");
  lm.env.vars["a"] = {A, B};
  lm.env.vars["x"] = {A};
  lm.env.vars["y"] = {B};
  lm.env.vars["z"] = {A, B};
  CHECK_FALSE(evaluate(parse("a -> [x | y]"), lm.universe, lm.env));
  CHECK(evaluate(parse("a -> [x | z]"), lm.universe, lm.env));
  CHECK(evaluate(parse("A -> [x | y]"), lm.universe, lm.env));
}

TEST_CASE("free betweenness") {
  ModelFile m = line_model({"A", "B", "C"});
  LoadedModel lm = load_model(m);
  EvalOptions free{Betweenness::free};
  CHECK(evaluate(parse("B/A/C(x)"), lm.universe, lm.env, free));
  CHECK_FALSE(evaluate(parse("B/A/C(x)"), lm.universe, lm.env));
}
