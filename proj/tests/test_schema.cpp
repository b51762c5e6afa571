#include <doctest.h>

#include <random>
#include <vector>

#include "gen.hpp"
#include "taulog/environment.hpp"
#include "taulog/errors.hpp"
#include "taulog/parse.hpp"
#include "taulog/print.hpp"
#include "taulog/schema.hpp"

using namespace taulog;

namespace {

FormulaRef v(Index i) { return Formula::var(i); }

FormulaRef t(const FormulaRef& f, const Environment& env) { return v(env.index_of(f)); }

bool recognizes(const FormulaRef& f, Schema s, const std::vector<FormulaRef>& params,
                const Environment& env) {
  for (const SchemaInstance& inst : recognize_axiom(f, env)) {
    if (inst.schema != s || inst.params.size() != params.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < params.size(); ++i)
      if (!equal(inst.params[i], params[i])) same = false;
    if (same) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("names and arities") {
  CHECK(schema_from_name("t-intro") == Schema::TIntro);
  CHECK(schema_from_name("t-and-forward") == Schema::TAndForward);
  CHECK(schema_from_name("t-and-backward") == Schema::TAndBackward);
  CHECK(schema_from_name("t-or-intro") == Schema::TOrIntro);
  CHECK(schema_from_name("t-or-elim") == Schema::TOrElim);
  CHECK(schema_from_name("t-mp") == Schema::TMp);
  for (int i = 0; i < kSchemaCount; ++i) {
    Schema s = static_cast<Schema>(i);
    CHECK(schema_from_name(schema_name(s)) == s);
    CHECK(schema_arity(s) == (s == Schema::TIntro ? 1 : (s == Schema::TOrElim ? 3 : 2)));
  }
  CHECK_THROWS_AS(schema_from_name("t-nonsense"), schema_error);
}

TEST_CASE("instances have the documented shapes") {
  Environment env = load_env_text("1 := ~p1\n");
  FormulaRef a = parse("p2 -> p3");
  FormulaRef b = v(4);
  FormulaRef c = parse("p2 & bot");

  SchemaInstance i1 = instantiate(Schema::TIntro, {a}, env);
  CHECK(equal(i1.result, Formula::impl(a, t(a, env))));

  SchemaInstance i2 = instantiate(Schema::TAndForward, {a, b}, env);
  CHECK(equal(i2.result,
              Formula::impl(Formula::conj(t(a, env), t(b, env)), t(Formula::conj(a, b), env))));

  SchemaInstance i3 = instantiate(Schema::TAndBackward, {a, b}, env);
  CHECK(equal(i3.result,
              Formula::impl(t(Formula::conj(a, b), env), Formula::conj(t(a, env), t(b, env)))));

  SchemaInstance i4 = instantiate(Schema::TOrIntro, {a, b}, env);
  CHECK(equal(i4.result,
              Formula::impl(Formula::disj(t(a, env), t(b, env)), t(Formula::disj(a, b), env))));

  SchemaInstance i5 = instantiate(Schema::TOrElim, {a, b, c}, env);
  FormulaRef want = Formula::impl(
      Formula::conj(Formula::conj(t(Formula::disj(a, b), env), t(Formula::impl(a, c), env)),
                    t(Formula::impl(b, c), env)),
      t(c, env));
  CHECK(equal(i5.result, want));

  SchemaInstance i6 = instantiate(Schema::TMp, {a, b}, env);
  CHECK(equal(i6.result, Formula::impl(Formula::conj(t(a, env), t(Formula::impl(a, b), env)),
                                       t(b, env))));
}

TEST_CASE("instantiate rejects wrong arity and top") {
  Environment env;
  CHECK_THROWS_AS(instantiate(Schema::TIntro, {v(1), v(2)}, env), schema_error);
  CHECK_THROWS_AS(instantiate(Schema::TMp, {v(1)}, env), schema_error);
  CHECK_THROWS_AS(instantiate(Schema::TIntro, {Formula::top()}, env), error);
  FormulaRef big = v(1);
  for (int i = 0; i < 8; ++i) big = Formula::conj(big, big);
  CHECK_THROWS_AS(instantiate(Schema::TIntro, {big}, env), overflow_error);
}

TEST_CASE("recognize_axiom inverts instantiate on random parameters") {
  Environment liar = load_env_text("1 := ~p1\n");
  Environment plain;
  std::mt19937_64 rng(23);
  testgen::GenOpts o;
  o.max_depth = 3;
  o.max_var = 4;
  for (int trial = 0; trial < 300; ++trial) {
    const Environment& env = (trial % 2 == 0) ? liar : plain;
    Schema s = static_cast<Schema>(rng() % kSchemaCount);
    std::vector<FormulaRef> params;
    for (int i = 0; i < schema_arity(s); ++i) params.push_back(testgen::random_formula(rng, o));
    SchemaInstance inst = instantiate(s, params, env);
    CHECK(recognizes(inst.result, s, params, env));
    for (const SchemaInstance& found : recognize_axiom(inst.result, env)) {
      SchemaInstance again = instantiate(found.schema, found.params, env);
      CHECK(equal(again.result, inst.result));
    }
  }
}

TEST_CASE("case-analysis antecedents are matched modulo associativity") {
  Environment env;
  FormulaRef a = v(1);
  FormulaRef b = v(2);
  FormulaRef c = v(3);
  SchemaInstance inst = instantiate(Schema::TOrElim, {a, b, c}, env);
  FormulaRef ta_or_b = t(Formula::disj(a, b), env);
  FormulaRef tac = t(Formula::impl(a, c), env);
  FormulaRef tbc = t(Formula::impl(b, c), env);
  FormulaRef reassoc =
      Formula::impl(Formula::conj(ta_or_b, Formula::conj(tac, tbc)), t(c, env));
  CHECK_FALSE(equal(reassoc, inst.result));
  CHECK(recognizes(reassoc, Schema::TOrElim, {a, b, c}, env));
}

TEST_CASE("distinct schemata can share an instance under self-ascription") {
  Environment env = load_env_text("5 := p5\n6 := p6\n");
  // T(p5) is p5 and T(p6) is p6, so T(p5) & T(p6) -> T(p5 & p6) is
  // literally p5 & p6 -> T(p5 & p6), which is also an ascription intro.
  SchemaInstance fwd = instantiate(Schema::TAndForward, {v(5), v(6)}, env);
  SchemaInstance intro = instantiate(Schema::TIntro, {Formula::conj(v(5), v(6))}, env);
  CHECK(equal(fwd.result, intro.result));
  CHECK(recognizes(fwd.result, Schema::TAndForward, {v(5), v(6)}, env));
  CHECK(recognizes(fwd.result, Schema::TIntro, {Formula::conj(v(5), v(6))}, env));
}

TEST_CASE("ordinary formulas are not axioms") {
  Environment liar = load_env_text("1 := ~p1\n");
  CHECK(recognize_axiom(parse("p1 -> p2"), liar).empty());
  CHECK(recognize_axiom(parse("bot"), liar).empty());
  CHECK(recognize_axiom(parse("p1 -> p1"), liar).empty());
  // T(p1) -> T(p1) has an ascription on both sides but fits no schema.
  FormulaRef tp1 = v(liar.index_of(v(1)));
  CHECK(recognize_axiom(Formula::impl(tp1, tp1), liar).empty());
}
