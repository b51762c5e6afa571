#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "gen.hpp"
#include "taulog/derivation.hpp"
#include "taulog/environment.hpp"
#include "taulog/errors.hpp"
#include "taulog/parse.hpp"
#include "taulog/print.hpp"
#include "taulog/script.hpp"

using namespace taulog;

namespace {

FormulaRef v(Index i) { return Formula::var(i); }

bool same_tree(const DerivationRef& a, const DerivationRef& b) {
  if (a->rule() != b->rule()) return false;
  if (static_cast<bool>(a->formula()) != static_cast<bool>(b->formula())) return false;
  if (a->formula() && !equal(a->formula(), b->formula())) return false;
  if (a->instance().has_value() != b->instance().has_value()) return false;
  if (a->instance()) {
    if (a->instance()->schema != b->instance()->schema) return false;
    if (!equal(a->instance()->result, b->instance()->result)) return false;
  }
  if (a->children().size() != b->children().size()) return false;
  for (std::size_t i = 0; i < a->children().size(); ++i)
    if (!same_tree(a->children()[i], b->children()[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("scripts parse to the trees their factories build") {
  Environment env = load_env_text("1 := ~p1\n");
  DerivationRef d = parse_script("(imp-i \"p1\" (hyp \"p1\"))", env);
  CHECK(same_tree(d, Derivation::imp_i(v(1), Derivation::hyp(v(1)))));

  d = parse_script("(axiom t-intro \"p1\")", env);
  CHECK(d->rule() == Derivation::Rule::Axiom);
  CHECK(equal(check(d, env).conclusion,
              instantiate(Schema::TIntro, {v(1)}, env).result));

  d = parse_script(
      "; header comment\n"
      "(and-i (hyp \"p1\") ; tail comment\n"
      "       (or-i-left (hyp \"p2\") \"p3\"))\n",
      env);
  CHECK(same_tree(d, Derivation::and_i(Derivation::hyp(v(1)),
                                       Derivation::or_i_left(Derivation::hyp(v(2)), v(3)))));

  d = parse_script("(or-e (hyp \"p1 | p1\") (hyp \"p1\") (hyp \"p1\"))", env);
  CHECK(d->rule() == Derivation::Rule::OrE);

  d = parse_script("(imp-e (hyp \"T(p1) -> p2\") (hyp \"T(p1)\"))", env);
  CHECK(equal(check(d, env).conclusion, v(2)));
}

TEST_CASE("argument order inside a form is the premise order") {
  Environment env;
  DerivationRef d = parse_script("(imp-e (hyp \"p1 -> p2\") (hyp \"p1\"))", env);
  CHECK(d->children()[0]->rule() == Derivation::Rule::Hyp);
  CHECK(equal(d->children()[0]->formula(), parse("p1 -> p2")));
  CHECK(equal(d->children()[1]->formula(), v(1)));

  d = parse_script("(or-i-right (hyp \"p2\") \"p1\")", env);
  CHECK(equal(check(d, env).conclusion, parse("p1 | p2")));
}

TEST_CASE("ex falso is refused by name") {
  Environment env;
  for (const char* name : {"efq", "ex-falso", "exfalso", "bot-e", "bot-elim", "absurd"}) {
    std::string text = std::string("(") + name + " (hyp \"bot\") \"p1\")";
    CHECK_THROWS_WITH_AS(parse_script(text, env), doctest::Contains("ex falso"), parse_error);
  }
}

TEST_CASE("truth elimination is refused by name") {
  Environment env = load_env_text("1 := ~p1\n");
  for (const char* name : {"t-elim", "t-e", "truth-elim", "t-out"}) {
    std::string text = std::string("(") + name + " (hyp \"T(p1)\"))";
    CHECK_THROWS_WITH_AS(parse_script(text, env), doctest::Contains("cannot be eliminated"),
                         parse_error);
  }
}

TEST_CASE("malformed scripts fail with positions") {
  Environment env;
  CHECK_THROWS_AS(parse_script("", env), parse_error);
  CHECK_THROWS_AS(parse_script("(frobnicate (hyp \"p1\"))", env), parse_error);
  CHECK_THROWS_AS(parse_script("(hyp \"p1\"", env), parse_error);
  CHECK_THROWS_AS(parse_script("(hyp \"p1)", env), parse_error);
  CHECK_THROWS_AS(parse_script("(hyp \"p1\") (hyp \"p2\")", env), parse_error);
  CHECK_THROWS_AS(parse_script("(hyp p1)", env), parse_error);
  CHECK_THROWS_AS(parse_script("(and-i (hyp \"p1\"))", env), parse_error);
  CHECK_THROWS_AS(parse_script("(axiom t-nonsense \"p1\")", env), parse_error);
  CHECK_THROWS_AS(parse_script("(hyp \"p1 &\")", env), parse_error);
}

TEST_CASE("printing then parsing reproduces the tree") {
  Environment env = load_env_text("1 := ~p1\n");
  std::mt19937_64 rng(83);
  testgen::GenOpts o;
  o.max_depth = 3;
  o.max_var = 3;

  for (int trial = 0; trial < 150; ++trial) {
    Schema s = static_cast<Schema>(rng() % kSchemaCount);
    std::vector<FormulaRef> params;
    for (int i = 0; i < schema_arity(s); ++i) params.push_back(testgen::random_formula(rng, o));
    DerivationRef d = Derivation::axiom(instantiate(s, params, env));
    for (int step = 0; step < 5; ++step) {
      switch (rng() % 6) {
        case 0: d = Derivation::and_i(d, Derivation::hyp(testgen::random_formula(rng, o))); break;
        case 1: d = Derivation::and_i(Derivation::hyp(testgen::random_formula(rng, o)), d); break;
        case 2: d = Derivation::or_i_left(d, testgen::random_formula(rng, o)); break;
        case 3: d = Derivation::or_i_right(d, testgen::random_formula(rng, o)); break;
        case 4: d = Derivation::imp_i(testgen::random_formula(rng, o), d); break;
        case 5: d = Derivation::and_e_right(Derivation::and_i(Derivation::hyp(v(1)), d)); break;
      }
    }
    std::string text = print_script(d);
    CHECK(same_tree(parse_script(text, env), d));
    CHECK(text.back() == '\n');
  }
}

TEST_CASE("corpus proof scripts round-trip through the printer") {
  Environment env = load_env_text("1 := ~p1\n");
  const char* biggest =
      "(imp-i \"~T(bot)\""
      "  (imp-e"
      "    (imp-i \"p1\""
      "      (imp-e (hyp \"~T(bot)\")"
      "             (imp-e (axiom t-mp \"p1\" \"bot\")"
      "                    (and-i (imp-e (axiom t-intro \"p1\") (hyp \"p1\"))"
      "                           (hyp \"p1\")))))"
      "    (imp-e (axiom t-intro \"~p1\")"
      "           (imp-i \"p1\""
      "             (imp-e (hyp \"~T(bot)\")"
      "                    (imp-e (axiom t-mp \"p1\" \"bot\")"
      "                           (and-i (imp-e (axiom t-intro \"p1\") (hyp \"p1\"))"
      "                                  (hyp \"p1\"))))))))";
  DerivationRef d = parse_script(biggest, env);
  CheckResult r = check(d, env);
  CHECK(r.open.empty());
  CHECK(same_tree(parse_script(print_script(d), env), d));
}
