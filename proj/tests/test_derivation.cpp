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

using namespace taulog;

namespace {

FormulaRef v(Index i) { return Formula::var(i); }

std::vector<std::string> printed(const std::vector<FormulaRef>& fs) {
  std::vector<std::string> out;
  for (const FormulaRef& f : fs) out.push_back(print(f));
  return out;
}

}  // namespace

TEST_CASE("hypotheses are open until discharged") {
  Environment env;
  DerivationRef h = Derivation::hyp(parse("p1"));
  CheckResult r = check(h, env);
  CHECK(equal(r.conclusion, v(1)));
  CHECK(printed(r.open) == std::vector<std::string>{"p1"});

  DerivationRef d = Derivation::imp_i(parse("p1"), h);
  r = check(d, env);
  CHECK(equal(r.conclusion, parse("p1 -> p1")));
  CHECK(r.open.empty());
  CHECK(equal(theorem_of(d, env), parse("p1 -> p1")));

  CHECK_THROWS_AS(theorem_of(h, env), check_error);
}

TEST_CASE("open hypotheses form a multiset") {
  Environment env;
  DerivationRef two = Derivation::and_i(Derivation::hyp(v(1)), Derivation::hyp(v(1)));
  CheckResult r = check(two, env);
  CHECK(printed(r.open) == std::vector<std::string>{"p1", "p1"});

  // One imp-i discharges every occurrence at once.
  DerivationRef d = Derivation::imp_i(v(1), two);
  r = check(d, env);
  CHECK(r.open.empty());
  CHECK(equal(r.conclusion, parse("p1 -> p1 & p1")));
}

TEST_CASE("vacuous discharge is allowed") {
  Environment env;
  DerivationRef d = Derivation::imp_i(v(2), Derivation::hyp(v(1)));
  CheckResult r = check(d, env);
  CHECK(equal(r.conclusion, parse("p2 -> p1")));
  CHECK(printed(r.open) == std::vector<std::string>{"p1"});
}

TEST_CASE("conjunction rules") {
  Environment env;
  DerivationRef pair = Derivation::and_i(Derivation::hyp(v(1)), Derivation::hyp(v(2)));
  CHECK(equal(check(pair, env).conclusion, parse("p1 & p2")));
  CHECK(equal(check(Derivation::and_e_left(pair), env).conclusion, v(1)));
  CHECK(equal(check(Derivation::and_e_right(pair), env).conclusion, v(2)));
  CHECK_THROWS_AS(check(Derivation::and_e_left(Derivation::hyp(v(1))), env), check_error);
}

TEST_CASE("disjunction rules, including the case split") {
  Environment env;
  DerivationRef inl = Derivation::or_i_left(Derivation::hyp(v(1)), v(2));
  CHECK(equal(check(inl, env).conclusion, parse("p1 | p2")));
  DerivationRef inr = Derivation::or_i_right(Derivation::hyp(v(2)), v(1));
  CHECK(equal(check(inr, env).conclusion, parse("p1 | p2")));

  // From p1 | p2 with p1 -> p3 and p2 -> p3 open, conclude p3.
  DerivationRef major = Derivation::hyp(parse("p1 | p2"));
  DerivationRef left = Derivation::imp_e(Derivation::hyp(parse("p1 -> p3")), Derivation::hyp(v(1)));
  DerivationRef right =
      Derivation::imp_e(Derivation::hyp(parse("p2 -> p3")), Derivation::hyp(v(2)));
  DerivationRef split = Derivation::or_e(major, left, right);
  CheckResult r = check(split, env);
  CHECK(equal(r.conclusion, v(3)));
  CHECK(printed(r.open) ==
        std::vector<std::string>{"p1 -> p3", "p1 | p2", "p2 -> p3"});

  // Branch conclusions must agree.
  DerivationRef bad = Derivation::or_e(major, Derivation::hyp(v(3)), Derivation::hyp(v(4)));
  CHECK_THROWS_AS(check(bad, env), check_error);

  // The major premise must be a disjunction.
  CHECK_THROWS_AS(check(Derivation::or_e(Derivation::hyp(v(1)), left, right), env), check_error);
}

TEST_CASE("case branches discharge only their own disjunct") {
  Environment env;
  DerivationRef major = Derivation::hyp(parse("p1 | p1"));
  DerivationRef branch = Derivation::hyp(v(1));
  CheckResult r = check(Derivation::or_e(major, branch, branch), env);
  CHECK(equal(r.conclusion, v(1)));
  CHECK(printed(r.open) == std::vector<std::string>{"p1 | p1"});
}

TEST_CASE("implication elimination matches antecedents exactly") {
  Environment env;
  DerivationRef imp = Derivation::hyp(parse("p1 -> p2"));
  DerivationRef ok = Derivation::imp_e(imp, Derivation::hyp(v(1)));
  CHECK(equal(check(ok, env).conclusion, v(2)));

  CHECK_THROWS_AS(check(Derivation::imp_e(imp, Derivation::hyp(v(3))), env), check_error);
  CHECK_THROWS_AS(check(Derivation::imp_e(Derivation::hyp(v(1)), Derivation::hyp(v(1))), env),
                  check_error);
}

TEST_CASE("check errors name the failing node by path") {
  Environment env;
  DerivationRef bad = Derivation::and_e_left(Derivation::hyp(v(1)));
  DerivationRef tree = Derivation::and_i(
      Derivation::hyp(v(2)),
      Derivation::imp_i(v(3), bad));
  try {
    check(tree, env);
    FAIL("expected a check_error");
  } catch (const check_error& e) {
    CHECK(std::string(e.what()).find("root.2.1") != std::string::npos);
  }

  try {
    check(Derivation::or_e(Derivation::hyp(v(1)), Derivation::hyp(v(2)), Derivation::hyp(v(2))),
          env);
    FAIL("expected a check_error");
  } catch (const check_error& e) {
    CHECK(std::string(e.what()).find("root") != std::string::npos);
  }
}

TEST_CASE("axiom leaves are rechecked against the ambient environment") {
  Environment liar = load_env_text("1 := ~p1\n");
  SchemaInstance inst = instantiate(Schema::TIntro, {v(1)}, liar);
  DerivationRef leaf = Derivation::axiom(inst);
  CheckResult r = check(leaf, liar);
  CHECK(r.open.empty());
  CHECK(equal(r.conclusion, inst.result));

  // Under the liar override T(p1) is p3; in the base enumeration it is
  // p2, so the same leaf no longer matches there.
  CHECK_THROWS_AS(check(leaf, Environment{}), check_error);

  SchemaInstance forged = inst;
  forged.result = parse("p1 -> p1");
  CHECK_THROWS_AS(check(Derivation::axiom(forged), liar), check_error);
}

TEST_CASE("hypotheses must be top-free") {
  Environment env;
  CHECK_THROWS_AS(check(Derivation::hyp(Formula::top()), env), check_error);
  CHECK_THROWS_AS(check(Derivation::or_i_left(Derivation::hyp(v(1)), Formula::top()), env),
                  check_error);
  CHECK_THROWS_AS(check(Derivation::imp_i(Formula::top(), Derivation::hyp(v(1))), env),
                  check_error);
}

TEST_CASE("factories reject null premises") {
  CHECK_THROWS_AS(Derivation::and_i(nullptr, Derivation::hyp(v(1))), error);
  CHECK_THROWS_AS(Derivation::imp_i(v(1), nullptr), error);
  CHECK_THROWS_AS(Derivation::hyp(nullptr), error);
}

TEST_CASE("random closed trees check and their conclusions are computed compositionally") {
  Environment env = load_env_text("1 := ~p1\n");
  std::mt19937_64 rng(67);
  testgen::GenOpts o;
  o.max_depth = 3;
  o.max_var = 3;

  for (int trial = 0; trial < 200; ++trial) {
    // Seed: an axiom leaf, hence closed.
    Schema s = static_cast<Schema>(rng() % kSchemaCount);
    std::vector<FormulaRef> params;
    for (int i = 0; i < schema_arity(s); ++i) params.push_back(testgen::random_formula(rng, o));
    DerivationRef d = Derivation::axiom(instantiate(s, params, env));
    FormulaRef concl = instantiate(s, params, env).result;

    for (int step = 0; step < 4; ++step) {
      switch (rng() % 4) {
        case 0: {
          d = Derivation::and_i(d, d);
          concl = Formula::conj(concl, concl);
          break;
        }
        case 1: {
          FormulaRef added = testgen::random_formula(rng, o);
          d = Derivation::or_i_left(d, added);
          concl = Formula::disj(concl, added);
          break;
        }
        case 2: {
          FormulaRef ant = testgen::random_formula(rng, o);
          d = Derivation::imp_i(ant, d);  // vacuous discharge
          concl = Formula::impl(ant, concl);
          break;
        }
        case 3: {
          d = Derivation::and_e_left(Derivation::and_i(d, d));
          break;
        }
      }
    }
    CheckResult r = check(d, env);
    CHECK(r.open.empty());
    CHECK(equal(r.conclusion, concl));
    CHECK(equal(theorem_of(d, env), concl));
  }
}
