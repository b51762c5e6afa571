#include <doctest.h>

#include <string>
#include <vector>

#include "taulog/environment.hpp"
#include "taulog/errors.hpp"
#include "taulog/parse.hpp"
#include "taulog/print.hpp"

using namespace taulog;

namespace {
FormulaRef v(Index i) { return Formula::var(i); }
}  // namespace

TEST_CASE("empty environment is the base enumeration") {
  Environment env;
  CHECK(env.overrides().empty());
  for (Index i = 1; i <= 500; ++i) {
    FormulaRef f = env.definition_of(i);
    CHECK(env.index_of(f) == i);
    CHECK(env.canonical_index_of(f) == i);
  }
  CHECK(equal(env.definition_of(1), Formula::bot()));
  CHECK_THROWS_AS(env.definition_of(0), error);
  CHECK_THROWS_AS(env.index_of(Formula::top()), error);
}

TEST_CASE("overrides rebind indices and keep the assignment onto") {
  Environment env = load_env_text("1 := ~p1\n");
  FormulaRef liar = Formula::neg(v(1));

  CHECK(equal(env.definition_of(1), liar));
  CHECK(env.index_of(liar) == 1);  // override beats the canonical slot

  Index dup = env.canonical_index_of(liar);
  CHECK(dup > 1);
  CHECK(equal(env.definition_of(dup), liar));  // same formula at two indices

  // Everything else round-trips; only the canonical duplicate collapses
  // onto the override key.
  for (Index i = 1; i <= 500; ++i) {
    FormulaRef f = env.definition_of(i);
    Index back = env.index_of(f);
    if (i == dup)
      CHECK(back == 1);
    else
      CHECK(back == i);
  }

  // Rank shift: non-key indices skip exactly the keys below them.
  Environment base;
  CHECK(equal(env.definition_of(2), base.definition_of(1)));
  CHECK(equal(env.definition_of(3), base.definition_of(2)));
}

TEST_CASE("a self-ascribing override is its own truth index") {
  Environment env = load_env_text("2 := p2\n");
  CHECK(env.index_of(v(2)) == 2);  // T(p2) is p2 itself
  Index dup = env.canonical_index_of(v(2));
  CHECK(dup != 2);
  CHECK(equal(env.definition_of(dup), v(2)));
}

TEST_CASE("definition_of is total far beyond the override range") {
  Environment env = load_env_text("1 := ~p1\n3 := p2 & p2\n");
  Index huge = *index_from_string("123456789012345678901234567890");
  FormulaRef f = env.definition_of(huge);
  CHECK(env.index_of(f) == huge);
}

TEST_CASE("index_of overflows gracefully on astronomically large formulas") {
  Environment env;
  FormulaRef f = v(1);
  for (int i = 0; i < 8; ++i) f = Formula::conj(f, f);
  CHECK_THROWS_AS(env.index_of(f), overflow_error);
}

TEST_CASE("environment files: format, comments, and rejections") {
  std::vector<std::string> warnings;
  Environment env = load_env_text(
      "# the liar\n"
      "\n"
      "1 := ~p1\n",
      &warnings);
  CHECK(env.overrides().size() == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("canonical index") != std::string::npos);
  CHECK(warnings[0].find(index_to_string(env.canonical_index_of(Formula::neg(v(1))))) !=
        std::string::npos);

  CHECK_THROWS_AS(load_env_text("0 := p1\n"), env_error);
  CHECK_THROWS_AS(load_env_text("x := p1\n"), env_error);
  CHECK_THROWS_AS(load_env_text("1 = p1\n"), env_error);
  CHECK_THROWS_AS(load_env_text("1 := p1 &\n"), env_error);
  CHECK_THROWS_AS(load_env_text("1 := top\n"), env_error);
  CHECK_THROWS_AS(load_env_text("1 := p1\n1 := p2\n"), env_error);
  CHECK_THROWS_WITH(load_env_text("1 := p3\n2 := p3\n"), doctest::Contains("repeats"));
  CHECK_THROWS_WITH(load_env_file("/nonexistent/env"), doctest::Contains("cannot open"));
}

TEST_CASE("overrides map preserves the declared bindings") {
  Environment env = load_env_text("4 := p1 -> p2\n2 := bot\n");
  REQUIRE(env.overrides().size() == 2);
  auto it = env.overrides().begin();
  CHECK(it->first == 2);
  CHECK(equal(it->second, Formula::bot()));
  ++it;
  CHECK(it->first == 4);
  CHECK(equal(it->second, parse("p1 -> p2")));
  CHECK(env.index_of(Formula::bot()) == 2);  // override beats canonical index 1
}
