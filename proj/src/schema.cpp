#include "taulog/schema.hpp"

#include <optional>

#include "taulog/errors.hpp"

namespace taulog {
namespace {

using Kind = Formula::Kind;

FormulaRef t_of(const FormulaRef& a, const Environment& env) {
  return Formula::var(env.index_of(a));
}

// Definition of v, but only when v is the index that T(definition) resolves
// to; a duplicate index whose formula resolves elsewhere never occurs in an
// instance.
std::optional<FormulaRef> resolving_definition(Index v, const Environment& env) {
  FormulaRef d = env.definition_of(v);
  try {
    if (env.index_of(d) == v) return d;
  } catch (const overflow_error&) {
  }
  return std::nullopt;
}

// Leaves of the top-level conjunction spine, left to right.
void conj_leaves(const FormulaRef& f, std::vector<FormulaRef>& out) {
  if (f->kind() == Kind::And) {
    conj_leaves(f->left(), out);
    conj_leaves(f->right(), out);
  } else {
    out.push_back(f);
  }
}

std::optional<Index> var_of(const FormulaRef& f) {
  if (f->kind() == Kind::Var) return f->var_index();
  return std::nullopt;
}

}  // namespace

const char* schema_name(Schema s) {
  switch (s) {
    case Schema::TIntro: return "t-intro";
    case Schema::TAndForward: return "t-and-forward";
    case Schema::TAndBackward: return "t-and-backward";
    case Schema::TOrIntro: return "t-or-intro";
    case Schema::TOrElim: return "t-or-elim";
    case Schema::TMp: return "t-mp";
  }
  return "?";
}

Schema schema_from_name(const std::string& name) {
  for (int i = 0; i < kSchemaCount; ++i) {
    Schema s = static_cast<Schema>(i);
    if (name == schema_name(s)) return s;
  }
  throw schema_error("unknown schema '" + name + "'");
}

int schema_arity(Schema s) {
  switch (s) {
    case Schema::TIntro: return 1;
    case Schema::TOrElim: return 3;
    default: return 2;
  }
}

SchemaInstance instantiate(Schema s, std::vector<FormulaRef> params, const Environment& env) {
  if (static_cast<int>(params.size()) != schema_arity(s))
    throw schema_error(std::string(schema_name(s)) + " takes " +
                       std::to_string(schema_arity(s)) + " parameter(s)");
  for (const auto& p : params) {
    if (!p) throw schema_error("null parameter");
    if (contains_top(p)) throw schema_error("schema parameters must be top-free");
  }
  auto T = [&](const FormulaRef& a) { return t_of(a, env); };
  FormulaRef result;
  switch (s) {
    case Schema::TIntro:
      result = Formula::impl(params[0], T(params[0]));
      break;
    case Schema::TAndForward:
      result = Formula::impl(Formula::conj(T(params[0]), T(params[1])),
                             T(Formula::conj(params[0], params[1])));
      break;
    case Schema::TAndBackward:
      result = Formula::impl(T(Formula::conj(params[0], params[1])),
                             Formula::conj(T(params[0]), T(params[1])));
      break;
    case Schema::TOrIntro:
      result = Formula::impl(Formula::disj(T(params[0]), T(params[1])),
                             T(Formula::disj(params[0], params[1])));
      break;
    case Schema::TOrElim: {
      const FormulaRef &a = params[0], &b = params[1], &c = params[2];
      FormulaRef ant = Formula::conj(
          Formula::conj(T(Formula::disj(a, b)), T(Formula::impl(a, c))),
          T(Formula::impl(b, c)));
      result = Formula::impl(std::move(ant), T(c));
      break;
    }
    case Schema::TMp:
      result = Formula::impl(
          Formula::conj(T(params[0]), T(Formula::impl(params[0], params[1]))),
          T(params[1]));
      break;
  }
  return SchemaInstance{s, std::move(params), std::move(result)};
}

std::vector<SchemaInstance> recognize_axiom(const FormulaRef& f, const Environment& env) {
  std::vector<SchemaInstance> out;
  if (f->kind() != Kind::Imp) return out;
  const FormulaRef& ant = f->left();
  const FormulaRef& cons = f->right();

  auto push = [&](Schema s, std::vector<FormulaRef> params) {
    try {
      SchemaInstance inst = instantiate(s, std::move(params), env);
      if (equal(inst.result, f)) out.push_back(std::move(inst));
    } catch (const overflow_error&) {
    }
  };

  // t-intro: the consequent must be exactly T(antecedent).
  if (auto m = var_of(cons)) {
    try {
      if (!contains_top(ant) && env.index_of(ant) == *m) push(Schema::TIntro, {ant});
    } catch (const overflow_error&) {
    }
  }

  // t-mp / t-and-forward: antecedent T(A) & T(X), variable consequent.
  if (ant->kind() == Kind::And && var_of(cons)) {
    auto a = var_of(ant->left());
    auto b = var_of(ant->right());
    if (a && b) {
      auto A = resolving_definition(*a, env);
      auto B = resolving_definition(*b, env);
      if (A && B) {
        push(Schema::TAndForward, {*A, *B});
        if ((*B)->kind() == Kind::Imp && equal((*B)->left(), *A))
          push(Schema::TMp, {*A, (*B)->right()});
      }
    }
  }

  // t-and-backward: T(A & B) -> T(A) & T(B).
  if (var_of(ant) && cons->kind() == Kind::And) {
    if (auto D = resolving_definition(*var_of(ant), env)) {
      if ((*D)->kind() == Kind::And) push(Schema::TAndBackward, {(*D)->left(), (*D)->right()});
    }
  }

  // t-or-intro: T(A) | T(B) -> T(A | B).
  if (ant->kind() == Kind::Or && var_of(cons)) {
    auto a = var_of(ant->left());
    auto b = var_of(ant->right());
    if (a && b) {
      auto A = resolving_definition(*a, env);
      auto B = resolving_definition(*b, env);
      if (A && B) push(Schema::TOrIntro, {*A, *B});
    }
  }

  // t-or-elim: three conjuncts in order, any association, so the equality
  // check against the (left-associated) canonical instantiation is done on
  // the flattened antecedent instead.
  if (ant->kind() == Kind::And && var_of(cons)) {
    std::vector<FormulaRef> leaves;
    conj_leaves(ant, leaves);
    if (leaves.size() == 3 && var_of(leaves[0]) && var_of(leaves[1]) && var_of(leaves[2])) {
      auto X = resolving_definition(*var_of(leaves[0]), env);
      auto Y = resolving_definition(*var_of(leaves[1]), env);
      auto Z = resolving_definition(*var_of(leaves[2]), env);
      if (X && Y && Z && (*X)->kind() == Kind::Or && (*Y)->kind() == Kind::Imp &&
          (*Z)->kind() == Kind::Imp && equal((*Y)->left(), (*X)->left()) &&
          equal((*Z)->left(), (*X)->right()) && equal((*Z)->right(), (*Y)->right())) {
        try {
          if (env.index_of((*Y)->right()) == *var_of(cons)) {
            SchemaInstance inst = instantiate(
                Schema::TOrElim, {(*X)->left(), (*X)->right(), (*Y)->right()}, env);
            out.push_back(std::move(inst));
          }
        } catch (const overflow_error&) {
        }
      }
    }
  }

  return out;
}

}  // namespace taulog
