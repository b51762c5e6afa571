#pragma once

#include <string>
#include <vector>

#include "taulog/environment.hpp"
#include "taulog/formula.hpp"

namespace taulog {

// The six truth-axiom schemata. T(A) abbreviates the variable
// p_{index_of(A)}, so every instance is an ordinary formula.
//
//   t-intro         A -> T(A)
//   t-and-forward   T(A) & T(B) -> T(A & B)
//   t-and-backward  T(A & B) -> T(A) & T(B)
//   t-or-intro      T(A) | T(B) -> T(A | B)
//   t-or-elim       ((T(A | B) & T(A -> C)) & T(B -> C)) -> T(C)
//   t-mp            T(A) & T(A -> B) -> T(B)
enum class Schema : unsigned char {
  TIntro,
  TAndForward,
  TAndBackward,
  TOrIntro,
  TOrElim,
  TMp,
};

constexpr int kSchemaCount = 6;

const char* schema_name(Schema s);
Schema schema_from_name(const std::string& name);  // throws schema_error
int schema_arity(Schema s);

struct SchemaInstance {
  Schema schema;
  std::vector<FormulaRef> params;
  FormulaRef result;
};

// Builds the instance; params must be top-free and match the arity.
SchemaInstance instantiate(Schema s, std::vector<FormulaRef> params, const Environment& env);

// All (schema, params) whose instantiation equals f. Usually empty or a
// singleton, but distinct schemata can instantiate to the same formula
// (e.g. t-intro and t-and-forward collide under a truth-teller override).
// t-or-elim antecedents are matched modulo associativity of the top-level
// conjunction.
std::vector<SchemaInstance> recognize_axiom(const FormulaRef& f, const Environment& env);

}  // namespace taulog
