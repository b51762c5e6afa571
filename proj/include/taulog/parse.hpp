#pragma once

#include <string_view>

#include "taulog/formula.hpp"

namespace taulog {

class Environment;

// Grammar, loosest binding last:
//   atoms      pN (N >= 1), bot, top
//   prefix     ~
//   infix      &   (left-associative)
//              |   (left-associative)
//              ->  (right-associative)
//              <-> (non-associative)
//   grouping   ( ... )
//   sugar      T(phi): the variable p_{index_of(phi)}; needs an
//              environment and a top-free phi
//
// ~A lowers to A -> bot, A <-> B to (A -> B) & (B -> A).
FormulaRef parse(std::string_view text);
FormulaRef parse(std::string_view text, const Environment& env);

}  // namespace taulog
