#pragma once

#include <string>

#include "taulog/formula.hpp"

namespace taulog {

// Minimal-parenthesis rendering under the parser's precedence table.
// A -> bot prints as ~A; parse(print(f)) == f.
std::string print(const FormulaRef& f);

}  // namespace taulog
