#pragma once

#include <string>

#include "taulog/derivation.hpp"
#include "taulog/environment.hpp"

namespace taulog {

// Proof scripts are s-expressions:
//
//   (hyp "p1 & ~p1")
//   (and-i S S)   (and-e-left S)   (and-e-right S)
//   (or-i-left S "B")    adds B on the right
//   (or-i-right S "A")   adds A on the left
//   (or-e S S S)
//   (imp-i "A" S)   (imp-e S S)
//   (axiom t-intro "p1")   params follow the schema name
//
// Formulas appear as quoted strings in the usual grammar; T(...) resolves
// against the environment. ';' starts a comment to end of line.
//
// There is deliberately no ex-falso form and no truth-elimination form;
// the parser rejects their usual names with an explanation instead of
// treating them as unknown.
DerivationRef parse_script(const std::string& text, const Environment& env);

std::string print_script(const DerivationRef& d);

}  // namespace taulog
