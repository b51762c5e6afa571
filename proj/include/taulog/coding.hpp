#pragma once

#include "taulog/formula.hpp"

namespace taulog {

// Base enumeration of the proof language (top excluded): a bijection
// between formulas and the positive integers built from a tagged Cantor
// pairing. Guarantees, both property-tested:
//   - code_of(f) exceeds every variable index occurring in f;
//   - code_of(f) exceeds the code of every proper subformula of f.
// Together these make definition chains strictly descending, so
// dependency closures are finite.
//
// code_of throws overflow_error rather than wrapping; decode is total on
// positive inputs.
Index code_of(const FormulaRef& f);
FormulaRef decode(Index code);

}  // namespace taulog
