#pragma once

#include <cstddef>

#include "taulog/derivation.hpp"
#include "taulog/environment.hpp"

namespace taulog {

struct SearchConfig {
  int max_depth = 6;
  std::size_t pool_limit = 4096;     // axiom instances considered
  std::size_t max_expansions = 200000;
};

struct SearchResult {
  DerivationRef derivation;  // null when nothing was found in bounds
  std::size_t expansions = 0;
  std::size_t pool_size = 0;
};

// Bounded backward search for a closed derivation of the goal. Axiom
// instances are drawn from the subformula closure of the goal and of the
// override definitions, in a deterministic order. A found derivation is
// revalidated by check before being returned.
SearchResult search_proof(const FormulaRef& goal, const Environment& env,
                          const SearchConfig& cfg = SearchConfig{});

}  // namespace taulog
