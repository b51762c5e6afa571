#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "taulog/formula.hpp"

namespace taulog {

// The enumeration A_1, A_2, ... every formula lives in. A finite override
// map pins chosen indices to chosen formulas (this is where self-reference
// comes from: 1 := ~p1 makes p1 say "A_1 is not true"); every other index
// takes its definition from the base enumeration, rank-shifted past the
// override keys so the whole assignment stays onto and collision-free.
//
// An overridden formula also keeps a canonical index, so two indices may
// define the same formula. That duplication is deliberate and harmless:
// staged valuation depends only on the defining formula.
class Environment {
 public:
  Environment() = default;
  explicit Environment(std::vector<std::pair<Index, FormulaRef>> overrides);

  // Smallest override index defining f, else canonical_index_of(f).
  // f must be top-free. Throws overflow_error when the canonical code is
  // not representable.
  Index index_of(const FormulaRef& f) const;

  // Total on positive indices.
  FormulaRef definition_of(Index i) const;

  // Position of f in the base enumeration after skipping override keys.
  Index canonical_index_of(const FormulaRef& f) const;

  const std::map<Index, FormulaRef>& overrides() const { return overrides_; }

 private:
  std::size_t keys_at_most(Index i) const;

  std::map<Index, FormulaRef> overrides_;
  std::vector<Index> keys_;  // ascending
};

// Line format: "<index> := <formula>", '#' comments, blank lines ignored.
// Duplicate indices and duplicate formulas among the overrides are errors;
// each override's canonical duplicate index is reported as a warning.
Environment load_env(std::istream& in, std::vector<std::string>* warnings = nullptr);
Environment load_env_text(const std::string& text, std::vector<std::string>* warnings = nullptr);
Environment load_env_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

}  // namespace taulog
