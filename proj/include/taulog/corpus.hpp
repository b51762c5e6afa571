#pragma once

#include <string>
#include <vector>

namespace taulog {

struct CorpusItem {
  std::string scenario;
  std::string label;
  std::string kind;  // "theorem", "theorem-tau", "tau", "alias"
  bool pass = false;
  std::string message;
};

struct CorpusReport {
  std::vector<CorpusItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return !items.empty();
  }
};

// Runs every scenario directory under root (or a single named one).
// A scenario holds an `env` file, an `expect.json` with stored theorems
// and valuation expectations, and proof scripts. Every stored theorem is
// additionally required to take value 1 with a sound status, and every
// valuation expectation is checked against both the engine and the naive
// oracle.
CorpusReport run_corpus(const std::string& root, const std::string& only_scenario = "");

}  // namespace taulog
