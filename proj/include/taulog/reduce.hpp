#pragma once

#include <string>
#include <vector>

#include "taulog/formula.hpp"

namespace taulog {

// Constant propagation over the extended language. A formula is reduced
// when it is bot, top, or contains neither. One bottom-up pass suffices:
// with both children reduced, a single rule application at a node already
// yields a reduced formula (a reduced child or a constant).
//
// Rule table, applied to a node whose children are reduced:
//   (1) top & A, A & top  =>  A
//   (2) top | A, A | top  =>  top
//   (3) bot & A, A & bot  =>  bot
//   (4) bot | A, A | bot  =>  A
//   (5) top -> A          =>  A
//   (6) A -> top          =>  top
//   (7) bot -> A          =>  top
//   (8) A -> bot          =>  bot   when A != bot
// Overlaps are confluent; ties break in the fixed order 1,3 / 2,4 /
// 5,7,6,8 so traces are stable.
bool is_reduced(const FormulaRef& f);
FormulaRef reduce(const FormulaRef& f);

// One rewrite per applied rule, in post-order. `path` walks from the root
// ("." is the root, ".LR" its left child's right child); `before` is the
// node with already-reduced children, i.e. the actual redex.
struct ReduceStep {
  std::string path;
  int rule;
  FormulaRef before;
  FormulaRef after;
};

FormulaRef reduce_traced(const FormulaRef& f, std::vector<ReduceStep>& steps);

}  // namespace taulog
