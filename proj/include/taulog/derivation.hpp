#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "taulog/environment.hpp"
#include "taulog/formula.hpp"
#include "taulog/schema.hpp"

namespace taulog {

class Derivation;
using DerivationRef = std::shared_ptr<const Derivation>;

// Natural-deduction trees over the minimal propositional kernel. The rule
// set has no elimination for bot and nothing that consumes a truth
// ascription; any strength beyond pure minimal logic must enter through
// axiom leaves.
class Derivation {
 public:
  enum class Rule : unsigned char {
    Hyp,
    AndI,
    AndEL,
    AndER,
    OrIL,
    OrIR,
    OrE,
    ImpI,
    ImpE,
    Axiom,
  };

  static DerivationRef hyp(FormulaRef f);
  static DerivationRef and_i(DerivationRef left, DerivationRef right);
  static DerivationRef and_e_left(DerivationRef d);
  static DerivationRef and_e_right(DerivationRef d);
  // Conclusion of the premise becomes the named side of the disjunction;
  // the other side is the added formula.
  static DerivationRef or_i_left(DerivationRef d, FormulaRef added);
  static DerivationRef or_i_right(DerivationRef d, FormulaRef added);
  // or_e(major, from_left, from_right): both branches must conclude the
  // same formula; the left branch may use the left disjunct as a
  // hypothesis, the right branch the right disjunct.
  static DerivationRef or_e(DerivationRef major, DerivationRef from_left, DerivationRef from_right);
  static DerivationRef imp_i(FormulaRef antecedent, DerivationRef body);
  static DerivationRef imp_e(DerivationRef imp, DerivationRef arg);
  static DerivationRef axiom(SchemaInstance inst);

  Rule rule() const { return rule_; }
  // Hyp: the hypothesis. ImpI: the discharged antecedent. OrIL / OrIR:
  // the added disjunct. Null otherwise.
  const FormulaRef& formula() const { return formula_; }
  const std::vector<DerivationRef>& children() const { return children_; }
  const std::optional<SchemaInstance>& instance() const { return instance_; }

 private:
  Derivation() = default;

  Rule rule_ = Rule::Hyp;
  FormulaRef formula_;
  std::vector<DerivationRef> children_;
  std::optional<SchemaInstance> instance_;
};

struct CheckResult {
  FormulaRef conclusion;
  // Open hypotheses as a multiset, sorted by printed form. Discharge at
  // imp-i and at or-e branches removes every matching occurrence.
  std::vector<FormulaRef> open;
};

// Validates the whole tree against the environment; axiom leaves are
// reinstantiated and compared, so a tree checked under the wrong
// environment fails rather than passing silently. Throws check_error
// carrying the offending node's path, e.g. "root.2.1".
CheckResult check(const DerivationRef& d, const Environment& env);

// Conclusion of a valid tree with no open hypotheses; throws check_error
// if any hypothesis remains open.
FormulaRef theorem_of(const DerivationRef& d, const Environment& env);

}  // namespace taulog
