#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "taulog/environment.hpp"
#include "taulog/formula.hpp"
#include "taulog/schema.hpp"

namespace taulog {

// Staged truth valuation. Stage 1 of row i is reduce(definition_of(i));
// stage k+1 substitutes every variable decided at stages <= k (with bot or
// top) and reduces again. A row decides at the first stage its formula
// hits a constant. Rows that provably never decide (the whole closure
// passes a stage with no new decisions and no formula changes, hence is a
// fixed point) take value 1 with a sound status; rows still undecided at
// the stage cap take value 1 with an unsound one. The two cases are never
// conflated.
enum class TauStatus : unsigned char {
  DecidedFalse,
  DecidedTrue,
  StableUndecided,
  CapUndetermined,
};

const char* status_name(TauStatus s);

struct EvalConfig {
  int stage_cap = 1000;
  std::size_t closure_bound = 100000;
  // Trace retention: every stage is kept while the closure has at most
  // trace_full_closure rows; larger closures keep the first and last
  // trace_edge_stages stages.
  std::size_t trace_full_closure = 64;
  int trace_edge_stages = 10;
};

struct TraceRow {
  bool query_row = false;  // the queried formula's own row
  bool has_index = true;   // false only for a query whose index is unrepresentable
  Index index = 0;
  FormulaRef formula;       // A_i^k, reduced
  int decided_value = -1;   // -1 until decided, then 0/1 from the deciding stage on
  bool newly_decided = false;
};

struct StageEntry {
  int stage = 0;
  std::vector<TraceRow> rows;  // closure rows ascending, query row last when virtual
};

struct StageTrace {
  std::vector<StageEntry> stages;
  int total_stages = 0;
  bool elided = false;
};

struct TauVerdict {
  int value = 1;  // 0 or 1
  TauStatus status = TauStatus::CapUndetermined;
  // Deciding stage; freeze stage for stable-undecided; last computed stage
  // for cap-undetermined.
  int stage = 0;
  bool sound = false;  // false exactly for cap-undetermined
  bool closure_complete = true;
  std::optional<Index> query_index;
  std::vector<Index> closure;  // ascending
  StageTrace trace;
};

// Owns an environment, a configuration and a private memo table; one
// engine per thread of work, results are plain values.
class EvalEngine {
 public:
  explicit EvalEngine(Environment env, EvalConfig cfg = EvalConfig{});

  const Environment& env() const { return env_; }
  const EvalConfig& config() const { return cfg_; }

  // Full evaluation with a stage trace. f must be top-free.
  TauVerdict tau(const FormulaRef& f);

  // Traceless evaluation that reuses memoized row verdicts; same verdict,
  // value and stage as tau.
  TauVerdict evaluate(const FormulaRef& f);

  // True iff the instance's formula takes value 1 with a sound status.
  bool check_axiom_tau(const SchemaInstance& inst);

  // A_i^k for k in [1, stage_cap]. Past a decision or a freeze the row is
  // constant, so any k up to the cap is meaningful.
  FormulaRef stage_formula(Index i, int k);

  // Indices reachable from i through definitions; complete = false when
  // the bound cut the walk short.
  std::pair<std::vector<Index>, bool> dependency_closure(Index i) const;
  std::pair<std::vector<Index>, bool> dependency_closure(Index i, std::size_t bound) const;

 private:
  struct Core {
    int value;
    TauStatus status;
    int stage;
  };

  TauVerdict run(const FormulaRef& query, bool use_memo, bool want_trace);

  Environment env_;
  EvalConfig cfg_;
  std::map<Index, Core> memo_;
};

// Classical propositional check with every variable true: a screen for
// schema instances, which are classical tautologies under it.
bool classical_sanity(const SchemaInstance& inst);

// Naive oracle: materializes the whole stage table row by row, stage by
// stage, with no laziness, memoization or early exit, then reads the
// verdict off the table. Deliberately independent of EvalEngine's staging
// loop; used to cross-check it.
TauVerdict reference_tau(const FormulaRef& f, const Environment& env, int stage_cap = 1000,
                         std::size_t closure_bound = 100000);

}  // namespace taulog
