#include "taulog/semantics.hpp"

#include <algorithm>
#include <deque>

#include "taulog/errors.hpp"
#include "taulog/reduce.hpp"

namespace taulog {

const char* status_name(TauStatus s) {
  switch (s) {
    case TauStatus::DecidedFalse: return "decided-false";
    case TauStatus::DecidedTrue: return "decided-true";
    case TauStatus::StableUndecided: return "stable-undecided";
    case TauStatus::CapUndetermined: return "cap-undetermined";
  }
  return "?";
}

EvalEngine::EvalEngine(Environment env, EvalConfig cfg) : env_(std::move(env)), cfg_(cfg) {
  if (cfg_.stage_cap < 1) throw error("stage cap must be at least 1");
  if (cfg_.closure_bound < 1) throw error("closure bound must be at least 1");
}

std::pair<std::vector<Index>, bool> EvalEngine::dependency_closure(Index i) const {
  return dependency_closure(i, cfg_.closure_bound);
}

std::pair<std::vector<Index>, bool> EvalEngine::dependency_closure(Index i, std::size_t bound) const {
  if (i == 0) throw error("indices start at 1");
  std::set<Index> seen;
  std::deque<Index> work;
  bool complete = true;
  auto add = [&](Index v) {
    if (seen.count(v)) return;
    if (seen.size() >= bound) {
      complete = false;
      return;
    }
    seen.insert(v);
    work.push_back(v);
  };
  add(i);
  while (!work.empty() && complete) {
    Index j = work.front();
    work.pop_front();
    for (Index v : variables_of(env_.definition_of(j))) {
      add(v);
      if (!complete) break;
    }
  }
  return {std::vector<Index>(seen.begin(), seen.end()), complete};
}

namespace {

bool is_const(const FormulaRef& f) {
  return f->kind() == Formula::Kind::Bot || f->kind() == Formula::Kind::Top;
}

}  // namespace

TauVerdict EvalEngine::run(const FormulaRef& query, bool use_memo, bool want_trace) {
  if (contains_top(query)) throw error("valuation takes a top-free formula");

  // Resolve the query to a row of the enumeration. A formula whose own
  // index is too large to represent is evaluated as a virtual row: its
  // staged history depends only on its definition, which we hold.
  std::optional<Index> qidx;
  FormulaRef qdef;
  if (query->kind() == Formula::Kind::Var) {
    qidx = query->var_index();
    qdef = env_.definition_of(*qidx);
  } else {
    qdef = query;
    try {
      qidx = env_.index_of(query);
    } catch (const overflow_error&) {
      qidx = std::nullopt;
    }
  }

  TauVerdict verdict;
  verdict.query_index = qidx;

  // Dependency closure of the query row.
  std::set<Index> seen;
  std::deque<Index> work;
  bool complete = true;
  auto add = [&](Index v) {
    if (seen.count(v)) return;
    if (seen.size() >= cfg_.closure_bound) {
      complete = false;
      return;
    }
    seen.insert(v);
    work.push_back(v);
  };
  if (qidx) add(*qidx);
  else
    for (Index v : variables_of(qdef)) add(v);
  while (!work.empty() && complete) {
    Index j = work.front();
    work.pop_front();
    for (Index v : variables_of(env_.definition_of(j))) {
      add(v);
      if (!complete) break;
    }
  }
  verdict.closure.assign(seen.begin(), seen.end());
  verdict.closure_complete = complete;
  if (!complete) {
    verdict.value = 1;
    verdict.status = TauStatus::CapUndetermined;
    verdict.stage = 0;
    verdict.sound = false;
    return verdict;
  }

  struct Row {
    std::optional<Index> index;  // nullopt for a virtual query row
    FormulaRef def;
    FormulaRef cur;
    bool active = true;  // staged in this run (not served from the memo)
    bool decided = false;
    bool value = false;
    int stage = 0;
  };
  std::vector<Row> rows;
  std::map<Index, std::size_t> row_of;
  for (Index j : verdict.closure) {
    Row r;
    r.index = j;
    r.def = env_.definition_of(j);
    rows.push_back(std::move(r));
    row_of.emplace(j, rows.size() - 1);
  }
  std::size_t target;
  if (qidx) {
    target = row_of.at(*qidx);
  } else {
    Row r;
    r.def = qdef;
    rows.push_back(std::move(r));
    target = rows.size() - 1;
  }

  // Only decided rows are memoized: a decision stage depends on nothing
  // outside the row's own dependency cone, so replaying it as a scheduled
  // event is exact in any closure. A freeze stage belongs to a whole
  // closure run, not to a row, so undecided rows are always re-staged.
  int max_scheduled = 0;
  if (use_memo) {
    for (Row& r : rows) {
      if (!r.index) continue;
      auto it = memo_.find(*r.index);
      if (it == memo_.end()) continue;
      const Core& c = it->second;
      r.active = false;
      r.decided = true;
      r.value = c.status == TauStatus::DecidedTrue;
      r.stage = c.stage;
      max_scheduled = std::max(max_scheduled, c.stage);
    }
  }

  bool settled = false;
  auto finish = [&](TauStatus status, int stage) {
    settled = true;
    // Persist every decision discovered in this run.
    for (Row& r : rows) {
      if (!r.active || !r.index || !r.decided) continue;
      memo_[*r.index] = {r.value ? 1 : 0,
                         r.value ? TauStatus::DecidedTrue : TauStatus::DecidedFalse, r.stage};
    }
    verdict.status = status;
    verdict.stage = stage;
    verdict.sound = status != TauStatus::CapUndetermined;
    switch (status) {
      case TauStatus::DecidedFalse: verdict.value = 0; break;
      default: verdict.value = 1; break;
    }
  };

  // The target may already be settled by the memo.
  if (!rows[target].active) {
    const Row& r = rows[target];
    finish(r.value ? TauStatus::DecidedTrue : TauStatus::DecidedFalse, r.stage);
    return verdict;
  }

  std::vector<StageEntry> trace;
  auto record = [&](int k, const std::vector<std::size_t>& events) {
    if (!want_trace) return;
    StageEntry entry;
    entry.stage = k;
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
      const Row& r = rows[idx];
      TraceRow tr;
      tr.query_row = idx == target;
      tr.has_index = r.index.has_value();
      tr.index = r.index.value_or(0);
      tr.formula = r.cur;
      tr.decided_value = r.decided ? (r.value ? 1 : 0) : -1;
      tr.newly_decided = std::find(events.begin(), events.end(), idx) != events.end();
      entry.rows.push_back(std::move(tr));
    }
    trace.push_back(std::move(entry));
  };

  std::map<Index, bool> subst_map;  // decisions at stages <= k-1
  std::vector<std::pair<Index, bool>> pending;
  int last_stage = 0;

  for (int k = 1; k <= cfg_.stage_cap; ++k) {
    last_stage = k;
    for (auto& [i, v] : pending) subst_map[i] = v;
    pending.clear();

    bool changed = false;
    std::vector<std::size_t> events;
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
      Row& r = rows[idx];
      if (r.decided) {
        if (!r.active && r.stage == k) {
          events.push_back(idx);
          pending.emplace_back(*r.index, r.value);
        }
        continue;
      }
      FormulaRef next = k == 1 ? reduce(r.def) : reduce(substitute(r.cur, subst_map));
      if (k > 1 && next.get() != r.cur.get()) changed = true;
      r.cur = next;
      if (is_const(next)) {
        r.decided = true;
        r.value = next->kind() == Formula::Kind::Top;
        r.stage = k;
        events.push_back(idx);
        if (r.index) pending.emplace_back(*r.index, r.value);
      }
    }
    record(k, events);

    if (rows[target].decided) {
      finish(rows[target].value ? TauStatus::DecidedTrue : TauStatus::DecidedFalse,
             rows[target].stage);
      break;
    }
    if (k >= 2 && events.empty() && !changed && max_scheduled <= k) {
      // A pass with no new decisions and no formula changes is a fixed
      // point: nothing undecided here ever decides.
      finish(TauStatus::StableUndecided, k);
      break;
    }
  }

  if (!settled) finish(TauStatus::CapUndetermined, cfg_.stage_cap);

  if (want_trace) {
    StageTrace& out = verdict.trace;
    out.total_stages = last_stage;
    if (rows.size() <= cfg_.trace_full_closure ||
        static_cast<int>(trace.size()) <= 2 * cfg_.trace_edge_stages) {
      out.stages = std::move(trace);
    } else {
      out.elided = true;
      int edge = cfg_.trace_edge_stages;
      out.stages.assign(trace.begin(), trace.begin() + edge);
      out.stages.insert(out.stages.end(), trace.end() - edge, trace.end());
    }
  }
  return verdict;
}

TauVerdict EvalEngine::tau(const FormulaRef& f) { return run(f, false, true); }

TauVerdict EvalEngine::evaluate(const FormulaRef& f) { return run(f, true, false); }

bool EvalEngine::check_axiom_tau(const SchemaInstance& inst) {
  TauVerdict v = evaluate(inst.result);
  return v.value == 1 && v.sound;
}

FormulaRef EvalEngine::stage_formula(Index i, int k) {
  if (k < 1) throw error("stages start at 1");
  if (k > cfg_.stage_cap) throw error("stage cap exceeded");
  TauVerdict v = run(Formula::var(i), false, true);
  if (!v.closure_complete) throw error("dependency closure exceeds the bound");
  const auto& stages = v.trace.stages;
  auto row_formula = [&](const StageEntry& entry) -> FormulaRef {
    for (const TraceRow& r : entry.rows)
      if (r.has_index && r.index == i) return r.formula;
    throw error("row missing from trace");
  };
  for (const StageEntry& entry : stages)
    if (entry.stage == k) return row_formula(entry);
  // Past the recorded stages the row is constant (decided) or frozen.
  if (v.status == TauStatus::DecidedTrue || v.status == TauStatus::DecidedFalse) {
    if (k >= v.stage) return v.value ? Formula::top() : Formula::bot();
  }
  if (!stages.empty() && k > stages.back().stage) return row_formula(stages.back());
  throw error("stage history was elided; raise the trace retention limits");
}

namespace {

bool eval_all_true(const FormulaRef& f) {
  switch (f->kind()) {
    case Formula::Kind::Var: return true;
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot: return false;
    case Formula::Kind::And: return eval_all_true(f->left()) && eval_all_true(f->right());
    case Formula::Kind::Or: return eval_all_true(f->left()) || eval_all_true(f->right());
    default: return !eval_all_true(f->left()) || eval_all_true(f->right());
  }
}

}  // namespace

bool classical_sanity(const SchemaInstance& inst) { return eval_all_true(inst.result); }

}  // namespace taulog
