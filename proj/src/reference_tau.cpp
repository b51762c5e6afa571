// Naive staged-valuation oracle. Deliberately shares no machinery with
// EvalEngine beyond the reduction pass and the environment: its own
// closure walk, its own substitution, a fully materialized stage table,
// and a verdict read off the table afterwards. Slow and obvious on
// purpose; the engine is tested against it.

#include <algorithm>

#include "taulog/errors.hpp"
#include "taulog/reduce.hpp"
#include "taulog/semantics.hpp"

namespace taulog {

namespace {

FormulaRef subst_plain(const FormulaRef& f, const std::map<Index, bool>& dec) {
  switch (f->kind()) {
    case Formula::Kind::Var: {
      auto it = dec.find(f->var_index());
      if (it == dec.end()) return f;
      return it->second ? Formula::top() : Formula::bot();
    }
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return f;
    case Formula::Kind::And:
      return Formula::conj(subst_plain(f->left(), dec), subst_plain(f->right(), dec));
    case Formula::Kind::Or:
      return Formula::disj(subst_plain(f->left(), dec), subst_plain(f->right(), dec));
    default:
      return Formula::impl(subst_plain(f->left(), dec), subst_plain(f->right(), dec));
  }
}

bool constant(const FormulaRef& f) {
  return f->kind() == Formula::Kind::Bot || f->kind() == Formula::Kind::Top;
}

}  // namespace

TauVerdict reference_tau(const FormulaRef& f, const Environment& env, int stage_cap,
                         std::size_t closure_bound) {
  if (stage_cap < 1) throw error("stage cap must be at least 1");
  if (closure_bound < 1) throw error("closure bound must be at least 1");
  if (contains_top(f)) throw error("valuation takes a top-free formula");

  std::optional<Index> qidx;
  FormulaRef qdef;
  if (f->kind() == Formula::Kind::Var) {
    qidx = f->var_index();
    qdef = env.definition_of(*qidx);
  } else {
    qdef = f;
    try {
      qidx = env.index_of(f);
    } catch (const overflow_error&) {
      qidx = std::nullopt;
    }
  }

  std::vector<Index> order;
  std::set<Index> seen;
  bool complete = true;
  auto add = [&](Index v) {
    if (seen.count(v)) return;
    if (seen.size() >= closure_bound) {
      complete = false;
      return;
    }
    seen.insert(v);
    order.push_back(v);
  };
  if (qidx) add(*qidx);
  else
    for (Index v : variables_of(qdef)) add(v);
  for (std::size_t h = 0; h < order.size() && complete; ++h)
    for (Index v : variables_of(env.definition_of(order[h]))) {
      add(v);
      if (!complete) break;
    }

  TauVerdict out;
  out.query_index = qidx;
  out.closure.assign(seen.begin(), seen.end());
  out.closure_complete = complete;
  if (!complete) {
    out.value = 1;
    out.status = TauStatus::CapUndetermined;
    out.stage = 0;
    out.sound = false;
    return out;
  }

  std::vector<std::optional<Index>> ridx;
  std::vector<FormulaRef> rdef;
  for (Index j : out.closure) {
    ridx.emplace_back(j);
    rdef.push_back(env.definition_of(j));
  }
  std::size_t target = 0;
  if (qidx) {
    target = static_cast<std::size_t>(
        std::lower_bound(out.closure.begin(), out.closure.end(), *qidx) - out.closure.begin());
  } else {
    ridx.emplace_back(std::nullopt);
    rdef.push_back(qdef);
    target = ridx.size() - 1;
  }

  const std::size_t n = ridx.size();
  std::vector<std::vector<FormulaRef>> table;  // table[k-1][row]
  struct Dec {
    bool value;
    int stage;
  };
  std::vector<std::optional<Dec>> dec(n);
  int frozen_at = 0;

  for (int k = 1; k <= stage_cap; ++k) {
    std::map<Index, bool> visible;  // decisions made at stages <= k-1
    for (std::size_t r = 0; r < n; ++r)
      if (ridx[r] && dec[r] && dec[r]->stage <= k - 1) visible[*ridx[r]] = dec[r]->value;
    std::vector<FormulaRef> col(n);
    bool new_dec = false;
    for (std::size_t r = 0; r < n; ++r) {
      col[r] = k == 1 ? reduce(rdef[r]) : reduce(subst_plain(table[k - 2][r], visible));
      if (!dec[r] && constant(col[r])) {
        dec[r] = Dec{col[r]->kind() == Formula::Kind::Top, k};
        new_dec = true;
      }
    }
    table.push_back(std::move(col));
    if (k >= 2 && !new_dec) {
      bool same = true;
      for (std::size_t r = 0; r < n && same; ++r)
        same = equal(table[k - 1][r], table[k - 2][r]);
      if (same) {
        frozen_at = k;
        break;
      }
    }
  }

  if (dec[target]) {
    out.value = dec[target]->value ? 1 : 0;
    out.status = dec[target]->value ? TauStatus::DecidedTrue : TauStatus::DecidedFalse;
    out.stage = dec[target]->stage;
    out.sound = true;
  } else if (frozen_at > 0) {
    out.value = 1;
    out.status = TauStatus::StableUndecided;
    out.stage = frozen_at;
    out.sound = true;
  } else {
    out.value = 1;
    out.status = TauStatus::CapUndetermined;
    out.stage = stage_cap;
    out.sound = false;
  }

  out.trace.total_stages = static_cast<int>(table.size());
  for (int k = 1; k <= static_cast<int>(table.size()); ++k) {
    StageEntry entry;
    entry.stage = k;
    for (std::size_t r = 0; r < n; ++r) {
      TraceRow tr;
      tr.query_row = r == target;
      tr.has_index = ridx[r].has_value();
      tr.index = ridx[r].value_or(0);
      tr.formula = table[k - 1][r];
      tr.decided_value = dec[r] && dec[r]->stage <= k ? (dec[r]->value ? 1 : 0) : -1;
      tr.newly_decided = dec[r] && dec[r]->stage == k;
      entry.rows.push_back(std::move(tr));
    }
    out.trace.stages.push_back(std::move(entry));
  }
  return out;
}

}  // namespace taulog
