#include "taulog/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "taulog/errors.hpp"
#include "taulog/print.hpp"
#include "taulog/schema.hpp"

namespace taulog {

namespace {

void subformulas(const FormulaRef& f, std::vector<FormulaRef>& out, std::set<std::string>& seen) {
  if (contains_top(f)) return;
  if (!seen.insert(print(f)).second) return;
  out.push_back(f);
  if (f->is_binary()) {
    subformulas(f->left(), out, seen);
    subformulas(f->right(), out, seen);
  }
}

struct Searcher {
  const Environment& env;
  const SearchConfig& cfg;
  std::vector<SchemaInstance> pool;
  std::size_t expansions = 0;
  bool exhausted = false;            // expansion budget ran out
  std::set<std::string> path;        // states on the current branch

  void build_pool(const FormulaRef& goal) {
    std::vector<FormulaRef> base;
    std::set<std::string> seen;
    subformulas(goal, base, seen);
    for (const auto& [i, def] : env.overrides()) subformulas(def, base, seen);
    std::stable_sort(base.begin(), base.end(), [](const FormulaRef& a, const FormulaRef& b) {
      std::size_t na = node_count(a), nb = node_count(b);
      if (na != nb) return na < nb;
      return print(a) < print(b);
    });

    auto admit = [&](Schema s, std::vector<FormulaRef> params) {
      if (pool.size() >= cfg.pool_limit) return false;
      try {
        pool.push_back(instantiate(s, std::move(params), env));
      } catch (const overflow_error&) {
        // an instance whose index does not fit is simply not offered
      }
      return true;
    };

    // Cheap arities first so a tight pool limit still sees every schema.
    for (Schema s : {Schema::TIntro}) {
      for (const FormulaRef& a : base)
        if (!admit(s, {a})) return;
    }
    for (Schema s : {Schema::TAndForward, Schema::TAndBackward, Schema::TOrIntro, Schema::TMp}) {
      for (const FormulaRef& a : base)
        for (const FormulaRef& b : base)
          if (!admit(s, {a, b})) return;
    }
    for (const FormulaRef& a : base)
      for (const FormulaRef& b : base)
        for (const FormulaRef& c : base)
          if (!admit(Schema::TOrElim, {a, b, c})) return;
  }

  static std::string state_key(const FormulaRef& goal, const std::vector<FormulaRef>& ctx) {
    std::string key = print(goal);
    key += " |-";
    for (const FormulaRef& h : ctx) {
      key += ' ';
      key += print(h);
    }
    return key;
  }

  static std::vector<FormulaRef> extend(std::vector<FormulaRef> ctx, const FormulaRef& h) {
    ctx.push_back(h);
    std::sort(ctx.begin(), ctx.end(),
              [](const FormulaRef& a, const FormulaRef& b) { return print(a) < print(b); });
    return ctx;
  }

  DerivationRef prove(const FormulaRef& goal, const std::vector<FormulaRef>& ctx, int depth) {
    if (depth <= 0) return nullptr;
    if (++expansions > cfg.max_expansions) {
      exhausted = true;
      return nullptr;
    }
    const std::string key = state_key(goal, ctx);
    if (!path.insert(key).second) return nullptr;
    DerivationRef found = step(goal, ctx, depth);
    path.erase(key);
    return found;
  }

  DerivationRef step(const FormulaRef& goal, const std::vector<FormulaRef>& ctx, int depth) {
    // Immediate closures first.
    for (const FormulaRef& h : ctx)
      if (equal(h, goal)) return Derivation::hyp(h);
    {
      std::vector<SchemaInstance> ax = recognize_axiom(goal, env);
      if (!ax.empty()) return Derivation::axiom(ax.front());
    }
    for (const FormulaRef& h : ctx) {
      if (h->kind() != Formula::Kind::And) continue;
      if (equal(h->left(), goal)) return Derivation::and_e_left(Derivation::hyp(h));
      if (equal(h->right(), goal)) return Derivation::and_e_right(Derivation::hyp(h));
    }

    // Introductions by the goal's shape.
    switch (goal->kind()) {
      case Formula::Kind::And: {
        DerivationRef l = prove(goal->left(), ctx, depth - 1);
        if (l) {
          DerivationRef r = prove(goal->right(), ctx, depth - 1);
          if (r) return Derivation::and_i(std::move(l), std::move(r));
        }
        break;
      }
      case Formula::Kind::Imp: {
        DerivationRef body = prove(goal->right(), extend(ctx, goal->left()), depth - 1);
        if (body) return Derivation::imp_i(goal->left(), std::move(body));
        break;
      }
      case Formula::Kind::Or: {
        if (DerivationRef l = prove(goal->left(), ctx, depth - 1))
          return Derivation::or_i_left(std::move(l), goal->right());
        if (DerivationRef r = prove(goal->right(), ctx, depth - 1))
          return Derivation::or_i_right(std::move(r), goal->left());
        break;
      }
      default: break;
    }

    // Implication spines from hypotheses and from the axiom pool: peel
    // antecedents until the tail is the goal, then prove the arguments.
    for (const FormulaRef& h : ctx)
      if (DerivationRef d = via_spine(Derivation::hyp(h), h, goal, ctx, depth)) return d;
    for (const SchemaInstance& inst : pool)
      if (DerivationRef d = via_spine(Derivation::axiom(inst), inst.result, goal, ctx, depth))
        return d;

    // Case split on a hypothesis disjunction.
    for (const FormulaRef& h : ctx) {
      if (h->kind() != Formula::Kind::Or) continue;
      DerivationRef l = prove(goal, extend(ctx, h->left()), depth - 1);
      if (!l) continue;
      DerivationRef r = prove(goal, extend(ctx, h->right()), depth - 1);
      if (r) return Derivation::or_e(Derivation::hyp(h), std::move(l), std::move(r));
    }
    return nullptr;
  }

  DerivationRef via_spine(DerivationRef base, const FormulaRef& shape, const FormulaRef& goal,
                          const std::vector<FormulaRef>& ctx, int depth) {
    std::vector<FormulaRef> args;
    FormulaRef cur = shape;
    while (cur->kind() == Formula::Kind::Imp) {
      args.push_back(cur->left());
      cur = cur->right();
      if (!equal(cur, goal)) continue;
      std::vector<DerivationRef> proofs;
      bool ok = true;
      for (const FormulaRef& a : args) {
        DerivationRef p = prove(a, ctx, depth - 1);
        if (!p) {
          ok = false;
          break;
        }
        proofs.push_back(std::move(p));
      }
      if (!ok) continue;
      DerivationRef d = base;
      for (DerivationRef& p : proofs) d = Derivation::imp_e(std::move(d), std::move(p));
      return d;
    }
    return nullptr;
  }
};

}  // namespace

SearchResult search_proof(const FormulaRef& goal, const Environment& env,
                          const SearchConfig& cfg) {
  if (!goal) throw error("goal is null");
  if (contains_top(goal)) throw error("search takes a top-free goal");
  Searcher s{env, cfg, {}, 0, false, {}};
  s.build_pool(goal);
  SearchResult out;
  out.pool_size = s.pool.size();
  DerivationRef d = s.prove(goal, {}, cfg.max_depth);
  out.expansions = s.expansions;
  if (d) {
    CheckResult r = check(d, env);  // a found derivation must satisfy the kernel
    if (!r.open.empty() || !equal(r.conclusion, goal))
      throw error("search produced a derivation that does not close the goal");
    out.derivation = std::move(d);
  }
  return out;
}

}  // namespace taulog
