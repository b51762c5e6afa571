#include "taulog/reduce.hpp"

namespace taulog {
namespace {

using Kind = Formula::Kind;

bool is_top(const FormulaRef& f) { return f->kind() == Kind::Top; }
bool is_bot(const FormulaRef& f) { return f->kind() == Kind::Bot; }

// Children already reduced. Returns rule number, 0 when no rule matches.
int match_rule(Kind k, const FormulaRef& l, const FormulaRef& r, FormulaRef& out) {
  switch (k) {
    case Kind::And:
      if (is_top(l)) { out = r; return 1; }
      if (is_top(r)) { out = l; return 1; }
      if (is_bot(l) || is_bot(r)) { out = Formula::bot(); return 3; }
      return 0;
    case Kind::Or:
      if (is_top(l) || is_top(r)) { out = Formula::top(); return 2; }
      if (is_bot(l)) { out = r; return 4; }
      if (is_bot(r)) { out = l; return 4; }
      return 0;
    case Kind::Imp:
      if (is_top(l)) { out = r; return 5; }
      if (is_bot(l)) { out = Formula::top(); return 7; }
      if (is_top(r)) { out = Formula::top(); return 6; }
      if (is_bot(r)) { out = Formula::bot(); return 8; }
      return 0;
    default:
      return 0;
  }
}

FormulaRef rebuild(Kind k, FormulaRef l, FormulaRef r) {
  switch (k) {
    case Kind::And: return Formula::conj(std::move(l), std::move(r));
    case Kind::Or: return Formula::disj(std::move(l), std::move(r));
    default: return Formula::impl(std::move(l), std::move(r));
  }
}

FormulaRef run(const FormulaRef& f, std::vector<ReduceStep>* steps, std::string& path) {
  if (!f->is_binary()) return f;
  path.push_back('L');
  FormulaRef l = run(f->left(), steps, path);
  path.back() = 'R';
  FormulaRef r = run(f->right(), steps, path);
  path.pop_back();

  FormulaRef out;
  int rule = match_rule(f->kind(), l, r, out);
  if (rule == 0) {
    if (l.get() == f->left().get() && r.get() == f->right().get()) return f;
    return rebuild(f->kind(), std::move(l), std::move(r));
  }
  if (steps) {
    FormulaRef before =
        (l.get() == f->left().get() && r.get() == f->right().get()) ? f : rebuild(f->kind(), l, r);
    steps->push_back({"." + path, rule, before, out});
  }
  return out;
}

}  // namespace

bool is_reduced(const FormulaRef& f) {
  if (is_bot(f) || is_top(f)) return true;
  return !contains_constant(f);
}

FormulaRef reduce(const FormulaRef& f) {
  std::string path;
  return run(f, nullptr, path);
}

FormulaRef reduce_traced(const FormulaRef& f, std::vector<ReduceStep>& steps) {
  std::string path;
  return run(f, &steps, path);
}

}  // namespace taulog
