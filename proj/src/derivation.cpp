#include "taulog/derivation.hpp"

#include <algorithm>
#include <utility>

#include "taulog/errors.hpp"
#include "taulog/print.hpp"

namespace taulog {

namespace {

void need(const DerivationRef& d) {
  if (!d) throw error("derivation child is null");
}

void need(const FormulaRef& f) {
  if (!f) throw error("formula is null");
}

}  // namespace

DerivationRef Derivation::hyp(FormulaRef f) {
  need(f);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->rule_ = Rule::Hyp;
  d->formula_ = std::move(f);
  return d;
}

DerivationRef Derivation::and_i(DerivationRef left, DerivationRef right) {
  need(left);
  need(right);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->rule_ = Rule::AndI;
  d->children_ = {std::move(left), std::move(right)};
  return d;
}

DerivationRef Derivation::and_e_left(DerivationRef p) {
  need(p);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->rule_ = Rule::AndEL;
  d->children_ = {std::move(p)};
  return d;
}

DerivationRef Derivation::and_e_right(DerivationRef p) {
  need(p);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->rule_ = Rule::AndER;
  d->children_ = {std::move(p)};
  return d;
}

DerivationRef Derivation::or_i_left(DerivationRef p, FormulaRef added) {
  need(p);
  need(added);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->rule_ = Rule::OrIL;
  d->formula_ = std::move(added);
  d->children_ = {std::move(p)};
  return d;
}

DerivationRef Derivation::or_i_right(DerivationRef p, FormulaRef added) {
  need(p);
  need(added);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->rule_ = Rule::OrIR;
  d->formula_ = std::move(added);
  d->children_ = {std::move(p)};
  return d;
}

DerivationRef Derivation::or_e(DerivationRef major, DerivationRef from_left,
                               DerivationRef from_right) {
  need(major);
  need(from_left);
  need(from_right);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->rule_ = Rule::OrE;
  d->children_ = {std::move(major), std::move(from_left), std::move(from_right)};
  return d;
}

DerivationRef Derivation::imp_i(FormulaRef antecedent, DerivationRef body) {
  need(antecedent);
  need(body);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->rule_ = Rule::ImpI;
  d->formula_ = std::move(antecedent);
  d->children_ = {std::move(body)};
  return d;
}

DerivationRef Derivation::imp_e(DerivationRef imp, DerivationRef arg) {
  need(imp);
  need(arg);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->rule_ = Rule::ImpE;
  d->children_ = {std::move(imp), std::move(arg)};
  return d;
}

DerivationRef Derivation::axiom(SchemaInstance inst) {
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->rule_ = Rule::Axiom;
  d->instance_ = std::move(inst);
  return d;
}

namespace {

std::vector<FormulaRef> normalize(std::vector<FormulaRef> v) {
  std::sort(v.begin(), v.end(),
            [](const FormulaRef& a, const FormulaRef& b) { return print(a) < print(b); });
  return v;
}

std::vector<FormulaRef> merge(const std::vector<FormulaRef>& a, const std::vector<FormulaRef>& b) {
  std::vector<FormulaRef> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return normalize(std::move(out));
}

// Removes every occurrence: discharging a hypothesis closes all its uses.
std::vector<FormulaRef> discharge(std::vector<FormulaRef> v, const FormulaRef& f) {
  v.erase(std::remove_if(v.begin(), v.end(),
                         [&](const FormulaRef& x) { return equal(x, f); }),
          v.end());
  return v;
}

struct Checker {
  const Environment& env;

  CheckResult run(const DerivationRef& d, const std::string& path) const {
    if (!d) throw check_error("missing subderivation", path);
    switch (d->rule()) {
      case Derivation::Rule::Hyp: {
        const FormulaRef& f = d->formula();
        if (contains_top(f)) throw check_error("hypotheses must be top-free", path);
        return {f, {f}};
      }
      case Derivation::Rule::AndI: {
        CheckResult l = run(d->children()[0], path + ".1");
        CheckResult r = run(d->children()[1], path + ".2");
        return {Formula::conj(l.conclusion, r.conclusion), merge(l.open, r.open)};
      }
      case Derivation::Rule::AndEL: {
        CheckResult p = run(d->children()[0], path + ".1");
        if (p.conclusion->kind() != Formula::Kind::And)
          throw check_error("and-e-left needs a conjunction, got '" + print(p.conclusion) + "'",
                            path);
        return {p.conclusion->left(), std::move(p.open)};
      }
      case Derivation::Rule::AndER: {
        CheckResult p = run(d->children()[0], path + ".1");
        if (p.conclusion->kind() != Formula::Kind::And)
          throw check_error("and-e-right needs a conjunction, got '" + print(p.conclusion) + "'",
                            path);
        return {p.conclusion->right(), std::move(p.open)};
      }
      case Derivation::Rule::OrIL: {
        if (contains_top(d->formula()))
          throw check_error("added disjuncts must be top-free", path);
        CheckResult p = run(d->children()[0], path + ".1");
        return {Formula::disj(p.conclusion, d->formula()), std::move(p.open)};
      }
      case Derivation::Rule::OrIR: {
        if (contains_top(d->formula()))
          throw check_error("added disjuncts must be top-free", path);
        CheckResult p = run(d->children()[0], path + ".1");
        return {Formula::disj(d->formula(), p.conclusion), std::move(p.open)};
      }
      case Derivation::Rule::OrE: {
        CheckResult m = run(d->children()[0], path + ".1");
        if (m.conclusion->kind() != Formula::Kind::Or)
          throw check_error("or-e needs a disjunction, got '" + print(m.conclusion) + "'", path);
        CheckResult l = run(d->children()[1], path + ".2");
        CheckResult r = run(d->children()[2], path + ".3");
        if (!equal(l.conclusion, r.conclusion))
          throw check_error("or-e branches conclude '" + print(l.conclusion) + "' and '" +
                                print(r.conclusion) + "'",
                            path);
        std::vector<FormulaRef> open = m.open;
        std::vector<FormulaRef> lo = discharge(std::move(l.open), m.conclusion->left());
        std::vector<FormulaRef> ro = discharge(std::move(r.open), m.conclusion->right());
        open.insert(open.end(), lo.begin(), lo.end());
        open.insert(open.end(), ro.begin(), ro.end());
        return {l.conclusion, normalize(std::move(open))};
      }
      case Derivation::Rule::ImpI: {
        const FormulaRef& a = d->formula();
        if (contains_top(a)) throw check_error("antecedents must be top-free", path);
        CheckResult b = run(d->children()[0], path + ".1");
        return {Formula::impl(a, b.conclusion), discharge(std::move(b.open), a)};
      }
      case Derivation::Rule::ImpE: {
        CheckResult f = run(d->children()[0], path + ".1");
        CheckResult x = run(d->children()[1], path + ".2");
        if (f.conclusion->kind() != Formula::Kind::Imp)
          throw check_error("imp-e needs an implication, got '" + print(f.conclusion) + "'", path);
        if (!equal(f.conclusion->left(), x.conclusion))
          throw check_error("imp-e argument is '" + print(x.conclusion) + "' but the implication expects '" +
                                print(f.conclusion->left()) + "'",
                            path);
        return {f.conclusion->right(), merge(f.open, x.open)};
      }
      case Derivation::Rule::Axiom: {
        const SchemaInstance& inst = *d->instance();
        try {
          SchemaInstance again = instantiate(inst.schema, inst.params, env);
          if (!equal(again.result, inst.result))
            throw check_error("axiom instance does not match this environment", path);
        } catch (const check_error&) {
          throw;
        } catch (const error& e) {
          throw check_error(std::string("axiom leaf: ") + e.what(), path);
        }
        return {inst.result, {}};
      }
    }
    throw check_error("unknown rule", path);
  }
};

}  // namespace

CheckResult check(const DerivationRef& d, const Environment& env) {
  return Checker{env}.run(d, "root");
}

FormulaRef theorem_of(const DerivationRef& d, const Environment& env) {
  CheckResult r = check(d, env);
  if (!r.open.empty())
    throw check_error("open hypothesis '" + print(r.open.front()) + "' remains", "root");
  return r.conclusion;
}

}  // namespace taulog
