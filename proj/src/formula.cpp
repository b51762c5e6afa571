#include "taulog/formula.hpp"

#include "taulog/errors.hpp"

namespace taulog {

std::string index_to_string(Index v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  return std::string(out.rbegin(), out.rend());
}

std::optional<Index> index_from_string(std::string_view s) {
  if (s.empty()) return std::nullopt;
  Index v = 0;
  const Index max = ~Index{0};
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    Index d = static_cast<Index>(c - '0');
    if (v > (max - d) / 10) return std::nullopt;
    v = v * 10 + d;
  }
  return v;
}

FormulaRef Formula::var(Index index) {
  if (index == 0) throw error("variable indices start at 1");
  return FormulaRef(new Formula(Kind::Var, index, nullptr, nullptr));
}

FormulaRef Formula::bot() {
  static const FormulaRef instance(new Formula(Kind::Bot, 0, nullptr, nullptr));
  return instance;
}

FormulaRef Formula::top() {
  static const FormulaRef instance(new Formula(Kind::Top, 0, nullptr, nullptr));
  return instance;
}

FormulaRef Formula::conj(FormulaRef l, FormulaRef r) {
  if (!l || !r) throw error("null operand");
  return FormulaRef(new Formula(Kind::And, 0, std::move(l), std::move(r)));
}

FormulaRef Formula::disj(FormulaRef l, FormulaRef r) {
  if (!l || !r) throw error("null operand");
  return FormulaRef(new Formula(Kind::Or, 0, std::move(l), std::move(r)));
}

FormulaRef Formula::impl(FormulaRef l, FormulaRef r) {
  if (!l || !r) throw error("null operand");
  return FormulaRef(new Formula(Kind::Imp, 0, std::move(l), std::move(r)));
}

FormulaRef Formula::neg(FormulaRef a) { return impl(std::move(a), bot()); }

FormulaRef Formula::iff(FormulaRef a, FormulaRef b) {
  return conj(impl(a, b), impl(b, a));
}

Index Formula::var_index() const {
  if (kind_ != Kind::Var) throw error("var_index on a non-variable node");
  return var_;
}

const FormulaRef& Formula::left() const {
  if (!is_binary()) throw error("left on a leaf node");
  return left_;
}

const FormulaRef& Formula::right() const {
  if (!is_binary()) throw error("right on a leaf node");
  return right_;
}

bool equal(const FormulaRef& a, const FormulaRef& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Formula::Kind::Bot:
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Var:
      return a->var_index() == b->var_index();
    default:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
}

bool contains_top(const FormulaRef& f) {
  switch (f->kind()) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot:
    case Formula::Kind::Var: return false;
    default:
      return contains_top(f->left()) || contains_top(f->right());
  }
}

bool contains_constant(const FormulaRef& f) {
  switch (f->kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot: return true;
    case Formula::Kind::Var: return false;
    default:
      return contains_constant(f->left()) || contains_constant(f->right());
  }
}

std::size_t node_count(const FormulaRef& f) {
  if (!f->is_binary()) return 1;
  return 1 + node_count(f->left()) + node_count(f->right());
}

int depth(const FormulaRef& f) {
  if (!f->is_binary()) return 1;
  return 1 + std::max(depth(f->left()), depth(f->right()));
}

namespace {

void collect_vars(const FormulaRef& f, std::set<Index>& out) {
  switch (f->kind()) {
    case Formula::Kind::Var: out.insert(f->var_index()); return;
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return;
    default:
      collect_vars(f->left(), out);
      collect_vars(f->right(), out);
  }
}

}  // namespace

std::set<Index> variables_of(const FormulaRef& f) {
  std::set<Index> out;
  collect_vars(f, out);
  return out;
}

FormulaRef substitute(const FormulaRef& f, const std::map<Index, bool>& decided) {
  switch (f->kind()) {
    case Formula::Kind::Bot:
    case Formula::Kind::Top:
      return f;
    case Formula::Kind::Var: {
      auto it = decided.find(f->var_index());
      if (it == decided.end()) return f;
      return it->second ? Formula::top() : Formula::bot();
    }
    default: {
      FormulaRef l = substitute(f->left(), decided);
      FormulaRef r = substitute(f->right(), decided);
      if (l.get() == f->left().get() && r.get() == f->right().get()) return f;
      switch (f->kind()) {
        case Formula::Kind::And: return Formula::conj(std::move(l), std::move(r));
        case Formula::Kind::Or: return Formula::disj(std::move(l), std::move(r));
        default: return Formula::impl(std::move(l), std::move(r));
      }
    }
  }
}

std::size_t hash_of(const FormulaRef& f) {
  auto mix = [](std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  };
  std::size_t h = static_cast<std::size_t>(f->kind()) + 1;
  switch (f->kind()) {
    case Formula::Kind::Var: {
      Index i = f->var_index();
      h = mix(h, static_cast<std::size_t>(static_cast<std::uint64_t>(i)));
      h = mix(h, static_cast<std::size_t>(static_cast<std::uint64_t>(i >> 64)));
      return h;
    }
    case Formula::Kind::Bot:
    case Formula::Kind::Top:
      return h;
    default:
      h = mix(h, hash_of(f->left()));
      h = mix(h, hash_of(f->right()));
      return h;
  }
}

}  // namespace taulog
