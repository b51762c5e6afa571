#include "taulog/print.hpp"

namespace taulog {
namespace {

// atom 5, ~ 4, & 3, | 2, -> 1
void render(const FormulaRef& f, int min_prec, std::string& out) {
  switch (f->kind()) {
    case Formula::Kind::Var:
      out += 'p';
      out += index_to_string(f->var_index());
      return;
    case Formula::Kind::Bot: out += "bot"; return;
    case Formula::Kind::Top: out += "top"; return;
    case Formula::Kind::Imp:
      if (f->right()->kind() == Formula::Kind::Bot) {
        if (4 < min_prec) { out += '('; render(f, 0, out); out += ')'; return; }
        out += '~';
        render(f->left(), 4, out);
        return;
      }
      if (1 < min_prec) { out += '('; render(f, 0, out); out += ')'; return; }
      render(f->left(), 2, out);
      out += " -> ";
      render(f->right(), 1, out);
      return;
    case Formula::Kind::And:
      if (3 < min_prec) { out += '('; render(f, 0, out); out += ')'; return; }
      render(f->left(), 3, out);
      out += " & ";
      render(f->right(), 4, out);
      return;
    case Formula::Kind::Or:
      if (2 < min_prec) { out += '('; render(f, 0, out); out += ')'; return; }
      render(f->left(), 2, out);
      out += " | ";
      render(f->right(), 3, out);
      return;
  }
}

}  // namespace

std::string print(const FormulaRef& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

}  // namespace taulog
