#include "taulog/script.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "taulog/errors.hpp"
#include "taulog/parse.hpp"
#include "taulog/print.hpp"

namespace taulog {

namespace {

struct Tok {
  enum Kind { LPar, RPar, Atom, Str, End };
  Kind kind;
  std::string text;
  std::size_t pos;  // 1-based
};

std::vector<Tok> lex(const std::string& text) {
  std::vector<Tok> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == ';') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::LPar, "(", i + 1});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Tok::RPar, ")", i + 1});
      ++i;
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < n && text[j] != '"') ++j;
      if (j == n) throw parse_error("unterminated quoted formula", i + 1);
      out.push_back({Tok::Str, text.substr(i + 1, j - i - 1), i + 1});
      i = j + 1;
      continue;
    }
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(' &&
           text[j] != ')' && text[j] != '"' && text[j] != ';')
      ++j;
    out.push_back({Tok::Atom, text.substr(i, j - i), i + 1});
    i = j;
  }
  out.push_back({Tok::End, "", n + 1});
  return out;
}

bool is_efq_name(const std::string& k) {
  return k == "efq" || k == "ex-falso" || k == "exfalso" || k == "bot-e" || k == "bot-elim" ||
         k == "absurd";
}

bool is_t_elim_name(const std::string& k) {
  return k == "t-elim" || k == "t-e" || k == "truth-elim" || k == "t-out";
}

struct Parser {
  const std::vector<Tok>& toks;
  const Environment& env;
  std::size_t at = 0;

  const Tok& peek() const { return toks[at]; }
  const Tok& take() { return toks[at < toks.size() - 1 ? at++ : at]; }

  [[noreturn]] static void fail(const std::string& msg, const Tok& t) {
    throw parse_error(msg, t.pos);
  }

  FormulaRef formula() {
    const Tok& t = take();
    if (t.kind != Tok::Str) fail("expected a quoted formula", t);
    try {
      return parse(t.text, env);
    } catch (const parse_error& e) {
      throw parse_error(std::string("in quoted formula: ") + e.what(), t.pos);
    }
  }

  DerivationRef node() {
    const Tok& open = take();
    if (open.kind != Tok::LPar) fail("expected '('", open);
    const Tok head = take();
    if (head.kind != Tok::Atom) fail("expected a rule name", head);
    const std::string& k = head.text;
    if (is_efq_name(k))
      fail("ex falso is not a rule of this kernel; nothing eliminates bot", head);
    if (is_t_elim_name(k))
      fail("truth ascriptions cannot be eliminated; there is no rule from T(A) to A", head);

    DerivationRef d;
    if (k == "hyp") {
      d = Derivation::hyp(formula());
    } else if (k == "and-i") {
      DerivationRef a = node();
      DerivationRef b = node();
      d = Derivation::and_i(std::move(a), std::move(b));
    } else if (k == "and-e-left") {
      d = Derivation::and_e_left(node());
    } else if (k == "and-e-right") {
      d = Derivation::and_e_right(node());
    } else if (k == "or-i-left") {
      DerivationRef p = node();
      d = Derivation::or_i_left(std::move(p), formula());
    } else if (k == "or-i-right") {
      DerivationRef p = node();
      d = Derivation::or_i_right(std::move(p), formula());
    } else if (k == "or-e") {
      DerivationRef m = node();
      DerivationRef l = node();
      DerivationRef r = node();
      d = Derivation::or_e(std::move(m), std::move(l), std::move(r));
    } else if (k == "imp-i") {
      FormulaRef a = formula();
      d = Derivation::imp_i(std::move(a), node());
    } else if (k == "imp-e") {
      DerivationRef f = node();
      DerivationRef x = node();
      d = Derivation::imp_e(std::move(f), std::move(x));
    } else if (k == "axiom") {
      const Tok name = take();
      if (name.kind != Tok::Atom) fail("expected a schema name", name);
      Schema s;
      try {
        s = schema_from_name(name.text);
      } catch (const schema_error& e) {
        fail(e.what(), name);
      }
      std::vector<FormulaRef> params;
      for (int i = 0; i < schema_arity(s); ++i) params.push_back(formula());
      try {
        d = Derivation::axiom(instantiate(s, params, env));
      } catch (const error& e) {
        fail(e.what(), name);
      }
    } else {
      fail("unknown script form '" + k + "'", head);
    }

    const Tok& close = take();
    if (close.kind != Tok::RPar) fail("expected ')'", close);
    return d;
  }
};

void write(std::ostream& os, const DerivationRef& d, int ind) {
  const std::string pad(static_cast<std::size_t>(ind) * 2, ' ');
  switch (d->rule()) {
    case Derivation::Rule::Hyp:
      os << pad << "(hyp \"" << print(d->formula()) << "\")";
      return;
    case Derivation::Rule::Axiom: {
      const SchemaInstance& inst = *d->instance();
      os << pad << "(axiom " << schema_name(inst.schema);
      for (const FormulaRef& p : inst.params) os << " \"" << print(p) << "\"";
      os << ")";
      return;
    }
    case Derivation::Rule::AndI:
      os << pad << "(and-i\n";
      write(os, d->children()[0], ind + 1);
      os << "\n";
      write(os, d->children()[1], ind + 1);
      os << ")";
      return;
    case Derivation::Rule::AndEL:
      os << pad << "(and-e-left\n";
      write(os, d->children()[0], ind + 1);
      os << ")";
      return;
    case Derivation::Rule::AndER:
      os << pad << "(and-e-right\n";
      write(os, d->children()[0], ind + 1);
      os << ")";
      return;
    case Derivation::Rule::OrIL:
      os << pad << "(or-i-left\n";
      write(os, d->children()[0], ind + 1);
      os << "\n" << pad << "  \"" << print(d->formula()) << "\")";
      return;
    case Derivation::Rule::OrIR:
      os << pad << "(or-i-right\n";
      write(os, d->children()[0], ind + 1);
      os << "\n" << pad << "  \"" << print(d->formula()) << "\")";
      return;
    case Derivation::Rule::OrE:
      os << pad << "(or-e\n";
      write(os, d->children()[0], ind + 1);
      os << "\n";
      write(os, d->children()[1], ind + 1);
      os << "\n";
      write(os, d->children()[2], ind + 1);
      os << ")";
      return;
    case Derivation::Rule::ImpI:
      os << pad << "(imp-i \"" << print(d->formula()) << "\"\n";
      write(os, d->children()[0], ind + 1);
      os << ")";
      return;
    case Derivation::Rule::ImpE:
      os << pad << "(imp-e\n";
      write(os, d->children()[0], ind + 1);
      os << "\n";
      write(os, d->children()[1], ind + 1);
      os << ")";
      return;
  }
}

}  // namespace

DerivationRef parse_script(const std::string& text, const Environment& env) {
  std::vector<Tok> toks = lex(text);
  Parser p{toks, env};
  DerivationRef d = p.node();
  if (p.peek().kind != Tok::End) Parser::fail("trailing input after the derivation", p.peek());
  return d;
}

std::string print_script(const DerivationRef& d) {
  if (!d) throw error("derivation is null");
  std::ostringstream ss;
  write(ss, d, 0);
  ss << "\n";
  return ss.str();
}

}  // namespace taulog
