#include "taulog/parse.hpp"

#include <cctype>
#include <string>

#include "taulog/environment.hpp"
#include "taulog/errors.hpp"

namespace taulog {
namespace {

struct Lexer {
  enum class Tok { Var, Bot, Top, T, Not, And, Or, Arrow, Iff, LParen, RParen, End };

  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  Tok tok = Tok::End;
  Index var = 0;
  std::size_t tok_pos = 0;  // 1-based

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_pos = pos_ + 1;
    if (pos_ >= text_.size()) { tok = Tok::End; return; }
    char c = text_[pos_];
    switch (c) {
      case '~': ++pos_; tok = Tok::Not; return;
      case '&': ++pos_; tok = Tok::And; return;
      case '|': ++pos_; tok = Tok::Or; return;
      case '(': ++pos_; tok = Tok::LParen; return;
      case ')': ++pos_; tok = Tok::RParen; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') { pos_ += 2; tok = Tok::Arrow; return; }
        throw parse_error("expected '->'", tok_pos);
      case '<':
        if (pos_ + 3 <= text_.size() && text_.substr(pos_, 3) == "<->") { pos_ += 3; tok = Tok::Iff; return; }
        throw parse_error("expected '<->'", tok_pos);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "bot") { tok = Tok::Bot; return; }
      if (word == "top") { tok = Tok::Top; return; }
      if (word == "T") { tok = Tok::T; return; }
      if (word == "p") {
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) throw parse_error("expected digits after 'p'", tok_pos);
        auto idx = index_from_string(text_.substr(dstart, pos_ - dstart));
        if (!idx) throw parse_error("variable index out of range", tok_pos);
        if (*idx == 0) throw parse_error("variable indices start at 1", tok_pos);
        tok = Tok::Var;
        var = *idx;
        return;
      }
      throw parse_error("unknown name '" + std::string(word) + "'", tok_pos);
    }
    throw parse_error(std::string("unexpected character '") + c + "'", tok_pos);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Parser {
  Parser(std::string_view text, const Environment* env) : lex(text), env(env) {}

  Lexer lex;
  const Environment* env;

  FormulaRef run() {
    FormulaRef f = parse_iff();
    if (lex.tok != Lexer::Tok::End) throw parse_error("trailing input", lex.tok_pos);
    return f;
  }

  FormulaRef parse_iff() {
    FormulaRef a = parse_imp();
    if (lex.tok != Lexer::Tok::Iff) return a;
    lex.advance();
    FormulaRef b = parse_imp();
    if (lex.tok == Lexer::Tok::Iff)
      throw parse_error("'<->' is non-associative; add parentheses", lex.tok_pos);
    return Formula::iff(std::move(a), std::move(b));
  }

  FormulaRef parse_imp() {
    FormulaRef a = parse_or();
    if (lex.tok != Lexer::Tok::Arrow) return a;
    lex.advance();
    return Formula::impl(std::move(a), parse_imp());
  }

  FormulaRef parse_or() {
    FormulaRef a = parse_and();
    while (lex.tok == Lexer::Tok::Or) {
      lex.advance();
      a = Formula::disj(std::move(a), parse_and());
    }
    return a;
  }

  FormulaRef parse_and() {
    FormulaRef a = parse_unary();
    while (lex.tok == Lexer::Tok::And) {
      lex.advance();
      a = Formula::conj(std::move(a), parse_unary());
    }
    return a;
  }

  FormulaRef parse_unary() {
    if (lex.tok == Lexer::Tok::Not) {
      lex.advance();
      return Formula::neg(parse_unary());
    }
    return parse_atom();
  }

  FormulaRef parse_atom() {
    std::size_t pos = lex.tok_pos;
    switch (lex.tok) {
      case Lexer::Tok::Var: {
        Index i = lex.var;
        lex.advance();
        return Formula::var(i);
      }
      case Lexer::Tok::Bot: lex.advance(); return Formula::bot();
      case Lexer::Tok::Top: lex.advance(); return Formula::top();
      case Lexer::Tok::LParen: {
        lex.advance();
        FormulaRef f = parse_iff();
        expect_rparen();
        return f;
      }
      case Lexer::Tok::T: {
        lex.advance();
        if (lex.tok != Lexer::Tok::LParen) throw parse_error("expected '(' after T", lex.tok_pos);
        lex.advance();
        FormulaRef arg = parse_iff();
        expect_rparen();
        if (!env) throw parse_error("T(...) requires an environment", pos);
        if (contains_top(arg)) throw parse_error("T(...) takes a top-free formula", pos);
        return Formula::var(env->index_of(arg));
      }
      default:
        throw parse_error("expected a formula", pos);
    }
  }

  void expect_rparen() {
    if (lex.tok != Lexer::Tok::RParen) throw parse_error("expected ')'", lex.tok_pos);
    lex.advance();
  }
};

}  // namespace

FormulaRef parse(std::string_view text) {
  return Parser(text, nullptr).run();
}

FormulaRef parse(std::string_view text, const Environment& env) {
  return Parser(text, &env).run();
}

}  // namespace taulog
