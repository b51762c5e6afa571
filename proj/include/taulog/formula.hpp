#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace taulog {

// Variable / enumeration indices. Codes produced by the pairing-based
// enumeration grow double-exponentially with nesting depth, so 128 bits
// buys real headroom. Arithmetic on codes is overflow-checked, never
// silently wrapped.
using Index = unsigned __int128;

std::string index_to_string(Index v);
// Decimal digits only; nullopt on empty, non-digit, zero-leading junk or
// values past 2^128 - 1.
std::optional<Index> index_from_string(std::string_view s);

class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

// Immutable formula tree over variables p1, p2, ... and the constant bot.
// top exists only for the reduction engine's extended language and is not
// part of the proof language. ~A and A <-> B are notation: the parser
// lowers them to A -> bot and (A -> B) & (B -> A); neither has a node kind.
class Formula {
 public:
  enum class Kind : unsigned char { Var, Bot, Top, And, Or, Imp };

  static FormulaRef var(Index index);  // index >= 1
  static FormulaRef bot();
  static FormulaRef top();
  static FormulaRef conj(FormulaRef l, FormulaRef r);
  static FormulaRef disj(FormulaRef l, FormulaRef r);
  static FormulaRef impl(FormulaRef l, FormulaRef r);
  static FormulaRef neg(FormulaRef a);
  static FormulaRef iff(FormulaRef a, FormulaRef b);

  Kind kind() const { return kind_; }
  bool is_binary() const {
    return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::Imp;
  }

  Index var_index() const;       // Var nodes only
  const FormulaRef& left() const;   // binary nodes only
  const FormulaRef& right() const;

 private:
  Formula(Kind kind, Index var, FormulaRef l, FormulaRef r)
      : kind_(kind), var_(var), left_(std::move(l)), right_(std::move(r)) {}

  Kind kind_;
  Index var_;
  FormulaRef left_, right_;
};

bool equal(const FormulaRef& a, const FormulaRef& b);
bool contains_top(const FormulaRef& f);
bool contains_constant(const FormulaRef& f);  // bot or top anywhere

std::size_t node_count(const FormulaRef& f);
// Height with atoms at depth 1: depth(p1 & p2) == 2.
int depth(const FormulaRef& f);

std::set<Index> variables_of(const FormulaRef& f);

// Replaces every decided variable by bot/top. Shares unchanged subtrees.
FormulaRef substitute(const FormulaRef& f, const std::map<Index, bool>& decided);

std::size_t hash_of(const FormulaRef& f);

}  // namespace taulog
