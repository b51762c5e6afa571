#include "taulog/environment.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "taulog/coding.hpp"
#include "taulog/errors.hpp"
#include "taulog/parse.hpp"
#include "taulog/print.hpp"

namespace taulog {

Environment::Environment(std::vector<std::pair<Index, FormulaRef>> overrides) {
  for (auto& [i, f] : overrides) {
    if (i == 0) throw env_error("override indices start at 1");
    if (!f) throw env_error("null override formula");
    if (contains_top(f)) throw env_error("override formulas must be top-free");
    if (overrides_.count(i))
      throw env_error("duplicate override index " + index_to_string(i));
    for (auto& [j, g] : overrides_) {
      if (equal(f, g))
        throw env_error("override " + index_to_string(i) + " repeats the formula of override " +
                        index_to_string(j));
    }
    overrides_.emplace(i, std::move(f));
  }
  keys_.reserve(overrides_.size());
  for (auto& [i, f] : overrides_) keys_.push_back(i);
}

std::size_t Environment::keys_at_most(Index i) const {
  return static_cast<std::size_t>(
      std::upper_bound(keys_.begin(), keys_.end(), i) - keys_.begin());
}

Index Environment::canonical_index_of(const FormulaRef& f) const {
  Index b = code_of(f);
  // Least fixed point of c = b + #(keys <= c): the b-th non-key integer.
  Index c = b;
  for (;;) {
    Index next;
    if (__builtin_add_overflow(b, static_cast<Index>(keys_at_most(c)), &next))
      throw overflow_error("canonical index exceeds the 128-bit range");
    if (next == c) return c;
    c = next;
  }
}

Index Environment::index_of(const FormulaRef& f) const {
  if (contains_top(f)) throw error("top-containing formulas have no index");
  for (auto& [i, g] : overrides_) {
    if (equal(f, g)) return i;  // map order gives the smallest key
  }
  return canonical_index_of(f);
}

FormulaRef Environment::definition_of(Index i) const {
  if (i == 0) throw error("indices start at 1");
  auto it = overrides_.find(i);
  if (it != overrides_.end()) return it->second;
  return decode(i - static_cast<Index>(keys_at_most(i)));
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Environment load_env(std::istream& in, std::vector<std::string>* warnings) {
  std::vector<std::pair<Index, FormulaRef>> overrides;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    std::size_t sep = body.find(":=");
    if (sep == std::string::npos)
      throw env_error("line " + std::to_string(lineno) + ": expected '<index> := <formula>'");
    std::string lhs = trim(body.substr(0, sep));
    std::string rhs = trim(body.substr(sep + 2));
    auto idx = index_from_string(lhs);
    if (!idx || *idx == 0)
      throw env_error("line " + std::to_string(lineno) + ": bad index '" + lhs + "'");
    FormulaRef f;
    try {
      // No environment is in scope while one is being built, so T(...)
      // sugar is unavailable here; definitions are written plainly.
      f = parse(rhs);
    } catch (const parse_error& e) {
      throw env_error("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (contains_top(f))
      throw env_error("line " + std::to_string(lineno) + ": override formulas must be top-free");
    overrides.emplace_back(*idx, std::move(f));
  }
  Environment env(std::move(overrides));
  if (warnings) {
    for (auto& [i, f] : env.overrides()) {
      try {
        Index dup = env.canonical_index_of(f);
        warnings->push_back("override " + index_to_string(i) + " := " + print(f) +
                            " also has canonical index " + index_to_string(dup) +
                            " (duplicate definitions are tolerated)");
      } catch (const overflow_error&) {
        warnings->push_back("override " + index_to_string(i) +
                            ": canonical duplicate index exceeds the representable range");
      }
    }
  }
  return env;
}

Environment load_env_text(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return load_env(in, warnings);
}

Environment load_env_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw env_error("cannot open environment file: " + path);
  return load_env(in, warnings);
}

}  // namespace taulog
