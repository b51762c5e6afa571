// Command line front end. Exit codes: 0 success, 1 semantic failure
// (invalid derivation, no axiom match, no proof found, corpus failures),
// 2 usage or input errors, 3 undetermined at the stage cap.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "taulog/coding.hpp"
#include "taulog/corpus.hpp"
#include "taulog/derivation.hpp"
#include "taulog/environment.hpp"
#include "taulog/errors.hpp"
#include "taulog/parse.hpp"
#include "taulog/print.hpp"
#include "taulog/reduce.hpp"
#include "taulog/schema.hpp"
#include "taulog/script.hpp"
#include "taulog/search.hpp"
#include "taulog/semantics.hpp"

namespace {

using nlohmann::json;
using namespace taulog;

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kUsage = 2;
constexpr int kUndetermined = 3;

Environment load_environment(const std::string& path, bool warn) {
  if (path.empty()) return Environment{};
  std::vector<std::string> warnings;
  Environment env = load_env_file(path, &warnings);
  if (warn)
    for (const std::string& w : warnings) std::cerr << "note: " << w << "\n";
  return env;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json verdict_json(const TauVerdict& v, const std::string& formula_text, bool with_trace) {
  json out;
  out["formula"] = formula_text;
  out["index"] = v.query_index ? json(index_to_string(*v.query_index)) : json(nullptr);
  out["verdict"] = v.value;
  out["status"] = status_name(v.status);
  out["stage"] = v.stage;
  out["sound"] = v.sound;
  out["closure_complete"] = v.closure_complete;
  json closure = json::array();
  for (Index i : v.closure) closure.push_back(index_to_string(i));
  out["closure"] = closure;
  json trace = json::array();
  if (with_trace) {
    for (const StageEntry& entry : v.trace.stages) {
      json rows = json::array();
      for (const TraceRow& r : entry.rows) {
        json row;
        row["index"] = r.has_index ? json(index_to_string(r.index)) : json(nullptr);
        row["formula"] = print(r.formula);
        row["decided"] = r.decided_value < 0 ? json(nullptr) : json(r.decided_value);
        row["new"] = r.newly_decided;
        rows.push_back(std::move(row));
      }
      trace.push_back(json{{"stage", entry.stage}, {"rows", std::move(rows)}});
    }
  }
  out["trace"] = std::move(trace);
  out["trace_elided"] = v.trace.elided;
  return out;
}

void print_trace_text(const TauVerdict& v) {
  for (const StageEntry& entry : v.trace.stages) {
    for (const TraceRow& r : entry.rows) {
      std::cout << entry.stage << "  " << (r.has_index ? index_to_string(r.index) : "q") << "  "
                << print(r.formula);
      if (r.newly_decided) std::cout << "  decided " << r.decided_value;
      std::cout << "\n";
    }
  }
  if (v.trace.elided)
    std::cout << "(middle stages elided; " << v.trace.total_stages << " stages total)\n";
}

int run_reduce(const std::string& text, const std::string& env_path, bool trace,
               const std::string& format) {
  Environment env = load_environment(env_path, format == "text");
  FormulaRef f = parse(text, env);
  FormulaRef r = reduce(f);
  if (format == "json") {
    json out;
    out["input"] = print(f);
    out["output"] = print(r);
    out["reduced"] = is_reduced(r);
    json steps = json::array();
    if (trace) {
      std::vector<ReduceStep> trail;
      reduce_traced(f, trail);
      for (const ReduceStep& s : trail)
        steps.push_back(json{{"rule", s.rule},
                             {"path", s.path},
                             {"before", print(s.before)},
                             {"after", print(s.after)}});
    }
    out["steps"] = std::move(steps);
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  if (trace) {
    std::vector<ReduceStep> trail;
    reduce_traced(f, trail);
    for (const ReduceStep& s : trail)
      std::cout << "rule (" << s.rule << ") at " << s.path << ": " << print(s.before) << "  ~>  "
                << print(s.after) << "\n";
  }
  std::cout << print(r) << "\n";
  return kOk;
}

int run_tau(const std::string& text, const std::string& env_path, int cap, bool trace,
            const std::string& format) {
  Environment env = load_environment(env_path, format == "text");
  EvalConfig cfg;
  cfg.stage_cap = cap;
  EvalEngine engine(std::move(env), cfg);
  FormulaRef f = parse(text, engine.env());
  TauVerdict v = engine.tau(f);
  if (format == "json") {
    std::cout << verdict_json(v, print(f), trace).dump(2) << "\n";
  } else {
    if (trace) print_trace_text(v);
    std::cout << status_name(v.status) << "  value " << v.value << "  stage " << v.stage << "\n";
    if (!v.closure_complete) std::cout << "(dependency closure exceeded the bound)\n";
  }
  return v.status == TauStatus::CapUndetermined ? kUndetermined : kOk;
}

int run_closure(const std::string& text, const std::string& env_path, std::size_t bound,
                const std::string& format) {
  Environment env = load_environment(env_path, format == "text");
  Index i = 0;
  if (auto direct = index_from_string(text)) {
    i = *direct;
    if (i == 0) throw error("indices start at 1");
  } else {
    i = env.index_of(parse(text, env));
  }
  EvalEngine engine(env);
  auto [closure, complete] = engine.dependency_closure(i, bound);
  if (format == "json") {
    json out;
    out["index"] = index_to_string(i);
    json c = json::array();
    for (Index j : closure) c.push_back(index_to_string(j));
    out["closure"] = std::move(c);
    out["complete"] = complete;
    std::cout << out.dump(2) << "\n";
  } else {
    for (Index j : closure) std::cout << index_to_string(j) << "\n";
    if (!complete) std::cout << "(incomplete: bound reached)\n";
  }
  return kOk;
}

int run_check(const std::string& path, const std::string& env_path, const std::string& format) {
  Environment env = load_environment(env_path, format == "text");
  DerivationRef d = parse_script(slurp_file(path), env);
  try {
    CheckResult r = check(d, env);
    if (format == "json") {
      json out;
      out["valid"] = true;
      out["conclusion"] = print(r.conclusion);
      json open = json::array();
      for (const FormulaRef& h : r.open) open.push_back(print(h));
      out["open"] = std::move(open);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "conclusion: " << print(r.conclusion) << "\n";
      if (r.open.empty()) {
        std::cout << "closed\n";
      } else {
        for (const FormulaRef& h : r.open) std::cout << "open: " << print(h) << "\n";
      }
    }
    return kOk;
  } catch (const check_error& e) {
    if (format == "json") {
      std::cout << json{{"valid", false}, {"error", e.what()}}.dump(2) << "\n";
    } else {
      std::cerr << "invalid: " << e.what() << "\n";
    }
    return kSemanticFailure;
  }
}

int run_axiom(const std::string& text, const std::string& env_path, const std::string& format) {
  Environment env = load_environment(env_path, format == "text");
  FormulaRef f = parse(text, env);
  std::vector<SchemaInstance> matches = recognize_axiom(f, env);
  if (format == "json") {
    json out = json::array();
    for (const SchemaInstance& m : matches) {
      json params = json::array();
      for (const FormulaRef& p : m.params) params.push_back(print(p));
      out.push_back(json{{"schema", schema_name(m.schema)}, {"params", std::move(params)}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const SchemaInstance& m : matches) {
      std::cout << schema_name(m.schema);
      for (const FormulaRef& p : m.params) std::cout << "  \"" << print(p) << "\"";
      std::cout << "\n";
    }
    if (matches.empty()) std::cout << "not an axiom instance\n";
  }
  return matches.empty() ? kSemanticFailure : kOk;
}

int run_search(const std::string& text, const std::string& env_path, int depth,
               std::size_t pool, const std::string& format) {
  Environment env = load_environment(env_path, format == "text");
  FormulaRef goal = parse(text, env);
  SearchConfig cfg;
  cfg.max_depth = depth;
  cfg.pool_limit = pool;
  SearchResult r = search_proof(goal, env, cfg);
  if (format == "json") {
    json out;
    out["goal"] = print(goal);
    out["found"] = static_cast<bool>(r.derivation);
    out["expansions"] = r.expansions;
    out["pool"] = r.pool_size;
    if (r.derivation) out["script"] = print_script(r.derivation);
    std::cout << out.dump(2) << "\n";
  } else if (r.derivation) {
    std::cout << print_script(r.derivation);
  } else {
    std::cout << "no derivation found within depth " << depth << " (" << r.expansions
              << " states expanded, pool " << r.pool_size << ")\n";
  }
  return r.derivation ? kOk : kSemanticFailure;
}

int run_corpus_cmd(const std::string& dir, const std::string& scenario,
                   const std::string& format) {
  CorpusReport report = run_corpus(dir, scenario);
  if (format == "json") {
    json out = json::array();
    for (const CorpusItem& it : report.items)
      out.push_back(json{{"scenario", it.scenario},
                         {"label", it.label},
                         {"kind", it.kind},
                         {"pass", it.pass},
                         {"message", it.message}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t passed = 0;
    for (const CorpusItem& it : report.items) {
      std::cout << (it.pass ? "[PASS] " : "[FAIL] ") << it.scenario << "/" << it.label << " ("
                << it.kind << "): " << it.message << "\n";
      if (it.pass) ++passed;
    }
    std::cout << passed << "/" << report.items.size() << " corpus checks passed\n";
  }
  return report.all_pass() ? kOk : kSemanticFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "taulog: a workbench for sentences that talk about their own truth.\n"
      "Formulas: p1 p2 ... | bot | top | ~A | A & B | A | B | A -> B | A <-> B | T(A).\n"
      "T(A) names the truth variable of A under the active environment."};
  app.require_subcommand(1);
  std::string format = "text";

  std::string r_text, r_env;
  bool r_trace = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Normalize a formula by the constant rules");
  reduce_cmd->add_option("formula", r_text, "formula to reduce")->required();
  reduce_cmd->add_option("--env", r_env, "environment file");
  reduce_cmd->add_flag("--trace", r_trace, "show each rewrite");
  reduce_cmd->add_option("--format", format, "text or json");

  std::string t_text, t_env;
  int t_cap = 1000;
  bool t_trace = false;
  auto* tau_cmd = app.add_subcommand("tau", "Stagewise valuation of a formula");
  tau_cmd->add_option("formula", t_text, "formula to evaluate")->required();
  tau_cmd->add_option("--env", t_env, "environment file");
  tau_cmd->add_option("--cap", t_cap, "stage cap")->check(CLI::PositiveNumber);
  tau_cmd->add_flag("--trace", t_trace, "show the stage table");
  tau_cmd->add_option("--format", format, "text or json");

  std::string c_text, c_env;
  std::size_t c_bound = 100000;
  auto* closure_cmd = app.add_subcommand("closure", "Dependency closure of a sentence index");
  closure_cmd->add_option("index", c_text, "index or formula")->required();
  closure_cmd->add_option("--env", c_env, "environment file");
  closure_cmd->add_option("--bound", c_bound, "closure size bound")->check(CLI::PositiveNumber);
  closure_cmd->add_option("--format", format, "text or json");

  std::string k_path, k_env;
  auto* check_cmd = app.add_subcommand("check", "Check a proof script");
  check_cmd->add_option("script", k_path, "script file")->required();
  check_cmd->add_option("--env", k_env, "environment file");
  check_cmd->add_option("--format", format, "text or json");

  std::string a_text, a_env;
  auto* axiom_cmd = app.add_subcommand("axiom", "Recognize a formula as an axiom instance");
  axiom_cmd->add_option("formula", a_text, "formula to inspect")->required();
  axiom_cmd->add_option("--env", a_env, "environment file");
  axiom_cmd->add_option("--format", format, "text or json");

  std::string s_text, s_env;
  int s_depth = 6;
  std::size_t s_pool = 4096;
  auto* search_cmd = app.add_subcommand("search", "Search for a closed derivation");
  search_cmd->add_option("goal", s_text, "goal formula")->required();
  search_cmd->add_option("--env", s_env, "environment file");
  search_cmd->add_option("--depth", s_depth, "search depth")->check(CLI::PositiveNumber);
  search_cmd->add_option("--pool", s_pool, "axiom pool limit")->check(CLI::PositiveNumber);
  search_cmd->add_option("--format", format, "text or json");

  std::string o_dir = "corpus", o_scenario;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run the stored scenario corpus");
  corpus_cmd->add_option("--dir", o_dir, "corpus root directory");
  corpus_cmd->add_option("--scenario", o_scenario, "run a single scenario");
  corpus_cmd->add_option("--format", format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*reduce_cmd) return run_reduce(r_text, r_env, r_trace, format);
    if (*tau_cmd) return run_tau(t_text, t_env, t_cap, t_trace, format);
    if (*closure_cmd) return run_closure(c_text, c_env, c_bound, format);
    if (*check_cmd) return run_check(k_path, k_env, format);
    if (*axiom_cmd) return run_axiom(a_text, a_env, format);
    if (*search_cmd) return run_search(s_text, s_env, s_depth, s_pool, format);
    if (*corpus_cmd) return run_corpus_cmd(o_dir, o_scenario, format);
  } catch (const check_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemanticFailure;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
