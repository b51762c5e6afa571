#include "taulog/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "taulog/derivation.hpp"
#include "taulog/environment.hpp"
#include "taulog/errors.hpp"
#include "taulog/parse.hpp"
#include "taulog/print.hpp"
#include "taulog/script.hpp"
#include "taulog/semantics.hpp"

namespace taulog {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A couple of household names for scenarios that propositionalize to one
// that is already on disk.
struct Alias {
  const char* from;
  const char* to;
  const char* note;
};

constexpr Alias kAliases[] = {
    {"grelling", "liar",
     "propositionalized: the heterological sentence plays the role of p1, giving the same "
     "override shape as the liar scenario"},
};

void run_scenario(const fs::path& dir, const std::string& shown_name, CorpusReport& report) {
  auto item = [&](const std::string& label, const std::string& kind, bool pass,
                  std::string message) {
    report.items.push_back({shown_name, label, kind, pass, std::move(message)});
  };

  Environment env;
  try {
    std::vector<std::string> warnings;
    env = load_env_file((dir / "env").string(), &warnings);
  } catch (const error& e) {
    item("env", "tau", false, e.what());
    return;
  }
  EvalEngine engine(env);

  json expect;
  try {
    expect = json::parse(slurp(dir / "expect.json"));
  } catch (const std::exception& e) {
    item("expect.json", "tau", false, e.what());
    return;
  }

  for (const json& th : expect.value("theorems", json::array())) {
    const std::string label = th.at("label").get<std::string>();
    try {
      FormulaRef goal = parse(th.at("goal").get<std::string>(), env);
      DerivationRef d = parse_script(slurp(dir / th.at("script").get<std::string>()), env);
      CheckResult r = check(d, env);
      if (!r.open.empty()) {
        item(label, "theorem", false, "open hypothesis '" + print(r.open.front()) + "' remains");
        continue;
      }
      if (!equal(r.conclusion, goal)) {
        item(label, "theorem", false,
             "derivation concludes '" + print(r.conclusion) + "', expected '" + print(goal) + "'");
        continue;
      }
      item(label, "theorem", true, "derivation closes '" + print(goal) + "'");

      TauVerdict v = engine.evaluate(goal);
      bool ok = v.value == 1 && v.sound;
      item(label, "theorem-tau", ok,
           ok ? std::string("value 1 with status ") + status_name(v.status)
              : "value " + std::to_string(v.value) + ", status " + status_name(v.status));
    } catch (const error& e) {
      item(label, "theorem", false, e.what());
    }
  }

  for (const json& tv : expect.value("tau", json::array())) {
    const std::string text = tv.at("formula").get<std::string>();
    try {
      FormulaRef f = parse(text, env);
      const int want_value = tv.at("value").get<int>();
      const std::string want_status = tv.at("status").get<std::string>();
      const int want_stage = tv.at("stage").get<int>();

      TauVerdict got = engine.evaluate(f);
      TauVerdict ref = reference_tau(f, env);
      auto describe = [](const TauVerdict& v) {
        return std::string(status_name(v.status)) + " value " + std::to_string(v.value) +
               " at stage " + std::to_string(v.stage);
      };
      if (got.value != ref.value || got.status != ref.status || got.stage != ref.stage) {
        item(text, "tau", false,
             "engine says " + describe(got) + " but the oracle says " + describe(ref));
        continue;
      }
      bool ok = got.value == want_value && status_name(got.status) == want_status &&
                got.stage == want_stage;
      item(text, "tau", ok,
           ok ? describe(got)
              : "expected " + want_status + " value " + std::to_string(want_value) + " at stage " +
                    std::to_string(want_stage) + ", got " + describe(got));
    } catch (const error& e) {
      item(text, "tau", false, e.what());
    }
  }
}

}  // namespace

CorpusReport run_corpus(const std::string& root, const std::string& only_scenario) {
  CorpusReport report;
  fs::path base(root);
  if (!fs::is_directory(base)) throw error("corpus root " + root + " is not a directory");

  std::string wanted = only_scenario;
  if (!wanted.empty()) {
    for (const Alias& a : kAliases) {
      if (wanted == a.from) {
        report.items.push_back({wanted, a.to, "alias", true, a.note});
        run_scenario(base / a.to, wanted, report);
        return report;
      }
    }
    if (!fs::is_directory(base / wanted)) throw error("no scenario named " + wanted);
    run_scenario(base / wanted, wanted, report);
    return report;
  }

  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(base))
    if (entry.is_directory()) names.push_back(entry.path().filename().string());
  std::sort(names.begin(), names.end());
  for (const std::string& name : names) run_scenario(base / name, name, report);
  return report;
}

}  // namespace taulog
