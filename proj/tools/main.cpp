// Command-line front end for the syllogism decision engine.
//
// Exit codes: 0 valid, 1 invalid, 2 usage or parse failure, 3 internal
// disagreement between the engine and the semantic oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "slcd/slcd.hpp"

namespace {

using nlohmann::json;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;

slcd::Condition condition_from_flag(const std::string& assume) {
  if (assume == "s") return slcd::Condition::s_exists;
  if (assume == "m") return slcd::Condition::m_exists;
  if (assume == "p") return slcd::Condition::p_exists;
  return slcd::Condition::unconditional;
}

std::string describe_condition(slcd::Condition condition) {
  switch (condition) {
    case slcd::Condition::unconditional: return "no existence assumption";
    case slcd::Condition::s_exists: return "assuming S is non-empty";
    case slcd::Condition::m_exists: return "assuming M is non-empty";
    case slcd::Condition::p_exists: return "assuming P is non-empty";
  }
  return {};
}

std::string entailed_letters(const slcd::Verdict& verdict) {
  std::string out;
  for (slcd::Quantifier q : slcd::kQuantifiers) {
    if (!verdict.entails(q)) continue;
    if (!out.empty()) out += ", ";
    out += slcd::quantifier_letter(q);
  }
  return out.empty() ? "none" : out;
}

struct CheckOptions {
  std::vector<std::string> inputs;
  std::string assume = "none";
  std::string format = "text";
  bool no_oracle = false;
};

slcd::Mood resolve_mood(const std::vector<std::string>& inputs) {
  if (inputs.size() == 1) return slcd::parse_mood(inputs[0]);
  if (inputs.size() == 3)
    return slcd::mood_from_statements(slcd::parse_statement(inputs[0]),
                                      slcd::parse_statement(inputs[1]),
                                      slcd::parse_statement(inputs[2]));
  throw std::invalid_argument(
      "check expects one mood (\"AAA-1\") or three statements "
      "(major premise, minor premise, conclusion)");
}

int run_check(const CheckOptions& opts) {
  const slcd::Mood mood = resolve_mood(opts.inputs);
  const slcd::Condition condition = condition_from_flag(opts.assume);
  const slcd::EngineConfig config = slcd::EngineConfig::standard();
  const slcd::Verdict verdict = slcd::decide(mood, condition, config);
  const slcd::RuleReport rules = slcd::classical_rules_check(mood);
  std::optional<bool> oracle;
  if (!opts.no_oracle) oracle = slcd::semantically_valid(mood, condition);

  if (opts.format == "json") {
    json j{
        {"mood", mood.to_string()},
        {"condition", slcd::to_string(condition)},
        {"valid", verdict.valid},
        {"conclusion_set", verdict.conclusion_set.values()},
        {"oracle_valid", oracle.has_value() ? json(*oracle) : json(nullptr)},
        {"rule_violations", rules.labels()},
    };
    std::cout << j.dump(2) << "\n";
  } else {
    const slcd::Proposition major =
        premise_proposition(mood, slcd::PremiseRole::major);
    const slcd::Proposition minor =
        premise_proposition(mood, slcd::PremiseRole::minor);
    const slcd::Proposition conclusion{mood.conclusion, "S", "P"};
    std::cout << "mood:        " << mood.to_string() << "\n"
              << "condition:   " << describe_condition(condition) << "\n"
              << "premises:    " << slcd::to_text(major) << "; "
              << slcd::to_text(minor) << "\n"
              << "conclusion:  " << slcd::to_text(conclusion) << "\n"
              << "diagrams:    " << verdict.conclusion_set.to_string() << "\n"
              << "entails:     " << entailed_letters(verdict) << "\n"
              << "engine:      " << (verdict.valid ? "valid" : "invalid")
              << "\n";
    if (oracle.has_value())
      std::cout << "oracle:      " << (*oracle ? "valid" : "invalid") << "\n";
    if (rules.clean()) {
      std::cout << "rules:       no violations\n";
    } else {
      std::cout << "rules:      ";
      for (slcd::Rule r : rules.violations)
        std::cout << " " << slcd::rule_label(r) << " ("
                  << slcd::rule_description(r) << ")";
      std::cout << "\n";
    }
  }

  if (oracle.has_value() && *oracle != verdict.valid) {
    std::cerr << "error: engine and oracle disagree on " << mood.to_string()
              << " (" << slcd::to_string(condition) << "): engine says "
              << (verdict.valid ? "valid" : "invalid") << ", oracle says "
              << (*oracle ? "valid" : "invalid") << "\n";
    return kExitDisagreement;
  }
  return verdict.valid ? kExitValid : kExitInvalid;
}

struct EnumerateOptions {
  std::string assume = "none";
  std::string format = "table";
  bool only_conditional = false;
};

int run_enumerate(const EnumerateOptions& opts) {
  const slcd::Condition condition = condition_from_flag(opts.assume);
  const slcd::EngineConfig config = slcd::EngineConfig::standard();
  const std::vector<slcd::EnumeratedMood> rows =
      slcd::enumerate_valid(condition, config, opts.only_conditional);

  if (opts.format == "json") {
    json out = json::array();
    for (const slcd::EnumeratedMood& row : rows)
      out.push_back({{"mood", row.mood.to_string()},
                     {"condition", slcd::to_string(condition)},
                     {"conclusion_set", row.verdict.conclusion_set.values()}});
    std::cout << out.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "mood,figure,condition,conclusion_set\n";
    for (const slcd::EnumeratedMood& row : rows) {
      std::string members;
      for (int v : row.verdict.conclusion_set.values()) {
        if (!members.empty()) members += ' ';
        members += std::to_string(v);
      }
      std::cout << row.mood.to_string() << ','
                << figure_number(row.mood.figure) << ','
                << slcd::to_string(condition) << ',' << members << "\n";
    }
  } else {
    std::cout << rows.size() << " valid mood(s), "
              << describe_condition(condition)
              << (opts.only_conditional
                      ? ", excluding unconditionally valid moods"
                      : "")
              << ":\n";
    for (const slcd::EnumeratedMood& row : rows)
      std::cout << "  " << row.mood.to_string() << "  "
                << row.verdict.conclusion_set.to_string() << "\n";
  }
  return kExitValid;
}

int run_star(int major_value, int minor_value) {
  const slcd::StarResult result = slcd::star(major_value, minor_value);
  std::cout << slcd::to_string(result) << "\n";
  return kExitValid;
}

struct TableOptions {
  bool verify = false;
  std::string fixture_path;
};

int run_table(const TableOptions& opts) {
  if (!opts.verify) {
    // Print the derived operation in the fixture format.
    std::cout << "# derived composition table (undefined pairs omitted)\n"
              << "version 1\n";
    for (int a = 0; a < 16; ++a)
      for (int b = 0; b < 16; ++b) {
        const slcd::StarResult r = slcd::star(a, b);
        if (!r.has_value()) continue;
        std::string members;
        for (int v : r->values()) {
          if (!members.empty()) members += ',';
          members += std::to_string(v);
        }
        std::cout << a << ' ' << b << " -> " << members << "\n";
      }
    return kExitValid;
  }

  const slcd::StarFixture fixture =
      opts.fixture_path.empty()
          ? slcd::embedded_star_fixture()
          : slcd::load_star_fixture(opts.fixture_path);
  const std::vector<slcd::StarDiff> diffs = slcd::verify_star_table(fixture);
  if (diffs.empty()) {
    std::cout << "derived operation matches the fixture: "
              << fixture.defined_count() << " defined cells, "
              << 256 - fixture.defined_count() << " undefined\n";
    return kExitValid;
  }
  for (const slcd::StarDiff& d : diffs)
    std::cout << "cell (" << d.major_value << ", " << d.minor_value
              << "): fixture " << slcd::to_string(d.expected) << ", derived "
              << slcd::to_string(d.derived) << "\n";
  std::cout << diffs.size() << " cell(s) differ\n";
  return kExitInvalid;
}

int run_oracle_diff() {
  const slcd::EngineConfig config = slcd::EngineConfig::standard();
  int checked = 0;
  int disagreements = 0;
  for (const slcd::Mood& mood : slcd::all_moods())
    for (slcd::Condition condition : slcd::kConditions) {
      ++checked;
      const bool engine_says = slcd::decide(mood, condition, config).valid;
      const bool oracle_says = slcd::semantically_valid(mood, condition);
      if (engine_says == oracle_says) continue;
      ++disagreements;
      std::cout << mood.to_string() << " (" << slcd::to_string(condition)
                << "): engine " << (engine_says ? "valid" : "invalid")
                << ", oracle " << (oracle_says ? "valid" : "invalid") << "\n";
    }
  if (disagreements == 0) {
    std::cout << "engine and oracle agree on all " << checked
              << " mood/condition pairs\n";
    return kExitValid;
  }
  std::cout << disagreements << " disagreement(s)\n";
  return kExitDisagreement;
}

int run_render(const std::string& mood_text) {
  const slcd::Mood mood = slcd::parse_mood(mood_text);
  struct Panel {
    const char* label;
    slcd::Proposition prop;
    slcd::Orientation orient;
  };
  const Panel panels[] = {
      {"major premise",
       premise_proposition(mood, slcd::PremiseRole::major),
       {"M", "P"}},
      {"minor premise",
       premise_proposition(mood, slcd::PremiseRole::minor),
       {"M", "S"}},
      {"conclusion", {mood.conclusion, "S", "P"}, {"S", "P"}},
  };
  std::cout << mood.to_string() << "\n\n";
  for (const Panel& panel : panels) {
    std::cout << panel.label << ": " << slcd::to_text(panel.prop) << "\n"
              << slcd::render_bilateral(
                     slcd::DiagramView::of_constraint(panel.prop,
                                                      panel.orient))
              << "\n";
  }
  return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decide categorical syllogisms by diagram propagation, cross-checked "
      "against a brute-force semantic oracle."};
  app.require_subcommand(1);

  CheckOptions check_opts;
  CLI::App* check = app.add_subcommand(
      "check", "Decide one syllogism given as a mood or as three statements");
  check
      ->add_option("input", check_opts.inputs,
                   "\"AAA-1\", or major premise, minor premise, conclusion")
      ->required()
      ->expected(-1);
  check->add_option("--assume", check_opts.assume,
                    "existence assumption: none, s, m or p")
      ->check(CLI::IsMember({"none", "s", "m", "p"}));
  check->add_option("--format", check_opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--no-oracle", check_opts.no_oracle,
                  "skip the semantic cross-check");

  EnumerateOptions enum_opts;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "List every valid mood under an existence assumption");
  enumerate->add_option("--assume", enum_opts.assume,
                        "existence assumption: none, s, m or p")
      ->check(CLI::IsMember({"none", "s", "m", "p"}));
  enumerate->add_flag("--only-conditional", enum_opts.only_conditional,
                      "drop moods that are already valid unconditionally");
  enumerate->add_option("--format", enum_opts.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  int star_major = 0;
  int star_minor = 0;
  CLI::App* star_cmd = app.add_subcommand(
      "star", "Compose two determined premise diagrams (values 0..15)");
  star_cmd->add_option("major", star_major, "major premise diagram value")
      ->required()
      ->check(CLI::Range(0, 15));
  star_cmd->add_option("minor", star_minor, "minor premise diagram value")
      ->required()
      ->check(CLI::Range(0, 15));

  TableOptions table_opts;
  CLI::App* table = app.add_subcommand(
      "table", "Print the composition table, or verify it against a fixture");
  table->add_flag("--verify", table_opts.verify,
                  "diff the derived operation against the fixture");
  table->add_option("--fixture", table_opts.fixture_path,
                    "fixture file (defaults to the embedded copy)");

  CLI::App* oracle_diff = app.add_subcommand(
      "oracle-diff",
      "Compare engine and oracle verdicts over all moods and conditions");

  std::string render_mood;
  CLI::App* render = app.add_subcommand(
      "render", "Draw the premise and conclusion diagrams of a mood");
  render->add_option("mood", render_mood, "mood notation, like \"EIO-2\"")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return run_check(check_opts);
    if (*enumerate) return run_enumerate(enum_opts);
    if (*star_cmd) return run_star(star_major, star_minor);
    if (*table) return run_table(table_opts);
    if (*oracle_diff) return run_oracle_diff();
    if (*render) return run_render(render_mood);
  } catch (const slcd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
