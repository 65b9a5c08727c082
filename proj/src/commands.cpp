#include "fractal/commands.hpp"

#include <chrono>
#include <ostream>

#include <json.hpp>

#include "fractal/errors.hpp"
#include "fractal/family_file.hpp"
#include "fractal/fixtures.hpp"
#include "fractal/fractal_analysis.hpp"
#include "fractal/report.hpp"

namespace fractal::cli {

namespace {

using nlohmann::json;

struct Loaded {
  CodeFamily c;
  CodeFamily d;
};

void diagnose(std::ostream& err, const std::string& path, const ParseError& e) {
  err << path << ':' << std::max<std::size_t>(e.line(), 1) << ':' << std::max<std::size_t>(e.column(), 1)
      << ": error: " << e.what() << '\n';
}

// Returns the families and the line where the second one starts.
std::pair<std::vector<CodeFamily>, std::size_t> load_file(const std::string& path) {
  const std::string text = read_text_file(path);
  auto families = parse_families(text);
  const auto blocks = parse_family_blocks(text);
  return {std::move(families), blocks.size() > 1 ? blocks[1].line : 1};
}

Loaded load(const AnalyzeOptions& options, std::ostream& err, int& status) {
  status = ok;
  if (options.paths.empty() || options.paths.size() > 2) {
    err << "error: analyze expects one file with two families or two files with one family each\n";
    status = input_error;
    return {CodeFamily({universe(1)}), CodeFamily({universe(1)})};
  }
  std::vector<CodeFamily> families;
  std::string second_path = options.paths.back();
  std::size_t second_line = 1;
  for (const auto& path : options.paths) {
    try {
      auto [parsed, line] = load_file(path);
      if (options.paths.size() == 2 && parsed.size() != 1) {
        throw ParseError("expected exactly one family per file when two files are given", line);
      }
      if (options.paths.size() == 1) {
        if (parsed.size() != 2) throw ParseError("expected two families separated by a line '---'", line);
        second_line = line;
      }
      for (auto& f : parsed) families.push_back(std::move(f));
    } catch (const ParseError& e) {
      diagnose(err, path, e);
      status = input_error;
      return {CodeFamily({universe(1)}), CodeFamily({universe(1)})};
    }
  }
  if (families[0].size() != families[1].size()) {
    diagnose(err, second_path,
             ParseError("family size mismatch: first family has s=" + std::to_string(families[0].size()) +
                            ", second has s=" + std::to_string(families[1].size()),
                        second_line));
    status = input_error;
  }
  return {std::move(families[0]), std::move(families[1])};
}

void print_budget_error(std::ostream& err, const BudgetExceeded& e) {
  err << "error: " << e.what() << "\nrequired budget: " << e.required() << " (pass --budget " << e.required()
      << ")\n";
}

json checks_json(const std::vector<fixtures::Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

void print_checks(std::ostream& out, const fixtures::FixtureOutcome& o) {
  for (const auto& c : o.checks) {
    out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.passed || !c.detail.empty()) out << " -- " << c.detail;
    out << '\n';
  }
  for (const auto& n : o.notes) out << "  note: " << n << '\n';
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  int status = ok;
  Loaded in = load(options, err, status);
  if (status != ok) return status;

  AnalysisOptions analysis;
  analysis.compute_exact = options.exact;
  analysis.enumeration.budget = options.budget;
  AnalysisReport report;
  try {
    report = analyze(in.c, in.d, analysis);
  } catch (const BudgetExceeded& e) {
    print_budget_error(err, e);
    return budget_exceeded;
  }

  if (options.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << render_text(report);
    if (options.table) out << render_lower_bound_table(report);
  }
  if (options.require_acyclic && !(report.c_acyclic && report.d_acyclic)) {
    err << "error: hypothesis violated: " << (report.c_acyclic ? "second" : "first")
        << " family is not acyclic\n";
    return hypothesis_failure;
  }
  return ok;
}

int cmd_example(const ExampleOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<const fixtures::ExampleFixture*> selected;
  if (options.name == "all") {
    for (const auto& f : fixtures::all()) selected.push_back(&f);
  } else if (const auto* f = fixtures::find(options.name)) {
    selected.push_back(f);
  } else {
    err << "error: unknown example '" << options.name << "'; available:";
    for (const auto& f : fixtures::all()) err << ' ' << f.name;
    err << " all\n";
    return input_error;
  }

  AnalysisOptions analysis;
  analysis.enumeration.budget = options.budget;
  bool all_ok = true;
  json results = json::array();
  const auto start = std::chrono::steady_clock::now();
  for (const auto* fixture : selected) {
    const unsigned trials = fixture->randomized ? std::max(1u, options.trials) : 1u;
    if (!options.json) out << "== " << fixture->name << ": " << fixture->title << '\n';
    for (unsigned t = 0; t < trials; ++t) {
      const std::uint64_t seed = options.seed + t;
      fixtures::FixtureOutcome o;
      try {
        o = fixtures::run(*fixture, seed, analysis);
      } catch (const BudgetExceeded& e) {
        print_budget_error(err, e);
        return budget_exceeded;
      }
      all_ok = all_ok && o.ok();
      if (options.json) {
        results.push_back({{"name", fixture->name},
                           {"seed", seed},
                           {"ok", o.ok()},
                           {"report", to_json(o.report)},
                           {"findings", to_json(o.findings)},
                           {"checks", checks_json(o.checks)},
                           {"notes", o.notes}});
        continue;
      }
      if (fixture->randomized) {
        out << "-- seed " << seed << '\n';
        if (t == 0) out << render_text(o.report);
      } else {
        out << render_text(o.report);
      }
      if (options.table) out << render_lower_bound_table(o.report);
      print_checks(out, o);
      out << render_findings(o.findings);
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (options.json) {
    out << json{{"ok", all_ok}, {"seconds", seconds}, {"results", results}}.dump(2) << '\n';
  } else {
    out << (all_ok ? "all checks passed" : "CHECKS FAILED") << " (" << selected.size() << " example"
        << (selected.size() == 1 ? "" : "s") << ", " << seconds << " s)\n";
  }
  return all_ok ? ok : verification_failed;
}

int cmd_distance(const DistanceOptions& options, std::ostream& out, std::ostream& err) {
  LinearCode code = LinearCode::zero(1);
  try {
    code = parse_single_code(read_text_file(options.path));
  } catch (const ParseError& e) {
    diagnose(err, options.path, e);
    return input_error;
  } catch (const Error& e) {
    err << options.path << ": error: " << e.what() << '\n';
    return input_error;
  }
  Distance d = Distance::infinite();
  try {
    d = code.min_distance(options.budget);
  } catch (const BudgetExceeded& e) {
    print_budget_error(err, e);
    return budget_exceeded;
  }
  if (options.json) {
    json j{{"n", code.length()}, {"k", code.dimension()}};
    if (d.is_infinite()) {
      j["d"] = "INFINITE";
    } else {
      j["d"] = d.value();
    }
    out << j.dump() << '\n';
  } else {
    out << code.params_string() << '\n';
  }
  return ok;
}

int cmd_list_examples(std::ostream& out) {
  for (const auto& f : fixtures::all()) {
    out << f.name << "  " << f.title << (f.randomized ? "  (randomized)" : "") << '\n';
  }
  return ok;
}

}  // namespace fractal::cli
