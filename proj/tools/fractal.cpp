#include <iostream>

#include <CLI11.hpp>

#include "fractal/commands.hpp"

int main(int argc, char** argv) {
  using namespace fractal::cli;

  CLI::App app{"fractal: Kronecker-sum codes from two code families"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "analyze a pair of code families");
  a->add_option("paths", analyze.paths, "family file (two families split by ---), or two files")->required();
  a->add_flag("--exact,!--no-exact", analyze.exact, "enumerate the constructed code's distance (default on)");
  a->add_option("--budget", analyze.budget, "largest codeword count to enumerate");
  a->add_flag("--json", analyze.json, "print the report as JSON");
  a->add_flag("--table", analyze.table, "print the lower-bound subset table");
  a->add_flag("--require-acyclic", analyze.require_acyclic, "exit 2 unless both families are acyclic");

  ExampleOptions example;
  auto* e = app.add_subcommand("example", "run a built-in example and verify it");
  e->add_option("name", example.name, "example name, or 'all'")->required();
  e->add_option("--seed", example.seed, "first seed for randomized examples");
  e->add_option("--trials", example.trials, "seeds per randomized example");
  e->add_option("--budget", example.budget, "largest codeword count to enumerate");
  e->add_flag("--json", example.json, "print results as JSON");
  e->add_flag("--table", example.table, "print the lower-bound subset table");

  DistanceOptions distance;
  auto* d = app.add_subcommand("distance", "exact (n,k,d) of one generator block");
  d->add_option("path", distance.path, "generator file")->required();
  d->add_option("--budget", distance.budget, "largest codeword count to enumerate");
  d->add_flag("--json", distance.json, "print as JSON");

  auto* l = app.add_subcommand("list-examples", "list built-in examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : input_error;
  }

  if (*a) return cmd_analyze(analyze, std::cout, std::cerr);
  if (*e) return cmd_example(example, std::cout, std::cerr);
  if (*d) return cmd_distance(distance, std::cout, std::cerr);
  if (*l) return cmd_list_examples(std::cout);
  return input_error;
}
