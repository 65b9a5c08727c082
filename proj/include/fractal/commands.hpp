#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fractal/weight_enumeration.hpp"

namespace fractal::cli {

enum ExitCode : int {
  ok = 0,
  input_error = 1,
  hypothesis_failure = 2,
  budget_exceeded = 3,
  /// A fixture check or a verify finding failed.
  verification_failed = 4,
};

struct AnalyzeOptions {
  /// One file holding both families, or two files with one family each.
  std::vector<std::string> paths;
  bool exact = true;
  std::uint64_t budget = default_budget;
  bool json = false;
  bool table = false;
  bool require_acyclic = false;
};

struct ExampleOptions {
  std::string name;
  std::uint64_t seed = 1;
  /// Seeds tried for randomized fixtures.
  unsigned trials = 50;
  std::uint64_t budget = default_budget;
  bool json = false;
  bool table = false;
};

struct DistanceOptions {
  std::string path;
  std::uint64_t budget = default_budget;
  bool json = false;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);
int cmd_example(const ExampleOptions& options, std::ostream& out, std::ostream& err);
int cmd_distance(const DistanceOptions& options, std::ostream& out, std::ostream& err);
int cmd_list_examples(std::ostream& out);

}  // namespace fractal::cli
