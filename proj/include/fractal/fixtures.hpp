#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fractal/fractal_analysis.hpp"
#include "fractal/linear_code.hpp"
#include "fractal/subspace_family.hpp"

namespace fractal::fixtures {

/// Where an expected value comes from: a published parameter of the
/// construction, or a value computed independently (enumeration, counting).
enum class Origin { published, derived };

struct Expectation {
  std::string field;
  long long expected = 0;
  Origin origin = Origin::published;
  std::string note;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FixtureInstance {
  CodeFamily c;
  CodeFamily d;
  /// Both chains in increasing order, when the closed forms apply.
  std::optional<std::pair<CodeFamily, CodeFamily>> embedded_chains;
  std::vector<Expectation> expectations;
  /// Printed, not enforced.
  std::vector<std::string> notes;
  /// Extra fixture-specific checks run after analysis.
  std::function<std::vector<Check>(const AnalysisReport&)> extra_checks;
};

struct ExampleFixture {
  std::string name;
  std::string title;
  /// Randomized fixtures are run once per seed.
  bool randomized = false;
  std::function<FixtureInstance(std::uint64_t seed)> build;
};

const std::vector<ExampleFixture>& all();
const ExampleFixture* find(std::string_view name);

// Component codes of the worked examples.
LinearCode golay_c1();
LinearCode golay_c2();
LinearCode golay_d1();
LinearCode golay_d2();
/// The 12-row generator as printed alongside the construction (second-factor-major layout).
BitMatrix golay_printed_generator();

/// RM(r, m) from evaluations of all monomials of degree <= r at the 2^m points.
LinearCode reed_muller(unsigned r, unsigned m);

/// Random nonzero code: `rows` uniform rows of length n, canonicalized;
/// resampled until nonzero.
LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t rows);

/// Evaluates enforced expectations against a report.
std::vector<Check> check_expectations(const std::vector<Expectation>& expectations, const AnalysisReport& report);

struct FixtureOutcome {
  AnalysisReport report;
  std::vector<Finding> findings;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool ok() const;
};

FixtureOutcome run(const ExampleFixture& fixture, std::uint64_t seed, const AnalysisOptions& options = {});

}  // namespace fractal::fixtures
