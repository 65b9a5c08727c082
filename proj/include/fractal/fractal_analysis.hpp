#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fractal/linear_code.hpp"
#include "fractal/subspace_family.hpp"

namespace fractal {

/// C_1 (x) D_1 + ... + C_s (x) D_s. Position i * n' + j carries coordinate i
/// of the first factor and coordinate j of the second. Throws FamilyError
/// when the families differ in size.
LinearCode construct(const CodeFamily& c, const CodeFamily& d);

/// Alternating sum over all alpha of k_alpha * k'_alpha. Both families must
/// be acyclic (HypothesisViolated otherwise).
long long dimension_formula(const CodeFamily& c, const CodeFamily& d);

/// Which product attains the upper bound: d_alpha * d'^alpha (intersection of
/// the first family) or d^alpha * d'_alpha (intersection of the second).
struct UpperBoundWitness {
  enum class Side { first_intersection, second_intersection };

  Side side = Side::first_intersection;
  MultiIndex alpha = MultiIndex::singleton(1);
  std::uint32_t first_distance = 0;
  std::uint32_t second_distance = 0;

  std::uint64_t value() const noexcept { return std::uint64_t{first_distance} * second_distance; }
  friend bool operator==(const UpperBoundWitness&, const UpperBoundWitness&) = default;
};

std::string_view to_string(UpperBoundWitness::Side side);

/// Minimising term of the product upper bound, first family's side first and
/// ties broken by mask order.
UpperBoundWitness upper_bound_witness(const CodeFamily& c, const CodeFamily& d,
                                      const EnumerationSettings& settings = {});
std::uint64_t upper_bound(const CodeFamily& c, const CodeFamily& d, const EnumerationSettings& settings = {});

/// x (x) y for the witness: x, y are minimum-weight words of the two lattice
/// codes named by the witness. Its weight equals witness.value().
BitVector witness_codeword(const CodeFamily& c, const CodeFamily& d, const UpperBoundWitness& witness,
                           const EnumerationSettings& settings = {});

/// One nonempty subset psi0 of a tag set with its transversals and
/// (max over psi0)(max over transversals) product.
struct LowerBoundRow {
  std::vector<MultiIndex> psi0;
  std::vector<MultiIndex> psi0_star;
  /// Inclusion-minimal members of psi0_star; the inner maximum is attained here.
  std::vector<MultiIndex> minimal;
  std::uint32_t tag_side_max = 0;
  std::uint32_t transversal_max = 0;
  std::uint64_t value = 0;

  friend bool operator==(const LowerBoundRow&, const LowerBoundRow&) = default;
};

struct LowerBoundTerm {
  std::vector<MultiIndex> tags;
  std::vector<LowerBoundRow> rows;
  std::uint64_t value = 0;

  friend bool operator==(const LowerBoundTerm&, const LowerBoundTerm&) = default;
};

struct LowerBoundTerms {
  /// Over subsets of Psi(e), the first family's basis tags (m1 column).
  LowerBoundTerm first;
  /// Over subsets of Psi(g), the second family's basis tags (m2 column).
  LowerBoundTerm second;

  std::uint64_t value() const noexcept { return first.value > second.value ? first.value : second.value; }

  friend bool operator==(const LowerBoundTerms&, const LowerBoundTerms&) = default;
};

/// Both nested expressions evaluated exactly over all nonempty subsets. With
/// prune_to_minimal the transversal maximum only visits inclusion-minimal
/// transversals; the result is the same either way. Both families must be
/// acyclic (HypothesisViolated otherwise).
LowerBoundTerms lower_bound_terms(const CodeFamily& c, const CodeFamily& d, const EnumerationSettings& settings = {},
                                  bool prune_to_minimal = true);
std::uint64_t lower_bound(const CodeFamily& c, const CodeFamily& d, const EnumerationSettings& settings = {},
                          bool prune_to_minimal = true);

struct EmbeddedParams {
  long long kappa = 0;
  std::uint64_t delta = 0;

  friend bool operator==(const EmbeddedParams&, const EmbeddedParams&) = default;
};

/// Closed forms for E = C_1 (x) D_s + C_2 (x) D_{s-1} + ... + C_s (x) D_1 with
/// both families embedded in their declared order. Note the reversal: pair
/// with construct(c, d.reversed()). Throws HypothesisViolated otherwise.
EmbeddedParams embedded_params(const CodeFamily& c, const CodeFamily& d, const EnumerationSettings& settings = {});

struct LatticeEntry {
  std::size_t k_cap = 0;
  std::size_t k_sum = 0;
  Distance d_cap = Distance::infinite();
  Distance d_sum = Distance::infinite();

  friend bool operator==(const LatticeEntry&, const LatticeEntry&) = default;
};

struct AlphaRow {
  MultiIndex alpha = MultiIndex::singleton(1);
  LatticeEntry c;
  LatticeEntry d;

  friend bool operator==(const AlphaRow&, const AlphaRow&) = default;
};

enum class ExactSource { enumeration, theorem_b, skipped };
std::string_view to_string(ExactSource source);

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t n_prime = 0;
  std::size_t s = 0;
  /// nullopt when either family is not acyclic (NOT-APPLICABLE).
  std::optional<long long> kappa_formula;
  std::size_t rank = 0;
  std::uint64_t upper_bound = 0;
  /// nullopt when either family is not acyclic (NOT-APPLICABLE).
  std::optional<std::uint64_t> lower_bound;
  /// nullopt when SKIPPED.
  std::optional<std::uint64_t> exact_distance;
  ExactSource exact_source = ExactSource::skipped;
  bool c_acyclic = false;
  bool d_acyclic = false;
  bool c_embedded = false;
  bool d_embedded = false;
  bool c_degenerate_chain = false;
  bool d_degenerate_chain = false;
  bool theorem_b_applies = false;
  bool bounds_coincide = false;
  std::vector<AlphaRow> per_alpha_table;
  UpperBoundWitness upper_witness;
  std::optional<LowerBoundTerms> lower_terms;
  std::vector<std::string> diagnostics;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalysisOptions {
  bool compute_exact = true;
  /// Budget for the constructed code's enumeration. Lattice codes use the
  /// same settings; exceeding it there is an error, here it only skips.
  EnumerationSettings enumeration;
};

AnalysisReport analyze(const CodeFamily& c, const CodeFamily& d, const AnalysisOptions& options = {});

enum class FindingKind {
  kappa_mismatch,
  exact_below_lower,
  exact_exceeds_upper,
  lower_exceeds_upper,
  theorem_b_bounds_differ,
  theorem_b_exact_differs,
  witness_invalid,
  acyclicity_disagreement,
};

std::string_view to_string(FindingKind kind);

struct Finding {
  FindingKind kind;
  std::string message;
};

/// Cross-checks a report against the theorems on the concrete inputs. Checks
/// involving the exact distance are skipped when it is unavailable.
std::vector<Finding> verify(const AnalysisReport& report, const CodeFamily& c, const CodeFamily& d,
                            const EnumerationSettings& settings = {});

}  // namespace fractal
