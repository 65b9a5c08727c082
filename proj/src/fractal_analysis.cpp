#include "fractal/fractal_analysis.hpp"

#include <algorithm>
#include <limits>

#include "fractal/errors.hpp"

namespace fractal {

namespace {

void check_sizes(const CodeFamily& c, const CodeFamily& d) {
  if (c.size() != d.size()) {
    throw FamilyError("family size mismatch: " + std::to_string(c.size()) + " vs " + std::to_string(d.size()));
  }
}

void require_acyclic(const CodeFamily& c, const CodeFamily& d, const char* what) {
  if (!is_acyclic(c)) throw HypothesisViolated(std::string(what) + ": first family is not acyclic");
  if (!is_acyclic(d)) throw HypothesisViolated(std::string(what) + ": second family is not acyclic");
}

// Member codes are nonzero, so every sum code has a finite distance.
std::uint32_t sum_distance(const CodeFamily& f, const MultiIndex& alpha, const EnumerationSettings& settings) {
  return f.sum_code(alpha).min_distance(settings).value();
}

std::vector<MultiIndex> as_vector(const IndexSet& set) { return {set.begin(), set.end()}; }

// One side of the lower bound: tags come from `tagged`'s basis; the max over
// psi0 uses sum distances of `other`, the max over transversals those of `tagged`.
LowerBoundTerm lower_term(const CodeFamily& tagged, const CodeFamily& other, const EnumerationSettings& settings,
                          bool prune_to_minimal) {
  LowerBoundTerm term;
  term.tags = as_vector(tagged.basis().tags());
  const std::size_t count = term.tags.size();
  if (count > 20) throw Error("lower bound: " + std::to_string(count) + " distinct basis tags is too many to enumerate");

  term.value = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << count); ++pick) {
    LowerBoundRow row;
    IndexSet psi0;
    for (std::size_t i = 0; i < count; ++i) {
      if ((pick >> i) & 1u) psi0.insert(term.tags[i]);
    }
    const IndexSet star = transversals(psi0);
    const IndexSet minimal = minimal_elements(star);

    for (const auto& alpha : psi0) row.tag_side_max = std::max(row.tag_side_max, sum_distance(other, alpha, settings));
    for (const auto& beta : prune_to_minimal ? minimal : star) {
      row.transversal_max = std::max(row.transversal_max, sum_distance(tagged, beta, settings));
    }
    row.value = std::uint64_t{row.tag_side_max} * row.transversal_max;
    row.psi0 = as_vector(psi0);
    row.psi0_star = as_vector(star);
    row.minimal = as_vector(minimal);
    term.value = std::min(term.value, row.value);
    term.rows.push_back(std::move(row));
  }
  return term;
}

}  // namespace

LinearCode construct(const CodeFamily& c, const CodeFamily& d) {
  check_sizes(c, d);
  BitMatrix stacked(c.length() * d.length());
  for (std::size_t i = 1; i <= c.size(); ++i) {
    stacked.append_rows(kron_matrix(c.code(i).generator(), d.code(i).generator()));
  }
  return LinearCode::from_rows(stacked);
}

long long dimension_formula(const CodeFamily& c, const CodeFamily& d) {
  check_sizes(c, d);
  require_acyclic(c, d, "dimension formula");
  long long kappa = 0;
  for (const auto& alpha : c.all_indexes()) {
    const auto term = static_cast<long long>(c.intersection_code(alpha).dimension() *
                                             d.intersection_code(alpha).dimension());
    kappa += alpha.size() % 2 == 1 ? term : -term;
  }
  return kappa;
}

std::string_view to_string(UpperBoundWitness::Side side) {
  return side == UpperBoundWitness::Side::first_intersection ? "first_intersection" : "second_intersection";
}

UpperBoundWitness upper_bound_witness(const CodeFamily& c, const CodeFamily& d, const EnumerationSettings& settings) {
  check_sizes(c, d);
  std::optional<UpperBoundWitness> best;
  auto consider = [&](UpperBoundWitness candidate) {
    if (!best || candidate.value() < best->value()) best = candidate;
  };
  for (const auto& alpha : c.all_indexes()) {
    const LinearCode& meet = c.intersection_code(alpha);
    if (meet.is_zero()) continue;
    consider({UpperBoundWitness::Side::first_intersection, alpha, meet.min_distance(settings).value(),
              sum_distance(d, alpha, settings)});
  }
  for (const auto& beta : d.all_indexes()) {
    const LinearCode& meet = d.intersection_code(beta);
    if (meet.is_zero()) continue;
    consider({UpperBoundWitness::Side::second_intersection, beta, sum_distance(c, beta, settings),
              meet.min_distance(settings).value()});
  }
  // Singletons always contribute because member codes are nonzero.
  return *best;
}

std::uint64_t upper_bound(const CodeFamily& c, const CodeFamily& d, const EnumerationSettings& settings) {
  return upper_bound_witness(c, d, settings).value();
}

BitVector witness_codeword(const CodeFamily& c, const CodeFamily& d, const UpperBoundWitness& witness,
                           const EnumerationSettings& settings) {
  const bool first = witness.side == UpperBoundWitness::Side::first_intersection;
  const LinearCode& x_code = first ? c.intersection_code(witness.alpha) : c.sum_code(witness.alpha);
  const LinearCode& y_code = first ? d.sum_code(witness.alpha) : d.intersection_code(witness.alpha);
  return kron(x_code.min_weight_codeword(settings), y_code.min_weight_codeword(settings));
}

LowerBoundTerms lower_bound_terms(const CodeFamily& c, const CodeFamily& d, const EnumerationSettings& settings,
                                  bool prune_to_minimal) {
  check_sizes(c, d);
  require_acyclic(c, d, "lower bound");
  LowerBoundTerms terms;
  terms.first = lower_term(c, d, settings, prune_to_minimal);
  terms.second = lower_term(d, c, settings, prune_to_minimal);
  return terms;
}

std::uint64_t lower_bound(const CodeFamily& c, const CodeFamily& d, const EnumerationSettings& settings,
                          bool prune_to_minimal) {
  return lower_bound_terms(c, d, settings, prune_to_minimal).value();
}

EmbeddedParams embedded_params(const CodeFamily& c, const CodeFamily& d, const EnumerationSettings& settings) {
  check_sizes(c, d);
  if (!is_embedded(c)) throw HypothesisViolated("embedded params: first family is not embedded");
  if (!is_embedded(d)) throw HypothesisViolated("embedded params: second family is not embedded");
  const std::size_t s = c.size();
  EmbeddedParams out;
  out.delta = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 1; i <= s; ++i) {
    const auto k_step = static_cast<long long>(c.code(i).dimension()) -
                        (i == 1 ? 0LL : static_cast<long long>(c.code(i - 1).dimension()));
    const LinearCode& partner = d.code(s - i + 1);
    out.kappa += k_step * static_cast<long long>(partner.dimension());
    out.delta = std::min(out.delta, std::uint64_t{c.code(i).min_distance(settings).value()} *
                                        partner.min_distance(settings).value());
  }
  return out;
}

std::string_view to_string(ExactSource source) {
  switch (source) {
    case ExactSource::enumeration:
      return "enumeration";
    case ExactSource::theorem_b:
      return "theorem_b";
    case ExactSource::skipped:
      return "skipped";
  }
  return "skipped";
}

AnalysisReport analyze(const CodeFamily& c, const CodeFamily& d, const AnalysisOptions& options) {
  check_sizes(c, d);
  const auto& settings = options.enumeration;

  AnalysisReport r;
  r.n = c.length();
  r.n_prime = d.length();
  r.s = c.size();

  const LinearCode code = construct(c, d);
  r.rank = code.dimension();

  const AcyclicityCheck c_check = acyclicity(c);
  const AcyclicityCheck d_check = acyclicity(d);
  r.c_acyclic = c_check.independent_basis;
  r.d_acyclic = d_check.independent_basis;
  if (!c_check.agree()) r.diagnostics.push_back("first family: basis independence and inclusion-exclusion disagree");
  if (!d_check.agree()) r.diagnostics.push_back("second family: basis independence and inclusion-exclusion disagree");

  r.c_embedded = is_embedded(c);
  r.d_embedded = is_embedded(d);
  r.c_degenerate_chain = is_degenerate_chain(c);
  r.d_degenerate_chain = is_degenerate_chain(d);

  for (const auto& alpha : c.all_indexes()) {
    AlphaRow row;
    row.alpha = alpha;
    for (auto [family, entry] : {std::pair{&c, &row.c}, std::pair{&d, &row.d}}) {
      const LinearCode& meet = family->intersection_code(alpha);
      const LinearCode& sum = family->sum_code(alpha);
      entry->k_cap = meet.dimension();
      entry->k_sum = sum.dimension();
      entry->d_cap = meet.min_distance(settings);
      entry->d_sum = sum.min_distance(settings);
    }
    r.per_alpha_table.push_back(row);
  }

  r.upper_witness = upper_bound_witness(c, d, settings);
  r.upper_bound = r.upper_witness.value();

  if (r.c_acyclic && r.d_acyclic) {
    r.kappa_formula = dimension_formula(c, d);
    r.lower_terms = lower_bound_terms(c, d, settings);
    r.lower_bound = r.lower_terms->value();
    r.bounds_coincide = *r.lower_bound == r.upper_bound;
  }
  r.theorem_b_applies = (r.c_embedded && r.d_acyclic) || (r.d_embedded && r.c_acyclic);

  if (options.compute_exact) {
    try {
      r.exact_distance = code.min_distance(settings).value();
      r.exact_source = ExactSource::enumeration;
    } catch (const BudgetExceeded&) {
      r.exact_distance.reset();
    }
  }
  if (!r.exact_distance && r.theorem_b_applies) {
    r.exact_distance = r.upper_bound;
    r.exact_source = ExactSource::theorem_b;
  }
  return r;
}

std::string_view to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::kappa_mismatch:
      return "kappa_mismatch";
    case FindingKind::exact_below_lower:
      return "exact_below_lower";
    case FindingKind::exact_exceeds_upper:
      return "exact_exceeds_upper";
    case FindingKind::lower_exceeds_upper:
      return "lower_exceeds_upper";
    case FindingKind::theorem_b_bounds_differ:
      return "theorem_b_bounds_differ";
    case FindingKind::theorem_b_exact_differs:
      return "theorem_b_exact_differs";
    case FindingKind::witness_invalid:
      return "witness_invalid";
    case FindingKind::acyclicity_disagreement:
      return "acyclicity_disagreement";
  }
  return "unknown";
}

std::vector<Finding> verify(const AnalysisReport& report, const CodeFamily& c, const CodeFamily& d,
                            const EnumerationSettings& settings) {
  std::vector<Finding> findings;
  auto add = [&](FindingKind kind, std::string message) { findings.push_back({kind, std::move(message)}); };
  const auto str = [](std::uint64_t v) { return std::to_string(v); };

  if (report.kappa_formula && *report.kappa_formula != static_cast<long long>(report.rank)) {
    add(FindingKind::kappa_mismatch, "kappa formula " + std::to_string(*report.kappa_formula) +
                                         " differs from rank " + std::to_string(report.rank));
  }
  if (report.lower_bound && *report.lower_bound > report.upper_bound) {
    add(FindingKind::lower_exceeds_upper,
        "lower exceeds upper: " + str(*report.lower_bound) + " > " + str(report.upper_bound));
  }

  const bool enumerated = report.exact_distance && report.exact_source == ExactSource::enumeration;
  if (enumerated) {
    const std::uint64_t exact = *report.exact_distance;
    if (report.lower_bound && exact < *report.lower_bound) {
      add(FindingKind::exact_below_lower, "exact below lower: " + str(exact) + " < " + str(*report.lower_bound));
    }
    if (exact > report.upper_bound) {
      add(FindingKind::exact_exceeds_upper, "exact exceeds upper: " + str(exact) + " > " + str(report.upper_bound));
    }
  }

  if (report.theorem_b_applies) {
    if (!report.lower_bound || *report.lower_bound != report.upper_bound) {
      add(FindingKind::theorem_b_bounds_differ,
          "theorem_b_applies but bounds differ: lower " +
              (report.lower_bound ? str(*report.lower_bound) : std::string("NOT-APPLICABLE")) + ", upper " +
              str(report.upper_bound));
    }
    if (enumerated && *report.exact_distance != report.upper_bound) {
      add(FindingKind::theorem_b_exact_differs, "theorem B applies but exact " + str(*report.exact_distance) +
                                                    " differs from upper " + str(report.upper_bound));
    }
  }

  for (const auto& note : report.diagnostics) add(FindingKind::acyclicity_disagreement, note);

  // The witness is rebuilt from the inputs, independent of the report's numbers.
  const UpperBoundWitness witness = upper_bound_witness(c, d, settings);
  const BitVector word = witness_codeword(c, d, witness, settings);
  const LinearCode code = construct(c, d);
  if (!code.contains(word) || word.weight() != witness.value()) {
    add(FindingKind::witness_invalid, "upper-bound witness at alpha " + witness.alpha.to_string() +
                                          " has weight " + str(word.weight()) + " (expected " +
                                          str(witness.value()) + ") or is not a codeword");
  }
  return findings;
}

}  // namespace fractal
