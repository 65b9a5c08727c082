#include "fractal/fixtures.hpp"

#include <algorithm>
#include <bit>

#include "fractal/errors.hpp"

namespace fractal::fixtures {

namespace {

LinearCode code(std::size_t n, std::initializer_list<const char*> rows) {
  std::vector<std::string> r(rows.begin(), rows.end());
  return LinearCode::from_rows(BitMatrix::from_strings(n, r));
}

LinearCode drop_row(const BitMatrix& m, std::size_t row) {
  BitMatrix out(m.col_count());
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    if (i != row) out.append_row(m.row(i));
  }
  return LinearCode::from_rows(out);
}

// Rows as printed, before canonicalization, so row deletions act on them.
BitMatrix golay_c1_rows() { return BitMatrix::from_strings(8, {"...11.11", "..11.1.1", ".11.1..1", "11.1...1"}); }
BitMatrix golay_c2_rows() { return BitMatrix::from_strings(8, {"1.11...1", ".1.11..1", "..1.11.1", "...1.111"}); }

CodeFamily turyn_d() { return CodeFamily({golay_d1(), golay_d2()}); }

Check make_check(std::string name, bool passed, std::string detail = {}) {
  return Check{std::move(name), passed, std::move(detail)};
}

std::optional<long long> field_value(const AnalysisReport& r, const std::string& field) {
  if (field == "rank") return static_cast<long long>(r.rank);
  if (field == "length") return static_cast<long long>(r.n * r.n_prime);
  if (field == "kappa_formula") return r.kappa_formula;
  if (field == "upper_bound") return static_cast<long long>(r.upper_bound);
  if (field == "lower_bound") {
    return r.lower_bound ? std::optional<long long>(static_cast<long long>(*r.lower_bound)) : std::nullopt;
  }
  if (field == "exact_distance") {
    return r.exact_distance ? std::optional<long long>(static_cast<long long>(*r.exact_distance)) : std::nullopt;
  }
  if (field == "theorem_b_applies") return r.theorem_b_applies ? 1 : 0;
  if (field == "bounds_coincide") return r.bounds_coincide ? 1 : 0;
  throw Error("unknown expectation field '" + field + "'");
}

// |a+x|a+b+x|b+x| laid out block by block: one block per coordinate of the
// second factor, matching construct(D, C).
LinearCode explicit_block_code(const std::vector<std::vector<std::pair<const LinearCode*, bool>>>& blocks_per_source,
                               std::size_t n) {
  const std::size_t block_count = blocks_per_source.front().size();
  BitMatrix rows(n * block_count);
  for (const auto& source : blocks_per_source) {
    const LinearCode& c = *source.front().first;
    for (const auto& g : c.generator().rows()) {
      BitVector v(n * block_count);
      for (std::size_t b = 0; b < block_count; ++b) {
        if (!source[b].second) continue;
        for (std::size_t i = 0; i < n; ++i) {
          if (g.get(i)) v.set(b * n + i);
        }
      }
      rows.append_row(std::move(v));
    }
  }
  return LinearCode::from_rows(rows);
}

FixtureInstance golay24(std::uint64_t) {
  FixtureInstance f{CodeFamily({golay_c1(), golay_c2()}), turyn_d(), std::nullopt, {}, {}, {}};
  f.expectations = {
      {"length", 24, Origin::published, "(24,12,8) Golay code"},
      {"rank", 12, Origin::published, "(24,12,8) Golay code"},
      {"kappa_formula", 12, Origin::published, "4*1 + 4*2 - 1*0"},
      {"exact_distance", 8, Origin::published, "(24,12,8) Golay code"},
      {"upper_bound", 8, Origin::published, "upper bound is reached"},
      {"lower_bound", 4, Origin::published, "max(4,4) = 4"},
      {"theorem_b_applies", 0, Origin::derived, "neither family is embedded"},
  };
  const CodeFamily c = f.c;
  const CodeFamily d = f.d;
  f.extra_checks = [c, d](const AnalysisReport&) {
    const LinearCode printed = LinearCode::from_rows(golay_printed_generator());
    const LinearCode swapped = construct(d, c);
    const LinearCode direct = construct(c, d);
    BitMatrix transposed(direct.length());
    for (const auto& row : direct.generator().rows()) {
      transposed.append_row(transpose_coordinates(row, c.length(), d.length()));
    }
    return std::vector<Check>{
        make_check("printed generator == construct(D, C)", printed == swapped),
        make_check("printed generator == transpose(construct(C, D))", printed == LinearCode::from_rows(transposed)),
    };
  };
  return f;
}

FixtureInstance p21_12_5(std::uint64_t) {
  FixtureInstance f{CodeFamily({puncture(golay_c1(), 7), puncture(golay_c2(), 7)}), turyn_d(), std::nullopt, {}, {}, {}};
  f.expectations = {
      {"length", 21, Origin::published, "(21,12,5)-code"},
      {"rank", 12, Origin::published, "(21,12,5)-code"},
      {"kappa_formula", 12, Origin::published, "4*1 + 4*2 - 1*0"},
      {"exact_distance", 5, Origin::published, "(21,12,5)-code"},
      {"upper_bound", 6, Origin::published, "upper bound 6, not reached"},
  };
  f.notes = {
      "published lower bound is max(3,4) = 4; the bound formula evaluated exactly gives max(3,3) = 3 "
      "(the second term's subset {1,2} contributes max(d^1,d^2) * d'^12 = 3 * 1); not enforced",
  };
  const CodeFamily c = f.c;
  f.extra_checks = [c](const AnalysisReport&) {
    const LinearCode& meet = c.intersection_code(MultiIndex::of({1, 2}));
    return std::vector<Check>{make_check("punctured members are (7,4,3)",
                                         c.code(1).dimension() == 4 && c.code(1).min_distance().value() == 3 &&
                                             c.code(2).dimension() == 4 && c.code(2).min_distance().value() == 3),
                              make_check("C_12 is one weight-7 vector",
                                         meet.dimension() == 1 && meet.min_distance().value() == 7)};
  };
  return f;
}

// The heading of this example reads (21,8,9); its body says (21,9,8), which
// is what the dimension formula (3*1 + 3*2) and enumeration give.
FixtureInstance p21_x3(std::uint64_t) {
  const LinearCode c1 = puncture(drop_row(golay_c1_rows(), 0), 6);
  const LinearCode c2 = puncture(drop_row(golay_c2_rows(), 3), 6);
  FixtureInstance f{CodeFamily({c1, c2}), turyn_d(), std::nullopt, {}, {}, {}};
  f.expectations = {
      {"length", 21, Origin::published, "(21,9,8)"},
      {"rank", 9, Origin::published, "3*1 + 3*2 = 9"},
      {"kappa_formula", 9, Origin::published, "3*1 + 3*2"},
      {"upper_bound", 8, Origin::derived, "min(4*3, 4*2, 4*3, 4*2)"},
      {"lower_bound", 6, Origin::published, "max(4,6) = 6"},
      {"exact_distance", 8, Origin::published, "upper bound is reached"},
  };
  f.notes = {"heading reads (21,8,9); body and computation give (21,9,8)"};
  const CodeFamily c = f.c;
  f.extra_checks = [c](const AnalysisReport& r) {
    return std::vector<Check>{
        make_check("members are (7,3,4) with zero intersection",
                   c.code(1).dimension() == 3 && c.code(2).dimension() == 3 &&
                       c.code(1).min_distance().value() == 4 && c.code(2).min_distance().value() == 4 &&
                       c.intersection_code(MultiIndex::of({1, 2})).is_zero()),
        make_check("exact distance equals upper bound", r.exact_distance && *r.exact_distance == r.upper_bound)};
  };
  return f;
}

FixtureInstance p28_22_4(std::uint64_t) {
  const LinearCode c1 = puncture(drop_row(golay_c2_rows(), 3), 6);
  const CodeFamily c({c1, even_weight(7), universe(7)});
  const CodeFamily d({universe(4), even_weight(4), repetition(4)});
  FixtureInstance f{c, d, std::make_pair(c, d.reversed()), {}, {}, {}};
  f.expectations = {
      {"length", 28, Origin::published, "(28,22,4)-code"},
      {"rank", 22, Origin::published, "(28,22,4)-code"},
      {"kappa_formula", 22, Origin::published, "(28,22,4)-code"},
      {"upper_bound", 4, Origin::published, "upper bound reached, equal to lower"},
      {"lower_bound", 4, Origin::published, "every table row gives 4"},
      {"exact_distance", 4, Origin::published, "(28,22,4)-code"},
      {"theorem_b_applies", 1, Origin::published, "first family embedded, second acyclic"},
      {"bounds_coincide", 1, Origin::published, "bounds coincide"},
  };
  f.extra_checks = [c, d](const AnalysisReport& r) {
    std::vector<Check> checks;
    const auto params = embedded_params(c, d.reversed());
    checks.push_back(make_check("closed forms give (22, 4)", params.kappa == 22 && params.delta == 4,
                                "(" + std::to_string(params.kappa) + ", " + std::to_string(params.delta) + ")"));
    bool all_four = r.lower_terms.has_value();
    if (r.lower_terms) {
      for (const auto& row : r.lower_terms->first.rows) all_four = all_four && row.value == 4;
    }
    checks.push_back(make_check("every m1 table entry is 4", all_four));
    const IndexSet expected_e{MultiIndex::of({1, 2, 3}), MultiIndex::of({2, 3}), MultiIndex::of({3})};
    const IndexSet expected_g{MultiIndex::of({1}), MultiIndex::of({1, 2}), MultiIndex::of({1, 2, 3})};
    checks.push_back(make_check("Psi(e) = {123,23,3}", c.basis().tags() == expected_e, to_string(c.basis().tags())));
    checks.push_back(make_check("Psi(g) = {1,12,123}", d.basis().tags() == expected_g, to_string(d.basis().tags())));
    return checks;
  };
  return f;
}

FixtureInstance rm32_16_8(std::uint64_t) {
  const CodeFamily c({repetition(4), even_weight(4), universe(4)});
  const CodeFamily d_chain({repetition(8), golay_c1(), even_weight(8)});
  FixtureInstance f{c, d_chain.reversed(), std::make_pair(c, d_chain), {}, {}, {}};
  f.expectations = {
      {"length", 32, Origin::published, "(32,16,8)-code"},
      {"rank", 16, Origin::published, "(32,16,8)-code"},
      {"kappa_formula", 16, Origin::published, "1*7 + 2*4 + 1*1"},
      {"exact_distance", 8, Origin::published, "(32,16,8)-code"},
      {"upper_bound", 8, Origin::published, "(32,16,8)-code"},
      {"lower_bound", 8, Origin::derived, "bounds coincide for embedded families"},
  };
  f.notes = {"Reed-Muller equivalence is checked by a proxy: equal parameters and equal weight distributions"};
  f.extra_checks = [c, d_chain](const AnalysisReport&) {
    std::vector<Check> checks;
    const auto params = embedded_params(c, d_chain);
    checks.push_back(make_check("closed forms give (16, 8)", params.kappa == 16 && params.delta == 8,
                                "(" + std::to_string(params.kappa) + ", " + std::to_string(params.delta) + ")"));
    const LinearCode code = construct(c, d_chain.reversed());
    const LinearCode rm = reed_muller(2, 5);
    const bool same = code.length() == rm.length() && code.dimension() == rm.dimension() &&
                      code.weight_distribution() == rm.weight_distribution();
    checks.push_back(make_check("weight distribution equals RM(2,5) (equivalence proxy)", same));
    return checks;
  };
  return f;
}

FixtureInstance u_uplusv(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(2, 10);
  const std::size_t n = length(rng);
  std::uniform_int_distribution<std::size_t> rows(1, std::min<std::size_t>(5, n));
  const LinearCode c1 = random_code(rng, n, rows(rng));
  const LinearCode c2 = random_code(rng, n, rows(rng));
  const CodeFamily c({c1, c2});
  const CodeFamily d({code(2, {"11"}), code(2, {"01"})});
  const long long d1 = c1.min_distance().value();
  const long long d2 = c2.min_distance().value();
  const long long target = std::min(2 * d1, d2);
  FixtureInstance f{c, d, std::nullopt, {}, {}, {}};
  f.expectations = {
      {"exact_distance", target, Origin::published, "min(2 d1, d2)"},
      {"upper_bound", target, Origin::published, "min(2 d1, d2)"},
      {"lower_bound", target, Origin::published, "min(2 d1, d2)"},
      {"rank", static_cast<long long>(c1.dimension() + c2.dimension()), Origin::derived, "k1 + k2"},
  };
  f.notes = {"seed " + std::to_string(seed) + ": C1 " + c1.params_string() + ", C2 " + c2.params_string()};
  f.extra_checks = [c, d, c1, c2, n](const AnalysisReport&) {
    // (u | u+v): block 0 carries u, block 1 carries u + v.
    const LinearCode expected = explicit_block_code({{{&c1, true}, {&c1, true}}, {{&c2, false}, {&c2, true}}}, n);
    return std::vector<Check>{make_check("construct(D, C) is the explicit |u|u+v| code", construct(d, c) == expected)};
  };
  return f;
}

FixtureInstance turyn_axbx(std::uint64_t) {
  const LinearCode c1 = puncture(golay_c1(), 7);
  const LinearCode c2 = puncture(drop_row(golay_c2_rows(), 3), 6);
  const CodeFamily c({c1, c2});
  const CodeFamily d = turyn_d();
  FixtureInstance f{c, d, std::nullopt, {}, {}, {}};
  f.expectations = {
      {"length", 21, Origin::derived, "7 * 3"},
      {"rank", static_cast<long long>(c1.dimension() + 2 * c2.dimension()), Origin::derived,
       "k1*1 + k2*2 (D1 and D2 meet in zero)"},
  };
  f.notes = {"lower bound depends on the configuration of the first family"};
  f.extra_checks = [c, d, c1, c2](const AnalysisReport&) {
    // x in C1 spans all three blocks; a, b in C2 give blocks (b, a+b, a).
    const LinearCode expected = explicit_block_code(
        {{{&c1, true}, {&c1, true}, {&c1, true}}, {{&c2, false}, {&c2, true}, {&c2, true}},
         {{&c2, true}, {&c2, true}, {&c2, false}}},
        c.length());
    return std::vector<Check>{
        make_check("construct(D, C) is the explicit |a+x|a+b+x|b+x| code", construct(d, c) == expected)};
  };
  return f;
}

}  // namespace

LinearCode golay_c1() { return LinearCode::from_rows(golay_c1_rows()); }
LinearCode golay_c2() { return LinearCode::from_rows(golay_c2_rows()); }
LinearCode golay_d1() { return code(3, {"111"}); }
LinearCode golay_d2() { return code(3, {".11", "11."}); }

BitMatrix golay_printed_generator() {
  return BitMatrix::from_strings(24, {
                                         "...11.11...11.11...11.11",
                                         "..11.1.1..11.1.1..11.1.1",
                                         ".11.1..1.11.1..1.11.1..1",
                                         "11.1...111.1...111.1...1",
                                         "........1.11...11.11...1",
                                         ".........1.11..1.1.11..1",
                                         "..........1.11.1..1.11.1",
                                         "...........1.111...1.111",
                                         "1.11...11.11...1........",
                                         ".1.11..1.1.11..1........",
                                         "..1.11.1..1.11.1........",
                                         "...1.111...1.111........",
                                     });
}

LinearCode reed_muller(unsigned r, unsigned m) {
  const std::size_t n = std::size_t{1} << m;
  BitMatrix rows(n);
  for (std::uint32_t monomial = 0; monomial < (1u << m); ++monomial) {
    if (static_cast<unsigned>(std::popcount(monomial)) > r) continue;
    BitVector v(n);
    for (std::size_t point = 0; point < n; ++point) {
      if ((point & monomial) == monomial) v.set(point);
    }
    rows.append_row(std::move(v));
  }
  return LinearCode::from_rows(rows);
}

LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
  std::bernoulli_distribution bit(0.5);
  for (;;) {
    BitMatrix m(n);
    for (std::size_t r = 0; r < rows; ++r) {
      BitVector v(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (bit(rng)) v.set(i);
      }
      m.append_row(std::move(v));
    }
    LinearCode c = LinearCode::from_rows(m);
    if (!c.is_zero()) return c;
  }
}

std::vector<Check> check_expectations(const std::vector<Expectation>& expectations, const AnalysisReport& report) {
  std::vector<Check> out;
  for (const auto& e : expectations) {
    const auto actual = field_value(report, e.field);
    Check c;
    c.name = e.field + " = " + std::to_string(e.expected) + " (" +
             (e.origin == Origin::published ? "published" : "derived") + ": " + e.note + ")";
    c.passed = actual && *actual == e.expected;
    c.detail = actual ? "got " + std::to_string(*actual) : "got NOT-APPLICABLE/SKIPPED";
    out.push_back(std::move(c));
  }
  return out;
}

bool FixtureOutcome::ok() const {
  return findings.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

FixtureOutcome run(const ExampleFixture& fixture, std::uint64_t seed, const AnalysisOptions& options) {
  const FixtureInstance inst = fixture.build(seed);
  FixtureOutcome out{analyze(inst.c, inst.d, options), {}, {}, inst.notes};
  out.findings = verify(out.report, inst.c, inst.d, options.enumeration);
  out.checks = check_expectations(inst.expectations, out.report);
  if (inst.extra_checks) {
    for (auto& c : inst.extra_checks(out.report)) out.checks.push_back(std::move(c));
  }
  return out;
}

const std::vector<ExampleFixture>& all() {
  static const std::vector<ExampleFixture> fixtures = {
      {"golay24", "Golay (24,12,8) from two (8,4,4) codes", false, golay24},
      {"p21_12_5", "(21,12,5) from punctured (7,4,3) codes", false, p21_12_5},
      {"p21_x3", "(21,9,8) from two (7,3,4) codes with zero intersection", false, p21_x3},
      {"p28_22_4", "(28,22,4) from an embedded chain", false, p28_22_4},
      {"rm32_16_8", "(32,16,8) from two embedded chains, Reed-Muller RM(2,5)", false, rm32_16_8},
      {"u_uplusv", "|u|u+v| construction, random C1 and C2", true, u_uplusv},
      {"turyn_axbx", "|a+x|b+x|a+b+x| construction", false, turyn_axbx},
  };
  return fixtures;
}

const ExampleFixture* find(std::string_view name) {
  for (const auto& f : all()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

}  // namespace fractal::fixtures
