// Acceptance runner. Prints one PASS/FAIL line per criterion.
//
//   acceptance                 all criteria
//   acceptance --criterion N   only N (repeatable)

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fractal/commands.hpp"
#include "fractal/fixtures.hpp"
#include "fractal/fractal_analysis.hpp"
#include "fractal/report.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace fractal;

namespace {

struct Result {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "" : "MISMATCH ") + what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << "=" << got;
    if (!(got == want)) s << " (expected " << want << ")";
    expect(got == want, s.str());
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string opt(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "none"; }

fixtures::FixtureInstance build(const char* name, std::uint64_t seed = 1) { return fixtures::find(name)->build(seed); }

void timed(Result& r, Clock::time_point start, double limit, const std::string& label = "runtime") {
  const double s = seconds_since(start);
  std::ostringstream o;
  o << label << "=" << s << "s (limit " << limit << "s)";
  r.expect(s < limit, o.str());
}

Result golay() {
  Result r;
  const auto start = Clock::now();
  const auto f = build("golay24");
  const auto rep = analyze(f.c, f.d);
  r.equal(rep.rank, 12u, "rank");
  r.equal(opt(rep.exact_distance), std::string("8"), "exact");
  r.equal(std::string(to_string(rep.exact_source)), std::string("enumeration"), "exact_source");
  r.equal(rep.upper_bound, 8u, "upper");
  r.equal(opt(rep.lower_bound), std::string("4"), "lower");

  const auto printed = rref(fixtures::golay_printed_generator()).basis;
  // The printed matrix lists the second factor's coordinate first.
  r.expect(construct(f.d, f.c).generator() == printed, "row space of construct(D,C) equals printed generator");
  const auto direct = construct(f.c, f.d);
  BitMatrix swapped(direct.length());
  for (const auto& row : direct.generator().rows()) swapped.append_row(transpose_coordinates(row, 8, 3));
  r.expect(rref(swapped).basis == printed, "construct(C,D) equals printed generator after coordinate transpose");
  r.equal(oracle::min_distance(oracle::to_mat(printed), 24), 8u, "printed generator naive distance");
  timed(r, start, 1.0);
  return r;
}

Result punctured() {
  Result r;
  const auto start = Clock::now();
  const auto f = build("p21_12_5");
  const auto rep = analyze(f.c, f.d);
  r.equal(rep.kappa_formula.value_or(-1), 12, "kappa_formula");
  r.equal(rep.rank, 12u, "rank");
  r.equal(rep.upper_bound, 6u, "upper");
  r.equal(opt(rep.exact_distance), std::string("5"), "exact");
  r.equal(oracle::min_distance(oracle::to_mat(construct(f.c, f.d)), 21), 5u, "naive exact");
  r.equal(opt(rep.lower_bound), std::string("4"), "lower");
  timed(r, start, 1.0);
  return r;
}

Result zero_intersection() {
  Result r;
  const auto start = Clock::now();
  const auto f = build("p21_x3");
  const auto rep = analyze(f.c, f.d);
  r.equal(rep.rank, 9u, "rank");
  r.equal(rep.kappa_formula.value_or(-1), 9, "kappa_formula");
  r.equal(rep.upper_bound, 8u, "upper");
  r.equal(opt(rep.lower_bound), std::string("6"), "lower");
  const auto naive = oracle::min_distance(oracle::to_mat(construct(f.c, f.d)), 21);
  r.equal(naive, 8u, "naive exact");
  r.equal(opt(rep.exact_distance), std::to_string(rep.upper_bound), "exact equals upper");
  r.expect(!f.notes.empty() && f.notes[0].find("(21,8,9)") != std::string::npos,
           "fixture documents heading/body discrepancy");
  timed(r, start, 1.0);
  return r;
}

Result embedded_chain() {
  Result r;
  const auto f = build("p28_22_4");

  AnalysisOptions single;
  single.enumeration.workers = 1;
  const auto start = Clock::now();
  const auto rep = analyze(f.c, f.d, single);
  timed(r, start, 30.0, "single-threaded");
  r.expect(rep.theorem_b_applies, "theorem_b_applies");
  r.equal(rep.rank, 22u, "rank");
  r.equal(rep.upper_bound, 4u, "upper");
  r.equal(opt(rep.lower_bound), std::string("4"), "lower");
  r.equal(opt(rep.exact_distance), std::string("4"), "exact");
  r.equal(std::string(to_string(rep.exact_source)), std::string("enumeration"), "exact_source");

  const auto par_start = Clock::now();
  const auto code = construct(f.c, f.d);
  const LinearCode fresh = LinearCode::from_rows(code.generator());
  r.equal(fresh.min_distance(EnumerationSettings{default_budget, 0, nullptr}).value(), 4u, "parallel exact");
  timed(r, par_start, 10.0, "parallel");

  // The m1 column of the --table output.
  std::ostringstream out, err;
  cli::cmd_example({"p28_22_4", 1, 1, default_budget, false, true}, out, err);
  const auto text = out.str();
  const auto begin = text.find("Psi(e) = {123,23,3}");
  const auto end = text.find("min = ", begin);
  r.expect(begin != std::string::npos && end != std::string::npos, "Psi(e) = {123,23,3} table printed");
  if (begin != std::string::npos && end != std::string::npos) {
    std::istringstream rows(text.substr(begin, end - begin));
    std::string line;
    std::getline(rows, line);
    std::getline(rows, line);
    int count = 0;
    bool all_four = true;
    bool star_row = false;
    while (std::getline(rows, line)) {
      std::istringstream cells(line);
      std::string psi0, star, m1;
      cells >> psi0 >> star >> m1;
      if (psi0.empty()) continue;
      ++count;
      all_four = all_four && m1 == "4";
      if (psi0 == "{123,23}") star_row = star == "{12,13,2*,23,3*}";
    }
    r.equal(count, 7, "m1 rows");
    r.expect(all_four, "every m1 entry is 4");
    r.expect(star_row, "Psi0 {123,23} has transversals {12,13,2,23,3} with minimal 2, 3");
  }
  return r;
}

// Second-order Reed-Muller code of length 32, built here by evaluating every
// monomial of degree <= 2 in five variables at the 32 points.
oracle::Mat reed_muller_2_5() {
  oracle::Mat rows;
  for (unsigned a = 0; a <= 5; ++a) {
    for (unsigned b = a; b <= 5; ++b) {
      // a == 5 / b == 5 stand for "no variable".
      if (a != 5 && a == b) continue;
      oracle::Vec v(32);
      for (unsigned x = 0; x < 32; ++x) {
        const bool fa = a == 5 || ((x >> a) & 1);
        const bool fb = b == 5 || ((x >> b) & 1);
        v[x] = fa && fb;
      }
      rows.push_back(v);
    }
  }
  return rows;
}

Result reed_muller() {
  Result r;
  const auto start = Clock::now();
  const auto f = build("rm32_16_8");
  if (!f.embedded_chains) {
    r.expect(false, "fixture has embedded chains");
    return r;
  }
  const auto params = embedded_params(f.embedded_chains->first, f.embedded_chains->second);
  r.equal(params.kappa, 16, "kappa");
  r.equal(params.delta, 8u, "delta");
  const auto code = construct(f.c, f.d);
  r.equal(code.length(), 32u, "n");
  r.equal(code.dimension(), 16u, "k");
  r.equal(code.min_distance().value(), 8u, "d");
  const auto rm = reed_muller_2_5();
  r.equal(oracle::rank(rm), 16u, "RM(2,5) oracle dimension");
  const auto expected = oracle::weight_distribution(rm, 32);
  r.expect(code.weight_distribution() == expected, "weight distribution equals RM(2,5) oracle");
  timed(r, start, 5.0);
  return r;
}

Result u_uplusv() {
  Result r;
  const auto* fixture = fixtures::find("u_uplusv");
  int agree = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto inst = fixture->build(seed);
    const auto& c1 = inst.c.code(1);
    const auto& c2 = inst.c.code(2);
    const std::size_t n = c1.length();
    const auto d1 = oracle::min_distance(oracle::to_mat(c1), n);
    const auto d2 = oracle::min_distance(oracle::to_mat(c2), n);
    const auto target = std::min(2 * d1, d2);

    // (u | u + v) built directly.
    oracle::Mat rows;
    for (const auto& u : oracle::to_mat(c1)) {
      auto row = u;
      row.insert(row.end(), u.begin(), u.end());
      rows.push_back(row);
    }
    for (const auto& v : oracle::to_mat(c2)) {
      oracle::Vec row(n, 0);
      row.insert(row.end(), v.begin(), v.end());
      rows.push_back(row);
    }
    const auto code = construct(inst.d, inst.c);
    const bool same_code = oracle::span(rows, 2 * n) == oracle::span(oracle::to_mat(code), 2 * n);
    const auto rep = analyze(inst.c, inst.d);
    const bool ok = same_code && rep.exact_distance == std::uint64_t{target} && rep.upper_bound == target &&
                    rep.lower_bound == std::uint64_t{target} &&
                    oracle::min_distance(oracle::to_mat(code), 2 * n) == target;
    if (ok) {
      ++agree;
    } else {
      r.expect(false, "seed " + std::to_string(seed) + ": target " + std::to_string(target) + ", exact " +
                          opt(rep.exact_distance) + ", upper " + std::to_string(rep.upper_bound) + ", lower " +
                          opt(rep.lower_bound) + (same_code ? "" : ", code differs from (u|u+v)"));
    }
  }
  r.equal(agree, 50, "trials with exact = min(2d1,d2) = upper = lower");
  return r;
}

Result properties() {
  Result r;
  const std::pair<const char*, property::Trial> suite[] = {
      {"(a) modular dimension", property::modular_dimension},
      {"(b) tensor intersection", property::tensor_intersection},
      {"(c) inclusion-exclusion", property::inclusion_exclusion},
      {"(d) product acyclicity", property::product_family_acyclic},
      {"(e) sandwich", property::sandwich},
      {"(f) embedded x acyclic equality", property::embedded_equality},
      {"(g) witness codeword", property::witness},
  };
  std::uint64_t seed = 7001;
  for (const auto& [name, trial] : suite) {
    const auto o = property::run(200, seed++, trial);
    r.expect(o.ok() && o.trials >= 200, std::string(name) + ": " + std::to_string(o.trials) + " trials, " +
                                            std::to_string(o.failures) + " failures" +
                                            (o.first_failure.empty() ? "" : " [" + o.first_failure + "]"));
  }
  return r;
}

Result example_all() {
  Result r;
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = cli::cmd_example({"all", 1, 50, default_budget, true, false}, out, err);
  r.equal(code, 0, "exit");
  std::size_t findings = 0, results = 0;
  try {
    const auto j = nlohmann::json::parse(out.str());
    for (const auto& item : j.at("results")) {
      ++results;
      findings += item.at("findings").size();
    }
  } catch (const std::exception& e) {
    r.expect(false, std::string("json: ") + e.what());
  }
  r.equal(findings, 0u, "verify findings");
  r.expect(results >= fixtures::all().size(), "results=" + std::to_string(results));
  timed(r, start, 60.0);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"Golay (24,12,8) reproduction", golay},
      {"(21,12,5) punctured example", punctured},
      {"(21,9,8) zero-intersection example", zero_intersection},
      {"(28,22,4) embedded chain", embedded_chain},
      {"(32,16,8) Reed-Muller", reed_muller},
      {"|u|u+v| over 50 random pairs", u_uplusv},
      {"property suite", properties},
      {"example all", example_all},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!selected.empty() && !selected.count(id)) continue;
    Result result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.expect(false, std::string("threw: ") + e.what());
    }
    std::cout << "criterion " << id << " " << (result.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
    for (const auto& n : result.notes) std::cout << "; " << n;
    std::cout << std::endl;
    failed += result.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
