#include "fractal/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "fractal/errors.hpp"

namespace fractal {

using nlohmann::json;

namespace {

constexpr const char* not_applicable = "NOT-APPLICABLE";
constexpr const char* skipped = "SKIPPED";
constexpr const char* infinite = "INFINITE";

json distance_json(Distance d) { return d.is_infinite() ? json(infinite) : json(d.value()); }

Distance distance_from(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != infinite) throw ParseError("bad distance value " + j.dump());
    return Distance::infinite();
  }
  return Distance(j.get<std::uint32_t>());
}

json indexes_json(const std::vector<MultiIndex>& v) {
  json arr = json::array();
  for (const auto& a : v) arr.push_back(a.members());
  return arr;
}

std::vector<MultiIndex> indexes_from(const json& j) {
  std::vector<MultiIndex> out;
  for (const auto& e : j) out.push_back(MultiIndex::of(e.get<std::vector<std::size_t>>()));
  return out;
}

json lattice_json(const LatticeEntry& e) {
  return {{"k_cap", e.k_cap}, {"k_sum", e.k_sum}, {"d_cap", distance_json(e.d_cap)}, {"d_sum", distance_json(e.d_sum)}};
}

LatticeEntry lattice_from(const json& j) {
  LatticeEntry e;
  e.k_cap = j.at("k_cap").get<std::size_t>();
  e.k_sum = j.at("k_sum").get<std::size_t>();
  e.d_cap = distance_from(j.at("d_cap"));
  e.d_sum = distance_from(j.at("d_sum"));
  return e;
}

json term_json(const LowerBoundTerm& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"psi0", indexes_json(r.psi0)},
                    {"psi0_star", indexes_json(r.psi0_star)},
                    {"minimal", indexes_json(r.minimal)},
                    {"tag_side_max", r.tag_side_max},
                    {"transversal_max", r.transversal_max},
                    {"value", r.value}});
  }
  return {{"tags", indexes_json(t.tags)}, {"rows", rows}, {"value", t.value}};
}

LowerBoundTerm term_from(const json& j) {
  LowerBoundTerm t;
  t.tags = indexes_from(j.at("tags"));
  t.value = j.at("value").get<std::uint64_t>();
  for (const auto& r : j.at("rows")) {
    LowerBoundRow row;
    row.psi0 = indexes_from(r.at("psi0"));
    row.psi0_star = indexes_from(r.at("psi0_star"));
    row.minimal = indexes_from(r.at("minimal"));
    row.tag_side_max = r.at("tag_side_max").get<std::uint32_t>();
    row.transversal_max = r.at("transversal_max").get<std::uint32_t>();
    row.value = r.at("value").get<std::uint64_t>();
    t.rows.push_back(std::move(row));
  }
  return t;
}

template <typename T>
json optional_json(const std::optional<T>& v, const char* absent) {
  return v ? json(*v) : json(absent);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* absent) {
  if (j.is_string()) {
    if (j.get<std::string>() != absent) throw ParseError("expected a number or " + std::string(absent));
    return std::nullopt;
  }
  return j.get<T>();
}

std::string set_text(const std::vector<MultiIndex>& v, const std::vector<MultiIndex>& marked = {}) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ',';
    s += v[i].to_string();
    if (std::find(marked.begin(), marked.end(), v[i]) != marked.end()) s += '*';
  }
  return s + "}";
}

}  // namespace

json to_json(const AnalysisReport& r) {
  json table = json::array();
  for (const auto& row : r.per_alpha_table) {
    table.push_back({{"alpha", row.alpha.members()}, {"c", lattice_json(row.c)}, {"d", lattice_json(row.d)}});
  }
  json j = {
      {"n", r.n},
      {"n'", r.n_prime},
      {"s", r.s},
      {"kappa_formula", optional_json(r.kappa_formula, not_applicable)},
      {"rank", r.rank},
      {"upper_bound", r.upper_bound},
      {"lower_bound", optional_json(r.lower_bound, not_applicable)},
      {"exact_distance", optional_json(r.exact_distance, skipped)},
      {"exact_source", std::string(to_string(r.exact_source))},
      {"c_acyclic", r.c_acyclic},
      {"d_acyclic", r.d_acyclic},
      {"c_embedded", r.c_embedded},
      {"d_embedded", r.d_embedded},
      {"c_degenerate_chain", r.c_degenerate_chain},
      {"d_degenerate_chain", r.d_degenerate_chain},
      {"theorem_b_applies", r.theorem_b_applies},
      {"bounds_coincide", r.bounds_coincide},
      {"per_alpha_table", table},
      {"upper_witness",
       {{"side", std::string(to_string(r.upper_witness.side))},
        {"alpha", r.upper_witness.alpha.members()},
        {"first_distance", r.upper_witness.first_distance},
        {"second_distance", r.upper_witness.second_distance}}},
      {"diagnostics", r.diagnostics},
  };
  if (r.lower_terms) {
    j["lower_terms"] = {{"psi_e", term_json(r.lower_terms->first)}, {"psi_g", term_json(r.lower_terms->second)}};
  } else {
    j["lower_terms"] = not_applicable;
  }
  return j;
}

AnalysisReport report_from_json(const json& j) {
  try {
    AnalysisReport r;
    r.n = j.at("n").get<std::size_t>();
    r.n_prime = j.at("n'").get<std::size_t>();
    r.s = j.at("s").get<std::size_t>();
    r.kappa_formula = optional_from<long long>(j.at("kappa_formula"), not_applicable);
    r.rank = j.at("rank").get<std::size_t>();
    r.upper_bound = j.at("upper_bound").get<std::uint64_t>();
    r.lower_bound = optional_from<std::uint64_t>(j.at("lower_bound"), not_applicable);
    r.exact_distance = optional_from<std::uint64_t>(j.at("exact_distance"), skipped);
    const auto source = j.at("exact_source").get<std::string>();
    r.exact_source = source == "enumeration" ? ExactSource::enumeration
                     : source == "theorem_b" ? ExactSource::theorem_b
                                             : ExactSource::skipped;
    r.c_acyclic = j.at("c_acyclic").get<bool>();
    r.d_acyclic = j.at("d_acyclic").get<bool>();
    r.c_embedded = j.at("c_embedded").get<bool>();
    r.d_embedded = j.at("d_embedded").get<bool>();
    r.c_degenerate_chain = j.at("c_degenerate_chain").get<bool>();
    r.d_degenerate_chain = j.at("d_degenerate_chain").get<bool>();
    r.theorem_b_applies = j.at("theorem_b_applies").get<bool>();
    r.bounds_coincide = j.at("bounds_coincide").get<bool>();
    for (const auto& row : j.at("per_alpha_table")) {
      AlphaRow a;
      a.alpha = MultiIndex::of(row.at("alpha").get<std::vector<std::size_t>>());
      a.c = lattice_from(row.at("c"));
      a.d = lattice_from(row.at("d"));
      r.per_alpha_table.push_back(a);
    }
    const auto& w = j.at("upper_witness");
    r.upper_witness.side = w.at("side").get<std::string>() == "second_intersection"
                               ? UpperBoundWitness::Side::second_intersection
                               : UpperBoundWitness::Side::first_intersection;
    r.upper_witness.alpha = MultiIndex::of(w.at("alpha").get<std::vector<std::size_t>>());
    r.upper_witness.first_distance = w.at("first_distance").get<std::uint32_t>();
    r.upper_witness.second_distance = w.at("second_distance").get<std::uint32_t>();
    r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    if (const auto& lt = j.at("lower_terms"); lt.is_object()) {
      r.lower_terms = LowerBoundTerms{term_from(lt.at("psi_e")), term_from(lt.at("psi_g"))};
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

json to_json(const std::vector<Finding>& findings) {
  json arr = json::array();
  for (const auto& f : findings) arr.push_back({{"kind", std::string(to_string(f.kind))}, {"message", f.message}});
  return arr;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto line = [&](const std::string& key, const std::string& value) {
    out << "  " << std::left << std::setw(20) << key << value << '\n';
  };
  auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };
  auto opt = [](const auto& v, const char* absent) { return v ? std::to_string(*v) : std::string(absent); };

  out << "fractal code report\n";
  line("n", std::to_string(r.n));
  line("n'", std::to_string(r.n_prime));
  line("s", std::to_string(r.s));
  line("length", std::to_string(r.n * r.n_prime));
  line("rank", std::to_string(r.rank));
  line("kappa_formula", opt(r.kappa_formula, not_applicable));
  line("upper_bound", std::to_string(r.upper_bound));
  line("lower_bound", opt(r.lower_bound, not_applicable));
  line("exact_distance", opt(r.exact_distance, skipped) + " (" + std::string(to_string(r.exact_source)) + ")");
  line("c_acyclic", yes_no(r.c_acyclic));
  line("d_acyclic", yes_no(r.d_acyclic));
  line("c_embedded", yes_no(r.c_embedded) + (r.c_degenerate_chain ? " (degenerate chain)" : ""));
  line("d_embedded", yes_no(r.d_embedded) + (r.d_degenerate_chain ? " (degenerate chain)" : ""));
  line("theorem_b_applies", yes_no(r.theorem_b_applies));
  line("bounds_coincide", yes_no(r.bounds_coincide));
  line("upper_witness", std::string(to_string(r.upper_witness.side)) + " alpha=" + r.upper_witness.alpha.to_string() +
                            " " + std::to_string(r.upper_witness.first_distance) + "*" +
                            std::to_string(r.upper_witness.second_distance));
  for (const auto& d : r.diagnostics) line("diagnostic", d);

  out << "\n  per-alpha lattice (first family | second family)\n";
  out << "  " << std::left << std::setw(8) << "alpha" << std::right << std::setw(6) << "k_a" << std::setw(6) << "k^a"
      << std::setw(10) << "d_a" << std::setw(6) << "d^a" << "  |" << std::setw(6) << "k'_a" << std::setw(6) << "k'^a"
      << std::setw(10) << "d'_a" << std::setw(6) << "d'^a" << '\n';
  for (const auto& row : r.per_alpha_table) {
    out << "  " << std::left << std::setw(8) << row.alpha.to_string() << std::right << std::setw(6) << row.c.k_cap
        << std::setw(6) << row.c.k_sum << std::setw(10) << row.c.d_cap.to_string() << std::setw(6)
        << row.c.d_sum.to_string() << "  |" << std::setw(6) << row.d.k_cap << std::setw(6) << row.d.k_sum
        << std::setw(10) << row.d.d_cap.to_string() << std::setw(6) << row.d.d_sum.to_string() << '\n';
  }
  return out.str();
}

std::string render_lower_bound_table(const AnalysisReport& r) {
  if (!r.lower_terms) return "lower bound table: NOT-APPLICABLE (a family is not acyclic)\n";
  std::ostringstream out;
  auto block = [&](const LowerBoundTerm& term, const char* tag_name, const char* column) {
    std::size_t w0 = 6;
    std::size_t w1 = 7;
    for (const auto& row : term.rows) {
      w0 = std::max(w0, set_text(row.psi0).size());
      w1 = std::max(w1, set_text(row.psi0_star, row.minimal).size());
    }
    out << "Psi(" << tag_name << ") = " << set_text(term.tags) << '\n';
    out << "  " << std::left << std::setw(static_cast<int>(w0 + 2)) << "Psi0" << std::setw(static_cast<int>(w1 + 2))
        << "Psi0*" << column << '\n';
    for (const auto& row : term.rows) {
      out << "  " << std::left << std::setw(static_cast<int>(w0 + 2)) << set_text(row.psi0)
          << std::setw(static_cast<int>(w1 + 2)) << set_text(row.psi0_star, row.minimal) << row.value
          << (row.value == term.value ? " <" : "") << '\n';
    }
    out << "  min = " << term.value << "\n\n";
  };
  block(r.lower_terms->first, "e", "m1");
  block(r.lower_terms->second, "g", "m2");
  out << "lower bound = max(" << r.lower_terms->first.value << "," << r.lower_terms->second.value
      << ") = " << r.lower_terms->value() << '\n';
  return out.str();
}

std::string render_findings(const std::vector<Finding>& findings) {
  if (findings.empty()) return "verify: no findings\n";
  std::string s = "verify: " + std::to_string(findings.size()) + " finding(s)\n";
  for (const auto& f : findings) s += "  [" + std::string(to_string(f.kind)) + "] " + f.message + '\n';
  return s;
}

}  // namespace fractal
