#pragma once

// Brute-force references for the tests. Nothing here calls into the library
// except to copy bits in and out through BitVector::get / set.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fractal/gf2.hpp"
#include "fractal/linear_code.hpp"
#include "fractal/subspace_family.hpp"

namespace oracle {

using Vec = std::vector<std::uint8_t>;
using Mat = std::vector<Vec>;

inline Vec to_vec(const fractal::BitVector& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i) ? 1 : 0;
  return out;
}

inline Mat to_mat(const fractal::BitMatrix& m) {
  Mat out;
  for (const auto& r : m.rows()) out.push_back(to_vec(r));
  return out;
}

inline Mat to_mat(const fractal::LinearCode& c) { return to_mat(c.generator()); }

inline fractal::BitVector to_bits(const Vec& v) {
  fractal::BitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) out.set(i);
  }
  return out;
}

inline fractal::BitMatrix to_bits(const Mat& m, std::size_t n) {
  fractal::BitMatrix out(n);
  for (const auto& r : m) out.append_row(to_bits(r));
  return out;
}

inline std::size_t weight(const Vec& v) {
  std::size_t w = 0;
  for (auto b : v) w += b;
  return w;
}

inline std::size_t rank(Mat m) {
  std::size_t r = 0;
  const std::size_t n = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.size() && !m[pivot][col]) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != r && m[i][col]) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] ^= m[r][j];
      }
    }
    ++r;
  }
  return r;
}

/// Every codeword, by summing each subset of rows.
inline std::set<Vec> span(const Mat& rows, std::size_t n) {
  std::set<Vec> out;
  const std::uint64_t count = std::uint64_t{1} << rows.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    Vec v(n, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if ((m >> r) & 1) {
        for (std::size_t j = 0; j < n; ++j) v[j] ^= rows[r][j];
      }
    }
    out.insert(std::move(v));
  }
  return out;
}

inline std::size_t log2_exact(std::size_t count) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < count) ++k;
  return k;
}

/// Double loop over messages and rows; 0 for the zero code.
inline std::size_t min_distance(const Mat& rows, std::size_t n) {
  std::size_t best = 0;
  const std::uint64_t count = std::uint64_t{1} << rows.size();
  for (std::uint64_t m = 1; m < count; ++m) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::uint8_t bit = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if ((m >> r) & 1) bit ^= rows[r][j];
      }
      w += bit;
    }
    if (w > 0 && (best == 0 || w < best)) best = w;
  }
  return best;
}

inline std::vector<std::uint64_t> weight_distribution(const Mat& rows, std::size_t n) {
  std::vector<std::uint64_t> out(n + 1, 0);
  for (const auto& v : span(rows, n)) ++out[weight(v)];
  return out;
}

inline std::set<Vec> intersect(const std::set<Vec>& a, const std::set<Vec>& b) {
  std::set<Vec> out;
  for (const auto& v : a) {
    if (b.count(v)) out.insert(v);
  }
  return out;
}

/// Bit (i * |b| + j) = a_i b_j.
inline Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] & b[j];
  }
  return out;
}

/// Span of all x (x) y.
inline Mat kron_rows(const Mat& a, const Mat& b) {
  Mat out;
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(kron(x, y));
  }
  return out;
}

inline Mat random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t n) {
  std::bernoulli_distribution bit(0.5);
  Mat out(rows, Vec(n, 0));
  for (auto& r : out) {
    for (auto& b : r) b = bit(rng) ? 1 : 0;
  }
  return out;
}

/// Nonzero code with up to `max_rows` random generators.
inline fractal::LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t max_rows) {
  std::uniform_int_distribution<std::size_t> rows(1, max_rows);
  for (;;) {
    auto c = fractal::LinearCode::from_rows(to_bits(random_rows(rng, rows(rng), n), n));
    if (!c.is_zero()) return c;
  }
}

/// Random nonzero subcode of `c`: a random subset of combinations of its rows.
inline fractal::LinearCode random_subcode(std::mt19937_64& rng, const fractal::LinearCode& c) {
  const auto& g = c.generator();
  std::uniform_int_distribution<std::size_t> count(1, g.row_count());
  std::bernoulli_distribution bit(0.5);
  for (;;) {
    fractal::BitMatrix rows(c.length());
    const std::size_t picks = count(rng);
    for (std::size_t p = 0; p < picks; ++p) {
      fractal::BitVector v(c.length());
      for (const auto& r : g.rows()) {
        if (bit(rng)) v ^= r;
      }
      rows.append_row(v);
    }
    auto sub = fractal::LinearCode::from_rows(rows);
    if (!sub.is_zero()) return sub;
  }
}

/// Increasing chain C_1 <= ... <= C_s built top-down by random subcodes.
inline fractal::CodeFamily random_chain(std::mt19937_64& rng, std::size_t n, std::size_t s, std::size_t max_rows) {
  std::vector<fractal::LinearCode> codes{random_code(rng, n, max_rows)};
  while (codes.size() < s) codes.insert(codes.begin(), random_subcode(rng, codes.front()));
  return fractal::CodeFamily(codes);
}

/// Acyclic family: a random chain (either direction) or a random pair.
inline fractal::CodeFamily random_acyclic(std::mt19937_64& rng, std::size_t n, std::size_t s, std::size_t max_rows) {
  if (s == 2 && std::bernoulli_distribution(0.5)(rng)) {
    return fractal::CodeFamily({random_code(rng, n, max_rows), random_code(rng, n, max_rows)});
  }
  auto chain = random_chain(rng, n, s, max_rows);
  return std::bernoulli_distribution(0.5)(rng) ? chain : chain.reversed();
}

/// Inclusion-exclusion over all intersections, each dimension counted by span size.
inline long long inclusion_exclusion(const fractal::CodeFamily& f) {
  const std::size_t n = f.length();
  std::vector<std::set<Vec>> spans;
  for (const auto& c : f.codes()) spans.push_back(span(to_mat(c), n));
  long long total = 0;
  for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
    std::set<Vec> meet;
    bool first = true;
    int members = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!((mask >> i) & 1)) continue;
      ++members;
      meet = first ? spans[i] : intersect(meet, spans[i]);
      first = false;
    }
    const long long dim = static_cast<long long>(log2_exact(meet.size()));
    total += (members % 2 == 1) ? dim : -dim;
  }
  return total;
}

inline std::size_t sum_dimension(const fractal::CodeFamily& f) {
  Mat all;
  for (const auto& c : f.codes()) {
    for (auto& r : to_mat(c)) all.push_back(std::move(r));
  }
  return rank(all);
}

}  // namespace oracle
