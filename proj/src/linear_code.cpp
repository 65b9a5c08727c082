#include "fractal/linear_code.hpp"

#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "fractal/errors.hpp"

namespace fractal {

std::uint32_t Distance::value() const {
  if (is_infinite()) throw std::logic_error("value() of an infinite distance");
  return value_;
}

std::string Distance::to_string() const { return is_infinite() ? "INFINITE" : std::to_string(value_); }

struct LinearCode::DistanceCache {
  // 0 means not yet computed: a real distance is at least 1.
  std::atomic<std::uint32_t> raw{0};
};

LinearCode::LinearCode(BitMatrix canonical)
    : generator_(std::move(canonical)), cache_(std::make_shared<DistanceCache>()) {}

LinearCode LinearCode::from_rows(const BitMatrix& rows) {
  if (rows.col_count() == 0) throw DimensionMismatch("code length must be positive");
  return LinearCode(rref(rows).basis);
}

LinearCode LinearCode::zero(std::size_t length) { return from_rows(BitMatrix(length)); }

Distance LinearCode::min_distance(const EnumerationSettings& settings) const {
  if (auto known = cached_distance()) return *known;
  const std::uint32_t w = enumerate_min_weight(generator_, settings);
  const Distance d = w == kernels::no_nonzero_weight ? Distance::infinite() : Distance(w);
  // Concurrent first computations store the same value.
  cache_->raw.store(w, std::memory_order_release);
  return d;
}

Distance LinearCode::min_distance(std::uint64_t budget) const {
  EnumerationSettings settings;
  settings.budget = budget;
  return min_distance(settings);
}

std::optional<Distance> LinearCode::cached_distance() const {
  const std::uint32_t raw = cache_->raw.load(std::memory_order_acquire);
  if (raw == 0) return std::nullopt;
  return raw == kernels::no_nonzero_weight ? Distance::infinite() : Distance(raw);
}

std::vector<std::uint64_t> LinearCode::weight_distribution(const EnumerationSettings& settings) const {
  auto dist = enumerate_weight_distribution(generator_, settings);
  if (!cached_distance()) {
    std::uint32_t first = kernels::no_nonzero_weight;
    for (std::size_t w = 1; w < dist.size(); ++w) {
      if (dist[w] != 0) {
        first = static_cast<std::uint32_t>(w);
        break;
      }
    }
    cache_->raw.store(first, std::memory_order_release);
  }
  return dist;
}

BitVector LinearCode::min_weight_codeword(const EnumerationSettings& settings) const {
  if (is_zero()) throw FamilyError("the zero code has no nonzero codeword");
  const std::uint32_t target = min_distance(settings).value();
  check_budget(dimension(), settings.budget);
  BitVector cw(length());
  const std::uint64_t steps = std::uint64_t{1} << dimension();
  for (std::uint64_t t = 1; t < steps; ++t) {
    cw ^= generator_.row(static_cast<std::size_t>(std::countr_zero(t)));
    if (cw.weight() == target) return cw;
  }
  throw std::logic_error("minimum-weight codeword not found");
}

bool LinearCode::contains(const BitVector& v) const {
  if (v.size() != length()) {
    throw DimensionMismatch("vector length " + std::to_string(v.size()) + " vs code length " +
                            std::to_string(length()));
  }
  return reduce(v, generator_).is_zero();
}

bool LinearCode::contains(const LinearCode& sub) const {
  for (const auto& row : sub.generator().rows()) {
    if (!contains(row)) return false;
  }
  return true;
}

std::string LinearCode::params_string() const {
  auto d = cached_distance();
  return "(" + std::to_string(length()) + "," + std::to_string(dimension()) + "," +
         (d ? d->to_string() : std::string("?")) + ")";
}

LinearCode code_from_rows(const BitMatrix& rows) { return LinearCode::from_rows(rows); }

LinearCode tensor_product(const LinearCode& c, const LinearCode& d) {
  BitMatrix rows = kron_matrix(c.generator(), d.generator());
  return LinearCode::from_rows(rows);
}

LinearCode code_sum(const LinearCode& a, const LinearCode& b) {
  return LinearCode::from_rows(subspace_sum(a.generator(), b.generator()));
}

LinearCode code_intersection(const LinearCode& a, const LinearCode& b) {
  return LinearCode::from_rows(subspace_intersection(a.generator(), b.generator()));
}

LinearCode puncture(const LinearCode& c, std::size_t column) {
  if (column >= c.length()) {
    throw IndexOutOfRange("puncture column " + std::to_string(column) + " out of range for length " +
                          std::to_string(c.length()));
  }
  if (c.length() < 2) throw IndexOutOfRange("cannot puncture a code of length 1");
  BitMatrix rows(c.length() - 1);
  for (const auto& r : c.generator().rows()) rows.append_row(r.without(column));
  return LinearCode::from_rows(rows);
}

LinearCode universe(std::size_t n) {
  BitMatrix rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVector e(n);
    e.set(i);
    rows.append_row(std::move(e));
  }
  return LinearCode::from_rows(rows);
}

LinearCode even_weight(std::size_t n) {
  BitMatrix rows(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    BitVector v(n);
    v.set(i);
    v.set(i + 1);
    rows.append_row(std::move(v));
  }
  return LinearCode::from_rows(rows);
}

LinearCode repetition(std::size_t n) {
  BitVector ones(n);
  for (std::size_t i = 0; i < n; ++i) ones.set(i);
  BitMatrix rows(n);
  rows.append_row(std::move(ones));
  return LinearCode::from_rows(rows);
}

BitMatrix parse_rows(std::string_view text, std::optional<std::size_t> length) {
  std::vector<BitVector> rows;
  std::size_t line_no = 0;
  std::size_t first_line = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    BitVector row;
    try {
      row = BitVector::from_string(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, e.column());
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has length " + std::to_string(row.size()) + ", expected " +
                           std::to_string(rows.front().size()) + " (as on line " + std::to_string(first_line) + ")",
                       line_no, 1);
    }
    if (length && row.size() != *length) {
      throw ParseError("row has length " + std::to_string(row.size()) + ", expected " + std::to_string(*length),
                       line_no, 1);
    }
    if (rows.empty()) first_line = line_no;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    if (!length) throw ParseError("no generator rows and no length given");
    return BitMatrix(*length);
  }
  return BitMatrix::from_rows(std::move(rows));
}

LinearCode from_text(std::string_view text, std::optional<std::size_t> length) {
  return LinearCode::from_rows(parse_rows(text, length));
}

LinearCode from_text(const std::vector<std::string>& lines) {
  std::string joined;
  for (const auto& l : lines) {
    joined += l;
    joined += '\n';
  }
  return from_text(joined);
}

}  // namespace fractal
