#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fractal/gf2.hpp"
#include "fractal/weight_enumeration.hpp"

namespace fractal {

/// Minimum distance of a code. The zero code has the distinguished value
/// infinite(), which orders after every finite distance.
class Distance {
 public:
  constexpr explicit Distance(std::uint32_t value) : value_(value) {}

  static constexpr Distance infinite() { return Distance(infinite_raw); }

  constexpr bool is_infinite() const noexcept { return value_ == infinite_raw; }

  /// Throws std::logic_error for infinite().
  std::uint32_t value() const;

  std::string to_string() const;

  friend constexpr auto operator<=>(Distance, Distance) = default;

 private:
  static constexpr std::uint32_t infinite_raw = UINT32_MAX;
  std::uint32_t value_;
};

/// Binary linear code: length plus canonical (RREF) generator. Copies share
/// the lazily computed distance, so a distance is enumerated at most once
/// per row space no matter how many copies exist.
class LinearCode {
 public:
  /// Canonicalizes rows; throws DimensionMismatch on ragged rows.
  static LinearCode from_rows(const BitMatrix& rows);
  static LinearCode zero(std::size_t length);

  std::size_t length() const noexcept { return generator_.col_count(); }
  std::size_t dimension() const noexcept { return generator_.row_count(); }
  bool is_zero() const noexcept { return generator_.empty(); }
  const BitMatrix& generator() const noexcept { return generator_; }

  /// Exact minimum distance by Gray-code enumeration; cached after first use.
  Distance min_distance(const EnumerationSettings& settings = {}) const;
  Distance min_distance(std::uint64_t budget) const;
  std::optional<Distance> cached_distance() const;

  /// A_0..A_n; sums to 2^k.
  std::vector<std::uint64_t> weight_distribution(const EnumerationSettings& settings = {}) const;

  /// First codeword of minimum weight in Gray order. Throws FamilyError for the zero code.
  BitVector min_weight_codeword(const EnumerationSettings& settings = {}) const;

  bool contains(const BitVector& v) const;
  bool contains(const LinearCode& sub) const;

  /// "(n,k,d)" with d taken from the cache or "?" when not yet computed.
  std::string params_string() const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.generator_ == b.generator_; }

 private:
  struct DistanceCache;

  explicit LinearCode(BitMatrix canonical);

  BitMatrix generator_;
  std::shared_ptr<DistanceCache> cache_;
};

LinearCode code_from_rows(const BitMatrix& rows);

/// Generator rref(kron_matrix(G_c, G_d)); length n n', dimension k k'.
LinearCode tensor_product(const LinearCode& c, const LinearCode& d);

LinearCode code_sum(const LinearCode& a, const LinearCode& b);
LinearCode code_intersection(const LinearCode& a, const LinearCode& b);

/// Deletes one coordinate. Requires length >= 2.
LinearCode puncture(const LinearCode& c, std::size_t column);

LinearCode universe(std::size_t n);
LinearCode even_weight(std::size_t n);
LinearCode repetition(std::size_t n);

/// One generator row per line: '0'/'1', '.' accepted as '0'. Blank lines are
/// ignored. `length` is required when there are no rows.
BitMatrix parse_rows(std::string_view text, std::optional<std::size_t> length = std::nullopt);
LinearCode from_text(std::string_view text, std::optional<std::size_t> length = std::nullopt);
LinearCode from_text(const std::vector<std::string>& lines);

}  // namespace fractal
