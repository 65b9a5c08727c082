#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fractal {

/// Packed vector over GF(2). Bit 0 is the leftmost character of the textual
/// form; bit i lives in word i / 64 at position i % 64. Padding bits past
/// size() are always zero.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Parses '0'/'1', with '.' accepted as '0'. Throws ParseError on anything else.
  static BitVector from_string(std::string_view text);

  static constexpr std::size_t words_for(std::size_t length) {
    return (length + word_bits - 1) / word_bits;
  }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  std::optional<std::size_t> first_set() const noexcept;

  std::span<const word_type> words() const noexcept { return words_; }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  BitVector& operator&=(const BitVector& other);

  /// Copy of this vector with one coordinate removed.
  BitVector without(std::size_t column) const;

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  friend class BitMatrix;

  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

/// Row-major matrix over GF(2); every row has col_count() bits.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t col_count) : cols_(col_count) {}
  BitMatrix(std::size_t col_count, std::vector<BitVector> rows);

  /// Column count taken from the first row; throws DimensionMismatch on ragged rows.
  static BitMatrix from_rows(std::vector<BitVector> rows);
  static BitMatrix from_strings(std::size_t col_count, const std::vector<std::string>& rows);

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_.empty(); }

  const std::vector<BitVector>& rows() const noexcept { return rows_; }
  const BitVector& row(std::size_t i) const { return rows_.at(i); }

  void append_row(BitVector row);
  void append_rows(const BitMatrix& other);

  /// True when rows are in reduced row-echelon form with no zero rows.
  bool is_canonical() const;

  std::string to_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct EchelonForm {
  BitMatrix basis;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

EchelonForm rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// Residue of v after elimination by the pivots of a canonical basis.
BitVector reduce(BitVector v, const BitMatrix& canonical_basis);

/// Row-space membership. A non-canonical basis is canonicalized first.
bool member(const BitVector& v, const BitMatrix& basis);

/// Canonical basis of the sum of two row spaces.
BitMatrix subspace_sum(const BitMatrix& a, const BitMatrix& b);

/// Canonical basis of the intersection of two row spaces (Zassenhaus).
BitMatrix subspace_intersection(const BitMatrix& a, const BitMatrix& b);

/// Kronecker product: bit (i * b.size() + j) = a_i AND b_j.
BitVector kron(const BitVector& a, const BitVector& b);

/// All pairwise row products, ordered (row of a) major, (row of b) minor.
BitMatrix kron_matrix(const BitMatrix& a, const BitMatrix& b);

/// Reorders coordinates of a length rows*cols vector from row-major
/// (r * cols + c) to column-major (c * rows + r).
BitVector transpose_coordinates(const BitVector& v, std::size_t rows, std::size_t cols);

}  // namespace fractal
