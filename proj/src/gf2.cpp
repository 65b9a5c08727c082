#include "fractal/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "fractal/errors.hpp"

namespace fractal {

namespace {

void check_index(std::size_t i, std::size_t length) {
  if (i >= length) {
    throw IndexOutOfRange("bit index " + std::to_string(i) + " out of range for length " +
                          std::to_string(length));
  }
}

void check_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": lengths " + std::to_string(a) + " and " +
                            std::to_string(b) + " differ");
  }
}

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVector BitVector::from_string(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '1':
        v.set(i);
        break;
      case '0':
      case '.':
        break;
      default:
        throw ParseError(std::string("illegal character '") + text[i] + "' in bit string", 0, i + 1);
    }
  }
  return v;
}

bool BitVector::get(std::size_t i) const {
  check_index(i, length_);
  return (words_[i / word_bits] >> (i % word_bits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
  check_index(i, length_);
  const word_type mask = word_type{1} << (i % word_bits);
  if (value) {
    words_[i / word_bits] |= mask;
  } else {
    words_[i / word_bits] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) {
  check_index(i, length_);
  words_[i / word_bits] ^= word_type{1} << (i % word_bits);
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (word_type word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

std::optional<std::size_t> BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_length(length_, other.length_, "xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_length(length_, other.length_, "and");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVector BitVector::without(std::size_t column) const {
  check_index(column, length_);
  BitVector out(length_ - 1);
  for (std::size_t i = 0, j = 0; i < length_; ++i) {
    if (i == column) continue;
    if (get(i)) out.set(j);
    ++j;
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  return a.to_string() <=> b.to_string();
}

BitMatrix::BitMatrix(std::size_t col_count, std::vector<BitVector> rows) : cols_(col_count) {
  rows_.reserve(rows.size());
  for (auto& r : rows) append_row(std::move(r));
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  if (rows.empty()) return BitMatrix(0);
  const std::size_t cols = rows.front().size();
  return BitMatrix(cols, std::move(rows));
}

BitMatrix BitMatrix::from_strings(std::size_t col_count, const std::vector<std::string>& rows) {
  BitMatrix m(col_count);
  for (const auto& r : rows) m.append_row(BitVector::from_string(r));
  return m;
}

void BitMatrix::append_row(BitVector row) {
  check_same_length(row.size(), cols_, "matrix row");
  rows_.push_back(std::move(row));
}

void BitMatrix::append_rows(const BitMatrix& other) {
  check_same_length(other.cols_, cols_, "matrix rows");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

bool BitMatrix::is_canonical() const {
  std::optional<std::size_t> previous;
  std::vector<std::size_t> pivots;
  pivots.reserve(rows_.size());
  for (const auto& r : rows_) {
    auto p = r.first_set();
    if (!p || (previous && *p <= *previous)) return false;
    previous = p;
    pivots.push_back(*p);
  }
  // Each pivot column must be clear in every other row.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (i != j && rows_[j].get(pivots[i])) return false;
    }
  }
  return true;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

EchelonForm rref(const BitMatrix& m) {
  std::vector<BitVector> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < m.col_count() && top < rows.size(); ++col) {
    std::size_t pick = top;
    while (pick < rows.size() && !rows[pick].get(col)) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[top], rows[pick]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != top && rows[r].get(col)) rows[r] ^= rows[top];
    }
    pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  EchelonForm out;
  out.basis = BitMatrix(m.col_count(), std::move(rows));
  out.rank = top;
  out.pivots = std::move(pivots);
  return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitVector reduce(BitVector v, const BitMatrix& canonical_basis) {
  check_same_length(v.size(), canonical_basis.col_count(), "reduce");
  for (const auto& row : canonical_basis.rows()) {
    // Canonical rows are never zero, so first_set() is engaged.
    if (v.get(*row.first_set())) v ^= row;
  }
  return v;
}

bool member(const BitVector& v, const BitMatrix& basis) {
  check_same_length(v.size(), basis.col_count(), "member");
  if (basis.is_canonical()) return reduce(v, basis).is_zero();
  return reduce(v, rref(basis).basis).is_zero();
}

BitMatrix subspace_sum(const BitMatrix& a, const BitMatrix& b) {
  check_same_length(a.col_count(), b.col_count(), "subspace_sum");
  BitMatrix stacked = a;
  stacked.append_rows(b);
  return rref(stacked).basis;
}

BitMatrix subspace_intersection(const BitMatrix& a, const BitMatrix& b) {
  check_same_length(a.col_count(), b.col_count(), "subspace_intersection");
  const std::size_t n = a.col_count();

  // Zassenhaus: rows [x | x] for x in a, [y | 0] for y in b. After elimination
  // the rows whose left half vanishes carry a basis of the intersection.
  BitMatrix block(2 * n);
  for (const auto& x : a.rows()) {
    BitVector row(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x.get(i)) {
        row.set(i);
        row.set(n + i);
      }
    }
    block.append_row(std::move(row));
  }
  for (const auto& y : b.rows()) {
    BitVector row(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (y.get(i)) row.set(i);
    }
    block.append_row(std::move(row));
  }

  BitMatrix meet(n);
  const EchelonForm reduced = rref(block);
  for (const auto& row : reduced.basis.rows()) {
    if (*row.first_set() < n) continue;
    BitVector right(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (row.get(n + i)) right.set(i);
    }
    meet.append_row(std::move(right));
  }
  return rref(meet).basis;
}

BitVector kron(const BitVector& a, const BitVector& b) {
  const std::size_t nb = b.size();
  BitVector out(a.size() * nb);
  std::vector<std::size_t> b_bits;
  for (std::size_t j = 0; j < nb; ++j) {
    if (b.get(j)) b_bits.push_back(j);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.get(i)) continue;
    for (std::size_t j : b_bits) out.set(i * nb + j);
  }
  return out;
}

BitMatrix kron_matrix(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.col_count() * b.col_count());
  for (const auto& x : a.rows()) {
    for (const auto& y : b.rows()) out.append_row(kron(x, y));
  }
  return out;
}

BitVector transpose_coordinates(const BitVector& v, std::size_t rows, std::size_t cols) {
  check_same_length(v.size(), rows * cols, "transpose_coordinates");
  BitVector out(v.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (v.get(r * cols + c)) out.set(c * rows + r);
    }
  }
  return out;
}

}  // namespace fractal
