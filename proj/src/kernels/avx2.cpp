// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <array>
#include <bit>

#include "fractal/kernels.hpp"

namespace fractal::kernels::detail {

namespace {

constexpr std::size_t lanes = 4;
constexpr std::size_t max_words = 8;

// Per-64-bit-lane popcount: nibble lookup, then horizontal byte sums.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

struct LaneState {
  __m256i words[max_words];
  std::size_t word_count;

  void load(const GrayScan& scan, std::size_t first_start) {
    word_count = scan.words;
    for (std::size_t w = 0; w < word_count; ++w) {
      const auto* base = scan.starts.data() + first_start * scan.words + w;
      words[w] = _mm256_setr_epi64x(static_cast<long long>(base[0]),
                                    static_cast<long long>(base[scan.words]),
                                    static_cast<long long>(base[2 * scan.words]),
                                    static_cast<long long>(base[3 * scan.words]));
    }
  }

  void apply(const std::uint64_t* row) {
    for (std::size_t w = 0; w < word_count; ++w) {
      words[w] = _mm256_xor_si256(words[w], _mm256_set1_epi64x(static_cast<long long>(row[w])));
    }
  }

  __m256i weights() const {
    __m256i total = popcount_epi64(words[0]);
    for (std::size_t w = 1; w < word_count; ++w) total = _mm256_add_epi64(total, popcount_epi64(words[w]));
    return total;
  }
};

// Starts that do not fill a full vector go through the scalar kernel.
GrayScan tail_of(const GrayScan& scan, std::size_t first_start) {
  GrayScan tail = scan;
  tail.starts = scan.starts.subspan(first_start * scan.words);
  return tail;
}

}  // namespace

std::uint32_t min_nonzero_weight_avx2(const GrayScan& scan) {
  if (scan.words > max_words) return min_nonzero_weight_scalar(scan);
  const std::size_t full = scan.start_count() / lanes * lanes;
  const std::uint64_t steps = std::uint64_t{1} << scan.gray_bits;
  const __m256i zero = _mm256_setzero_si256();
  __m256i best = _mm256_set1_epi32(-1);

  LaneState state;
  for (std::size_t s = 0; s < full; s += lanes) {
    state.load(scan, s);
    for (std::uint64_t t = 0; t < steps; ++t) {
      if (t != 0) state.apply(scan.gray_rows.data() + std::countr_zero(t) * scan.words);
      const __m256i w = state.weights();
      // Zero codewords are masked to all-ones so they never win the min.
      const __m256i masked = _mm256_or_si256(w, _mm256_cmpeq_epi64(w, zero));
      best = _mm256_min_epu32(best, masked);
    }
  }

  alignas(32) std::array<std::uint32_t, 8> out;
  _mm256_store_si256(reinterpret_cast<__m256i*>(out.data()), best);
  std::uint32_t result = no_nonzero_weight;
  for (std::size_t lane = 0; lane < lanes; ++lane) result = std::min(result, out[2 * lane]);
  if (full < scan.start_count()) result = std::min(result, min_nonzero_weight_scalar(tail_of(scan, full)));
  return result;
}

void accumulate_weights_avx2(const GrayScan& scan, std::span<std::uint64_t> histogram) {
  if (scan.words > max_words) {
    accumulate_weights_scalar(scan, histogram);
    return;
  }
  const std::size_t full = scan.start_count() / lanes * lanes;
  const std::uint64_t steps = std::uint64_t{1} << scan.gray_bits;

  LaneState state;
  alignas(32) std::array<std::uint64_t, lanes> out;
  for (std::size_t s = 0; s < full; s += lanes) {
    state.load(scan, s);
    for (std::uint64_t t = 0; t < steps; ++t) {
      if (t != 0) state.apply(scan.gray_rows.data() + std::countr_zero(t) * scan.words);
      _mm256_store_si256(reinterpret_cast<__m256i*>(out.data()), state.weights());
      ++histogram[out[0]];
      ++histogram[out[1]];
      ++histogram[out[2]];
      ++histogram[out[3]];
    }
  }
  if (full < scan.start_count()) accumulate_weights_scalar(tail_of(scan, full), histogram);
}

}  // namespace fractal::kernels::detail
