#include <arm_neon.h>

#include <algorithm>
#include <array>
#include <bit>

#include "fractal/kernels.hpp"

namespace fractal::kernels::detail {

namespace {

constexpr std::size_t lanes = 2;
constexpr std::size_t max_words = 8;

inline uint64x2_t popcount_u64(uint64x2_t v) {
  return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

struct LaneState {
  std::array<uint64x2_t, max_words> words;
  std::size_t word_count;

  void load(const GrayScan& scan, std::size_t first_start) {
    word_count = scan.words;
    for (std::size_t w = 0; w < word_count; ++w) {
      const auto* base = scan.starts.data() + first_start * scan.words + w;
      const std::uint64_t pair[lanes] = {base[0], base[scan.words]};
      words[w] = vld1q_u64(pair);
    }
  }

  void apply(const std::uint64_t* row) {
    for (std::size_t w = 0; w < word_count; ++w) words[w] = veorq_u64(words[w], vdupq_n_u64(row[w]));
  }

  uint64x2_t weights() const {
    uint64x2_t total = popcount_u64(words[0]);
    for (std::size_t w = 1; w < word_count; ++w) total = vaddq_u64(total, popcount_u64(words[w]));
    return total;
  }
};

GrayScan tail_of(const GrayScan& scan, std::size_t first_start) {
  GrayScan tail = scan;
  tail.starts = scan.starts.subspan(first_start * scan.words);
  return tail;
}

}  // namespace

std::uint32_t min_nonzero_weight_neon(const GrayScan& scan) {
  if (scan.words > max_words) return min_nonzero_weight_scalar(scan);
  const std::size_t full = scan.start_count() / lanes * lanes;
  const std::uint64_t steps = std::uint64_t{1} << scan.gray_bits;
  const uint64x2_t all_ones = vdupq_n_u64(UINT64_MAX);
  uint64x2_t best = all_ones;

  LaneState state;
  for (std::size_t s = 0; s < full; s += lanes) {
    state.load(scan, s);
    for (std::uint64_t t = 0; t < steps; ++t) {
      if (t != 0) state.apply(scan.gray_rows.data() + std::countr_zero(t) * scan.words);
      const uint64x2_t w = state.weights();
      const uint64x2_t masked = vorrq_u64(w, vceqzq_u64(w));
      best = vbslq_u64(vcltq_u64(masked, best), masked, best);
    }
  }

  std::uint64_t result = std::min(vgetq_lane_u64(best, 0), vgetq_lane_u64(best, 1));
  std::uint32_t out = result >= no_nonzero_weight ? no_nonzero_weight : static_cast<std::uint32_t>(result);
  if (full < scan.start_count()) out = std::min(out, min_nonzero_weight_scalar(tail_of(scan, full)));
  return out;
}

void accumulate_weights_neon(const GrayScan& scan, std::span<std::uint64_t> histogram) {
  if (scan.words > max_words) {
    accumulate_weights_scalar(scan, histogram);
    return;
  }
  const std::size_t full = scan.start_count() / lanes * lanes;
  const std::uint64_t steps = std::uint64_t{1} << scan.gray_bits;

  LaneState state;
  for (std::size_t s = 0; s < full; s += lanes) {
    state.load(scan, s);
    for (std::uint64_t t = 0; t < steps; ++t) {
      if (t != 0) state.apply(scan.gray_rows.data() + std::countr_zero(t) * scan.words);
      const uint64x2_t w = state.weights();
      ++histogram[vgetq_lane_u64(w, 0)];
      ++histogram[vgetq_lane_u64(w, 1)];
    }
  }
  if (full < scan.start_count()) accumulate_weights_scalar(tail_of(scan, full), histogram);
}

}  // namespace fractal::kernels::detail
