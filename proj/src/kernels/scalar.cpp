#include <algorithm>
#include <bit>
#include <vector>

#include "fractal/kernels.hpp"

namespace fractal::kernels::detail {

namespace {

template <typename Visit>
void walk(const GrayScan& scan, Visit&& visit) {
  const std::size_t words = scan.words;
  const std::uint64_t steps = std::uint64_t{1} << scan.gray_bits;
  std::vector<std::uint64_t> cw(words);
  for (std::size_t s = 0; s < scan.start_count(); ++s) {
    std::copy_n(scan.starts.begin() + static_cast<std::ptrdiff_t>(s * words), words, cw.begin());
    visit(cw);
    for (std::uint64_t t = 1; t < steps; ++t) {
      const auto* row = scan.gray_rows.data() + std::countr_zero(t) * words;
      for (std::size_t w = 0; w < words; ++w) cw[w] ^= row[w];
      visit(cw);
    }
  }
}

std::uint32_t weight_of(const std::vector<std::uint64_t>& cw) {
  std::uint32_t w = 0;
  for (auto word : cw) w += static_cast<std::uint32_t>(std::popcount(word));
  return w;
}

}  // namespace

std::uint32_t min_nonzero_weight_scalar(const GrayScan& scan) {
  std::uint32_t best = no_nonzero_weight;
  walk(scan, [&](const std::vector<std::uint64_t>& cw) {
    const auto w = weight_of(cw);
    if (w != 0 && w < best) best = w;
  });
  return best;
}

void accumulate_weights_scalar(const GrayScan& scan, std::span<std::uint64_t> histogram) {
  walk(scan, [&](const std::vector<std::uint64_t>& cw) { ++histogram[weight_of(cw)]; });
}

}  // namespace fractal::kernels::detail
