#pragma once

// Weight-enumeration kernels. Every variant walks the same Gray-code
// sequence over `gray_rows` from each start codeword; SIMD variants run
// several starts in lockstep, one per lane. All variants must agree
// bit-for-bit with the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fractal::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

struct GrayScan {
  /// gray_bits rows of `words` words each.
  std::span<const std::uint64_t> gray_rows;
  /// Start codewords, `words` words each.
  std::span<const std::uint64_t> starts;
  std::size_t words = 1;
  unsigned gray_bits = 0;

  std::size_t start_count() const noexcept { return words == 0 ? 0 : starts.size() / words; }
};

inline constexpr std::uint32_t no_nonzero_weight = UINT32_MAX;

struct KernelTable {
  Isa isa;
  /// Smallest nonzero weight among the 2^gray_bits * start_count() codewords
  /// visited, or no_nonzero_weight when all are zero.
  std::uint32_t (*min_nonzero_weight)(const GrayScan& scan);
  /// Adds the weight of every visited codeword into histogram[weight].
  /// The histogram must have room for the full bit length.
  void (*accumulate_weights)(const GrayScan& scan, std::span<std::uint64_t> histogram);
};

/// Best variant for this build and CPU; chosen once.
const KernelTable& active();

/// Variant for `isa`, or nullptr when this build or CPU cannot run it.
const KernelTable* table_for(Isa isa);

std::vector<Isa> available();

namespace detail {
std::uint32_t min_nonzero_weight_scalar(const GrayScan& scan);
void accumulate_weights_scalar(const GrayScan& scan, std::span<std::uint64_t> histogram);
#if defined(FRACTAL_BUILD_AVX2)
std::uint32_t min_nonzero_weight_avx2(const GrayScan& scan);
void accumulate_weights_avx2(const GrayScan& scan, std::span<std::uint64_t> histogram);
#endif
#if defined(FRACTAL_BUILD_NEON)
std::uint32_t min_nonzero_weight_neon(const GrayScan& scan);
void accumulate_weights_neon(const GrayScan& scan, std::span<std::uint64_t> histogram);
#endif
}  // namespace detail

}  // namespace fractal::kernels
