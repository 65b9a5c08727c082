#pragma once

#include <cstdint>
#include <vector>

#include "fractal/gf2.hpp"
#include "fractal/kernels.hpp"

namespace fractal {

inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 24;

struct EnumerationSettings {
  /// Largest number of codewords (2^k) an enumeration may visit.
  std::uint64_t budget = default_budget;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// nullptr selects kernels::active().
  const kernels::KernelTable* kernel = nullptr;
};

/// Throws BudgetExceeded when 2^dimension > budget.
void check_budget(std::size_t dimension, std::uint64_t budget);

/// Smallest nonzero weight in the span of linearly independent rows, or
/// kernels::no_nonzero_weight for an empty row set. The message space is cut
/// into prefix blocks; results do not depend on worker count or kernel.
std::uint32_t enumerate_min_weight(const BitMatrix& independent_rows, const EnumerationSettings& settings = {});

/// Codeword counts by weight, indices 0..col_count().
std::vector<std::uint64_t> enumerate_weight_distribution(const BitMatrix& independent_rows,
                                                         const EnumerationSettings& settings = {});

}  // namespace fractal
