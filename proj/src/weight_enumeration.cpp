#include "fractal/weight_enumeration.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "fractal/errors.hpp"

namespace fractal {

namespace {

// Prefix bits fixed per start codeword; 2^6 starts keep every SIMD lane busy.
constexpr std::size_t prefix_bits = 6;
// Below this many codewords threads cost more than they save.
constexpr std::size_t parallel_min_dimension = 16;

struct Plan {
  std::size_t words = 0;
  unsigned gray_bits = 0;
  std::vector<std::uint64_t> gray_rows;
  std::vector<std::uint64_t> starts;
};

Plan make_plan(const BitMatrix& rows) {
  Plan plan;
  const std::size_t k = rows.row_count();
  plan.words = std::max<std::size_t>(1, BitVector::words_for(rows.col_count()));
  const std::size_t t = std::min(k, prefix_bits);
  plan.gray_bits = static_cast<unsigned>(k - t);

  plan.gray_rows.assign(plan.gray_bits * plan.words, 0);
  for (std::size_t r = 0; r < plan.gray_bits; ++r) {
    auto w = rows.row(r).words();
    std::copy(w.begin(), w.end(), plan.gray_rows.begin() + static_cast<std::ptrdiff_t>(r * plan.words));
  }

  // Start i is the XOR of prefix rows selected by the bits of i.
  const std::size_t start_count = std::size_t{1} << t;
  plan.starts.assign(start_count * plan.words, 0);
  for (std::size_t i = 1; i < start_count; ++i) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(i));
    const std::size_t prev = i & (i - 1);
    auto w = rows.row(plan.gray_bits + low).words();
    for (std::size_t j = 0; j < plan.words; ++j) {
      plan.starts[i * plan.words + j] = plan.starts[prev * plan.words + j] ^ (j < w.size() ? w[j] : 0);
    }
  }
  return plan;
}

unsigned worker_count(const EnumerationSettings& settings, std::size_t dimension, std::size_t start_count) {
  if (dimension < parallel_min_dimension) return 1;
  unsigned workers = settings.workers != 0 ? settings.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);
  return static_cast<unsigned>(std::min<std::size_t>(workers, start_count));
}

kernels::GrayScan slice(const Plan& plan, std::size_t first, std::size_t count) {
  kernels::GrayScan scan;
  scan.gray_rows = plan.gray_rows;
  scan.starts = std::span<const std::uint64_t>(plan.starts).subspan(first * plan.words, count * plan.words);
  scan.words = plan.words;
  scan.gray_bits = plan.gray_bits;
  return scan;
}

// Runs body(worker, first_start, start_count) over contiguous start ranges.
template <typename Body>
void for_each_block(std::size_t start_count, unsigned workers, Body&& body) {
  if (workers <= 1) {
    body(0u, std::size_t{0}, start_count);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t per = (start_count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t first = std::min(start_count, w * per);
    const std::size_t count = std::min(per, start_count - first);
    pool.emplace_back([&body, w, first, count] { body(w, first, count); });
  }
}

const kernels::KernelTable& kernel_of(const EnumerationSettings& settings) {
  return settings.kernel != nullptr ? *settings.kernel : kernels::active();
}

}  // namespace

void check_budget(std::size_t dimension, std::uint64_t budget) {
  if (dimension >= 64 || (std::uint64_t{1} << dimension) > budget) {
    throw BudgetExceeded(static_cast<unsigned>(dimension), budget);
  }
}

std::uint32_t enumerate_min_weight(const BitMatrix& independent_rows, const EnumerationSettings& settings) {
  check_budget(independent_rows.row_count(), settings.budget);
  if (independent_rows.empty()) return kernels::no_nonzero_weight;

  const Plan plan = make_plan(independent_rows);
  const std::size_t start_count = plan.starts.size() / plan.words;
  const unsigned workers = worker_count(settings, independent_rows.row_count(), start_count);
  const auto& kernel = kernel_of(settings);

  std::vector<std::uint32_t> partial(workers, kernels::no_nonzero_weight);
  for_each_block(start_count, workers, [&](unsigned w, std::size_t first, std::size_t count) {
    if (count != 0) partial[w] = kernel.min_nonzero_weight(slice(plan, first, count));
  });
  return *std::min_element(partial.begin(), partial.end());
}

std::vector<std::uint64_t> enumerate_weight_distribution(const BitMatrix& independent_rows,
                                                         const EnumerationSettings& settings) {
  check_budget(independent_rows.row_count(), settings.budget);
  std::vector<std::uint64_t> total(independent_rows.col_count() + 1, 0);
  if (independent_rows.empty()) {
    total[0] = 1;
    return total;
  }

  const Plan plan = make_plan(independent_rows);
  const std::size_t start_count = plan.starts.size() / plan.words;
  const unsigned workers = worker_count(settings, independent_rows.row_count(), start_count);
  const auto& kernel = kernel_of(settings);

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(total.size(), 0));
  for_each_block(start_count, workers, [&](unsigned w, std::size_t first, std::size_t count) {
    if (count != 0) kernel.accumulate_weights(slice(plan, first, count), partial[w]);
  });
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += p[i];
  }
  return total;
}

}  // namespace fractal
