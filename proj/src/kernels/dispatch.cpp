#include <cstdlib>
#include <string>

#include "fractal/kernels.hpp"

namespace fractal::kernels {

namespace {

constexpr KernelTable scalar_table{Isa::scalar, &detail::min_nonzero_weight_scalar,
                                   &detail::accumulate_weights_scalar};
#if defined(FRACTAL_BUILD_AVX2)
constexpr KernelTable avx2_table{Isa::avx2, &detail::min_nonzero_weight_avx2,
                                 &detail::accumulate_weights_avx2};
#endif
#if defined(FRACTAL_BUILD_NEON)
constexpr KernelTable neon_table{Isa::neon, &detail::min_nonzero_weight_neon,
                                 &detail::accumulate_weights_neon};
#endif

bool cpu_has_avx2() {
#if defined(FRACTAL_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

// FRACTAL_KERNEL=scalar|avx2|neon pins the variant when it is available.
const KernelTable& choose() {
  if (const char* forced = std::getenv("FRACTAL_KERNEL")) {
    const std::string name(forced);
    for (Isa isa : available()) {
      if (to_string(isa) == name) return *table_for(isa);
    }
  }
  if (const auto* t = table_for(Isa::avx2)) return *t;
  if (const auto* t = table_for(Isa::neon)) return *t;
  return scalar_table;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_table;
    case Isa::avx2:
#if defined(FRACTAL_BUILD_AVX2)
      if (cpu_has_avx2()) return &avx2_table;
#endif
      return nullptr;
    case Isa::neon:
#if defined(FRACTAL_BUILD_NEON)
      return &neon_table;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (table_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

const KernelTable& active() {
  static const KernelTable& chosen = choose();
  return chosen;
}

}  // namespace fractal::kernels
