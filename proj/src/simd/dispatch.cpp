#include <cstdlib>
#include <string>

#include "paley/simd/kernels.hpp"

namespace paley::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2_kernels() != nullptr && __builtin_cpu_supports("avx2") &&
             __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
      // NEON is architectural on aarch64.
      return neon_kernels() != nullptr;
  }
  return false;
}

namespace {

const KernelTable& select() {
  const KernelTable* forced = nullptr;
  if (const char* env = std::getenv("PALEY_SIMD")) {
    const std::string want(env);
    if (want == "scalar") forced = &scalar_kernels();
    if (want == "avx2" && isa_supported(Isa::avx2)) forced = avx2_kernels();
    if (want == "neon" && isa_supported(Isa::neon)) forced = neon_kernels();
  }
  if (forced) return *forced;
  if (isa_supported(Isa::avx2)) return *avx2_kernels();
  if (isa_supported(Isa::neon)) return *neon_kernels();
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace paley::simd
