#pragma once

// Data-parallel inner loops of grid evaluation and quadrature.
//
// Every kernel has a scalar reference implementation; vector variants are
// compiled per ISA and chosen once per process at first use. Set
// PALEY_SIMD=scalar (or avx2 / neon) to force a variant. Vector variants
// reassociate sums, so they agree with the scalar path to rounding, not
// bitwise.

#include <complex>
#include <cstddef>
#include <string_view>

namespace paley::simd {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  // out[i] += a * x[i]
  void (*axpy)(cplx* out, const cplx* x, cplx a, std::size_t n);
  // out[i] *= x[i]
  void (*mul_inplace)(cplx* out, const cplx* x, std::size_t n);
  // sum |v[i]|
  double (*abs_sum)(const cplx* v, std::size_t n);
  // sum |v[i]|^2
  double (*norm_sum)(const cplx* v, std::size_t n);
};

const KernelTable& scalar_kernels();
// nullptr when the variant was not compiled for this target.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);

const KernelTable& active_kernels();

}  // namespace paley::simd
