#include <cmath>

#include "paley/simd/kernels.hpp"

namespace paley::simd {

namespace {

void axpy(cplx* out, const cplx* x, cplx a, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    out[i] = {out[i].real() + (ar * xr - ai * xi), out[i].imag() + (ar * xi + ai * xr)};
  }
}

void mul_inplace(cplx* out, const cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = out[i].real(), ai = out[i].imag();
    const double xr = x[i].real(), xi = x[i].imag();
    out[i] = {ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

double abs_sum(const cplx* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += std::sqrt(v[i].real() * v[i].real() + v[i].imag() * v[i].imag());
  return s;
}

double norm_sum(const cplx* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
  return s;
}

constexpr KernelTable kScalar{Isa::scalar, axpy, mul_inplace, abs_sum, norm_sum};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace paley::simd
