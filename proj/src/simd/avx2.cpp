// Compiled with -mavx2 -mfma on x86-64; selected only after a runtime CPU
// check, so nothing here may run on older hardware.

#include "paley/simd/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

#include <cmath>

namespace paley::simd {

namespace {

// Two interleaved complex values per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d ar, __m256d ai, __m256d x) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, swapped));
}

void axpy(cplx* out, const cplx* x, cplx a, std::size_t n) {
  auto* po = reinterpret_cast<double*>(out);
  const auto* px = reinterpret_cast<const double*>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(px + 2 * i);
    const __m256d x1 = _mm256_loadu_pd(px + 2 * i + 4);
    const __m256d o0 = _mm256_loadu_pd(po + 2 * i);
    const __m256d o1 = _mm256_loadu_pd(po + 2 * i + 4);
    _mm256_storeu_pd(po + 2 * i, _mm256_add_pd(o0, cmul(ar, ai, x0)));
    _mm256_storeu_pd(po + 2 * i + 4, _mm256_add_pd(o1, cmul(ar, ai, x1)));
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = _mm256_loadu_pd(px + 2 * i);
    const __m256d o0 = _mm256_loadu_pd(po + 2 * i);
    _mm256_storeu_pd(po + 2 * i, _mm256_add_pd(o0, cmul(ar, ai, x0)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    out[i] = {out[i].real() + (a.real() * xr - a.imag() * xi),
              out[i].imag() + (a.real() * xi + a.imag() * xr)};
  }
}

void mul_inplace(cplx* out, const cplx* x, std::size_t n) {
  auto* po = reinterpret_cast<double*>(out);
  const auto* px = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d o = _mm256_loadu_pd(po + 2 * i);
    const __m256d v = _mm256_loadu_pd(px + 2 * i);
    const __m256d vr = _mm256_movedup_pd(v);        // [xr0, xr0, xr1, xr1]
    const __m256d vi = _mm256_permute_pd(v, 0b1111);  // [xi0, xi0, xi1, xi1]
    const __m256d osw = _mm256_permute_pd(o, 0b0101);
    _mm256_storeu_pd(po + 2 * i, _mm256_fmaddsub_pd(o, vr, _mm256_mul_pd(osw, vi)));
  }
  for (; i < n; ++i) {
    const double ar = out[i].real(), ai = out[i].imag();
    const double xr = x[i].real(), xi = x[i].imag();
    out[i] = {ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double abs_sum(const cplx* v, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(v);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(p + 2 * i);
    const __m256d b = _mm256_loadu_pd(p + 2 * i + 4);
    // [|z0|^2, |z2|^2, |z1|^2, |z3|^2]
    const __m256d sq = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    acc = _mm256_add_pd(acc, _mm256_sqrt_pd(sq));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::sqrt(v[i].real() * v[i].real() + v[i].imag() * v[i].imag());
  return s;
}

double norm_sum(const cplx* v, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(v);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(p + 2 * i);
    const __m256d b = _mm256_loadu_pd(p + 2 * i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
  return s;
}

constexpr KernelTable kAvx2{Isa::avx2, axpy, mul_inplace, abs_sum, norm_sum};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2; }

}  // namespace paley::simd

#else

namespace paley::simd {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace paley::simd

#endif
