#include "paley/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

#include <cmath>

namespace paley::simd {

namespace {

// One complex value per register: [re, im].
inline float64x2_t cmul(float64x2_t ar, float64x2_t ai_signed, float64x2_t x) {
  const float64x2_t swapped = vextq_f64(x, x, 1);
  return vfmaq_f64(vmulq_f64(ar, x), ai_signed, swapped);
}

void axpy(cplx* out, const cplx* x, cplx a, std::size_t n) {
  auto* po = reinterpret_cast<double*>(out);
  const auto* px = reinterpret_cast<const double*>(x);
  const float64x2_t ar = vdupq_n_f64(a.real());
  const double signs[2] = {-a.imag(), a.imag()};
  const float64x2_t ai = vld1q_f64(signs);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(px + 2 * i);
    vst1q_f64(po + 2 * i, vaddq_f64(vld1q_f64(po + 2 * i), cmul(ar, ai, xv)));
  }
}

void mul_inplace(cplx* out, const cplx* x, std::size_t n) {
  auto* po = reinterpret_cast<double*>(out);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t ov = vld1q_f64(po + 2 * i);
    const float64x2_t ar = vdupq_n_f64(x[i].real());
    const double signs[2] = {-x[i].imag(), x[i].imag()};
    vst1q_f64(po + 2 * i, cmul(ar, vld1q_f64(signs), ov));
  }
}

double abs_sum(const cplx* v, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(v);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t a = vld1q_f64(p + 2 * i);
    const float64x2_t b = vld1q_f64(p + 2 * i + 2);
    const float64x2_t sq = vpaddq_f64(vmulq_f64(a, a), vmulq_f64(b, b));
    acc = vaddq_f64(acc, vsqrtq_f64(sq));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += std::sqrt(v[i].real() * v[i].real() + v[i].imag() * v[i].imag());
  return s;
}

double norm_sum(const cplx* v, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(v);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t a = vld1q_f64(p + 2 * i);
    acc = vfmaq_f64(acc, a, a);
  }
  return vaddvq_f64(acc);
}

constexpr KernelTable kNeon{Isa::neon, axpy, mul_inplace, abs_sum, norm_sum};

}  // namespace

const KernelTable* neon_kernels() { return &kNeon; }

}  // namespace paley::simd

#else

namespace paley::simd {
const KernelTable* neon_kernels() { return nullptr; }
}  // namespace paley::simd

#endif
