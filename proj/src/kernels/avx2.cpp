// AVX2 variants. This file is the only one compiled with -mavx2; dispatch.cpp
// checks CPU support before handing out this table.

#include <immintrin.h>

#include "superjam/kernels.hpp"

namespace superjam::kernels {
namespace {

void axpby_avx2(const double* y1, const double* y2, double sa, double sb, double* out,
                std::size_t n) {
  const __m256d va = _mm256_set1_pd(sa);
  const __m256d vb = _mm256_set1_pd(sb);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d u = _mm256_mul_pd(va, _mm256_loadu_pd(y1 + i));
    const __m256d v = _mm256_mul_pd(vb, _mm256_loadu_pd(y2 + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(u, v));
  }
  for (; i < n; ++i) {
    const double u = sa * y1[i];
    const double v = sb * y2[i];
    out[i] = u + v;
  }
}

void cancel_avx2(const double* s, const double* y2, double sa, double sb, double* out,
                 std::size_t n) {
  const __m256d va = _mm256_set1_pd(sa);
  const __m256d vb = _mm256_set1_pd(sb);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_mul_pd(vb, _mm256_loadu_pd(y2 + i));
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(s + i), v);
    _mm256_storeu_pd(out + i, _mm256_div_pd(d, va));
  }
  for (; i < n; ++i) {
    const double v = sb * y2[i];
    out[i] = (s[i] - v) / sa;
  }
}

// Two complex samples per register: movemask bits are re0, im0, re1, im1,
// which is already the label bit order.
void detect_quadrant_avx2(const double* samples, std::uint8_t* labels, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x = _mm256_loadu_pd(samples + 2 * i);
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(x, zero, _CMP_LT_OQ));
    labels[i] = static_cast<std::uint8_t>(mask & 3);
    labels[i + 1] = static_cast<std::uint8_t>((mask >> 2) & 3);
  }
  for (; i < n; ++i) {
    const double re = samples[2 * i];
    const double im = samples[2 * i + 1];
    labels[i] = static_cast<std::uint8_t>((re < 0.0 ? 1u : 0u) | (im < 0.0 ? 2u : 0u));
  }
}

void detect_super_outer_avx2(const double* samples, double d2, std::uint8_t* labels,
                             std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d pos = _mm256_set1_pd(d2);
  const __m256d neg = _mm256_set1_pd(-d2);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x = _mm256_loadu_pd(samples + 2 * i);
    const __m256d below_zero = _mm256_cmp_pd(x, zero, _CMP_LT_OQ);
    const __m256d threshold = _mm256_blendv_pd(pos, neg, below_zero);
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(x, threshold, _CMP_LT_OQ));
    labels[i] = static_cast<std::uint8_t>(mask & 3);
    labels[i + 1] = static_cast<std::uint8_t>((mask >> 2) & 3);
  }
  for (; i < n; ++i) {
    unsigned bits = 0;
    for (unsigned axis = 0; axis < 2; ++axis) {
      const double x = samples[2 * i + axis];
      const bool outer_neg = x < 0.0 ? x < -d2 : x < d2;
      bits |= (outer_neg ? 1u : 0u) << axis;
    }
    labels[i] = static_cast<std::uint8_t>(bits);
  }
}

std::size_t count_mismatch_avx2(const std::uint8_t* a, const std::uint8_t* b,
                                std::size_t n) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const auto equal = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    count += 32 - static_cast<std::size_t>(__builtin_popcount(equal));
  }
  for (; i < n; ++i) count += a[i] != b[i] ? 1 : 0;
  return count;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t blocked = n - n % 4;
  for (std::size_t i = 0; i < blocked; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, p);
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = blocked; i < n; ++i) {
    const double p = a[i] * b[i];
    sum = sum + p;
  }
  return sum;
}

}  // namespace

const KernelTable& avx2_kernels() noexcept {
  static const KernelTable table{Isa::avx2,          "avx2",
                                 axpby_avx2,         cancel_avx2,
                                 detect_quadrant_avx2, detect_super_outer_avx2,
                                 count_mismatch_avx2, dot_avx2};
  return table;
}

}  // namespace superjam::kernels
