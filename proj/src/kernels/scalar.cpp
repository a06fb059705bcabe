#include "superjam/kernels.hpp"

namespace superjam::kernels {
namespace {

void axpby_scalar(const double* y1, const double* y2, double sa, double sb, double* out,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double u = sa * y1[i];
    const double v = sb * y2[i];
    out[i] = u + v;
  }
}

void cancel_scalar(const double* s, const double* y2, double sa, double sb, double* out,
                   std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = sb * y2[i];
    out[i] = (s[i] - v) / sa;
  }
}

void detect_quadrant_scalar(const double* samples, std::uint8_t* labels, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = samples[2 * i];
    const double im = samples[2 * i + 1];
    labels[i] = static_cast<std::uint8_t>((re < 0.0 ? 1u : 0u) | (im < 0.0 ? 2u : 0u));
  }
}

// Per axis: [d2, inf) -> outer +, [0, d2) -> outer -, [-d2, 0) -> outer +,
// (-inf, -d2) -> outer -.
inline unsigned outer_negative(double x, double d2) {
  return x < 0.0 ? (x < -d2 ? 1u : 0u) : (x < d2 ? 1u : 0u);
}

void detect_super_outer_scalar(const double* samples, double d2, std::uint8_t* labels,
                               std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned re = outer_negative(samples[2 * i], d2);
    const unsigned im = outer_negative(samples[2 * i + 1], d2);
    labels[i] = static_cast<std::uint8_t>(re | (im << 1));
  }
}

std::size_t count_mismatch_scalar(const std::uint8_t* a, const std::uint8_t* b,
                                  std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += a[i] != b[i] ? 1 : 0;
  return count;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t blocked = n - n % 4;
  for (std::size_t i = 0; i < blocked; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double p = a[i + j] * b[i + j];
      lane[j] = lane[j] + p;
    }
  }
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = blocked; i < n; ++i) {
    const double p = a[i] * b[i];
    sum = sum + p;
  }
  return sum;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{Isa::scalar,          "scalar",
                                 axpby_scalar,         cancel_scalar,
                                 detect_quadrant_scalar, detect_super_outer_scalar,
                                 count_mismatch_scalar, dot_scalar};
  return table;
}

}  // namespace superjam::kernels
