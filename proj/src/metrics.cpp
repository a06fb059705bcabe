#include "superjam/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "superjam/kernels.hpp"

namespace superjam {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string PsnrValue::to_string() const { return infinite ? "inf" : format_real(db); }

double mse(const Image& a, const Image& b) {
  if (a.width != b.width || a.height != b.height || a.channels != b.channels ||
      a.pixels.size() != b.pixels.size()) {
    throw std::invalid_argument("mse: image shapes differ");
  }
  if (a.pixels.empty()) throw std::invalid_argument("mse: empty images");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(a.pixels.size());
}

PsnrValue psnr(const Image& a, const Image& b) {
  const double m = mse(a, b);
  if (m == 0.0) return PsnrValue::inf();
  return {10.0 * std::log10(kPeakValue * kPeakValue / m), false};
}

std::size_t count_symbol_errors(std::span<const std::uint8_t> sent,
                                std::span<const std::uint8_t> detected) {
  if (sent.size() != detected.size()) throw std::invalid_argument("label lists differ in length");
  return kernels::active().count_mismatch(sent.data(), detected.data(), sent.size());
}

double empirical_sep(std::span<const std::uint8_t> sent, std::span<const std::uint8_t> detected) {
  if (sent.empty()) throw std::invalid_argument("empirical_sep: empty label list");
  return static_cast<double>(count_symbol_errors(sent, detected)) /
         static_cast<double>(sent.size());
}

double binomial_halfwidth3(double p, std::size_t n) {
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace superjam
