#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "superjam/codec.hpp"

namespace superjam {

/// PSNR in dB; identical images carry the infinite flag instead of a number.
struct PsnrValue {
  double db = 0.0;
  bool infinite = false;

  static PsnrValue inf() { return {0.0, true}; }
  /// "inf" or the dB value at 12 significant digits.
  std::string to_string() const;
  friend bool operator==(const PsnrValue&, const PsnrValue&) = default;
};

inline constexpr double kPeakValue = 255.0;

/// Throws std::invalid_argument on shape mismatch.
double mse(const Image& a, const Image& b);

/// 10 log10(255^2 / mse).
PsnrValue psnr(const Image& a, const Image& b);

/// Fraction of positions where the labels differ. Throws on length mismatch
/// or empty input.
double empirical_sep(std::span<const std::uint8_t> sent, std::span<const std::uint8_t> detected);

/// Number of differing positions, through the batch kernels.
std::size_t count_symbol_errors(std::span<const std::uint8_t> sent,
                                std::span<const std::uint8_t> detected);

/// 3 * sqrt(p (1 - p) / n).
double binomial_halfwidth3(double p, std::size_t n);

/// Formats with 12 significant digits.
std::string format_real(double v);

}  // namespace superjam
