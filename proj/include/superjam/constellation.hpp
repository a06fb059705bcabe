#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace superjam {

/// One complex channel sample. std::complex guarantees the {re, im} array
/// layout the batch kernels rely on.
using ComplexSample = std::complex<double>;

/// Power allocation coefficient. The outer (message) code gets power a, the
/// inner (jamming) code gets 1 - a.
class Pac {
 public:
  /// Throws std::invalid_argument unless 0 < a < 0.5.
  explicit Pac(double a);

  double value() const noexcept { return a_; }
  double outer_amplitude() const noexcept { return sqrt_a_; }
  double inner_amplitude() const noexcept { return sqrt_1ma_; }
  /// Per-axis offset of the outer component, sqrt(a/2).
  double d1() const noexcept;
  /// Per-axis offset of the inner component, sqrt((1-a)/2).
  double d2() const noexcept;

  friend bool operator==(const Pac&, const Pac&) = default;

 private:
  double a_;
  double sqrt_a_;
  double sqrt_1ma_;
};

/// 2-bit 4-QAM label. Bit 0 selects the sign of the real part, bit 1 the sign
/// of the imaginary part: 00 -> (+,+), 01 -> (-,+), 10 -> (+,-), 11 -> (-,-).
/// Textual form writes bit 1 first, so "01" has value 1.
class OuterLabel {
 public:
  constexpr OuterLabel() = default;
  /// Throws std::invalid_argument if bits > 3.
  explicit OuterLabel(unsigned bits);
  /// Parses "00".."11".
  static OuterLabel parse(const std::string& text);

  constexpr std::uint8_t bits() const noexcept { return bits_; }
  std::string to_string() const;

  friend constexpr bool operator==(OuterLabel, OuterLabel) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Label of one of the 16 superposition points. Text form is the inner bits
/// followed by the outer bits, e.g. "0010" is inner 00, outer 10.
class SuperLabel {
 public:
  constexpr SuperLabel() = default;
  SuperLabel(OuterLabel inner, OuterLabel outer) : inner_(inner), outer_(outer) {}
  /// Packed value inner * 4 + outer, in [0, 16).
  explicit SuperLabel(unsigned packed);
  static SuperLabel parse(const std::string& text);

  OuterLabel inner() const noexcept { return inner_; }
  OuterLabel outer() const noexcept { return outer_; }
  unsigned packed() const noexcept { return inner_.bits() * 4u + outer_.bits(); }
  std::string to_string() const;

  friend bool operator==(const SuperLabel&, const SuperLabel&) = default;

 private:
  OuterLabel inner_;
  OuterLabel outer_;
};

/// A sequence of 4-QAM labels together with their unit-power points.
struct SymbolSeq {
  std::vector<std::uint8_t> labels;
  std::vector<ComplexSample> points;

  std::size_t size() const noexcept { return labels.size(); }
  /// Builds the points from labels through outer_point.
  static SymbolSeq from_labels(std::vector<std::uint8_t> labels);
};

ComplexSample outer_point(OuterLabel label);

/// sqrt(a) * y1 + sqrt(1 - a) * y2.
ComplexSample superpose(ComplexSample y1, ComplexSample y2, const Pac& a);

/// sqrt(1 - a) * outer_point(inner) + sqrt(a) * outer_point(outer).
ComplexSample super_point(SuperLabel label, const Pac& a);

/// Quadrant decision; a zero coordinate counts as positive.
OuterLabel ml_detect_outer(ComplexSample sample);

/// Nearest of the 16 superposition points, evaluated through the equivalent
/// rectangle regions with per-axis boundaries {-d2, 0, d2}.
SuperLabel ml_detect_super(ComplexSample sample, const Pac& a);

/// Outer bits of ml_detect_super.
OuterLabel eve_detect_outer(ComplexSample sample, const Pac& a);

/// (s1 - sqrt(1 - a) * y2_hat) / sqrt(a).
ComplexSample cancel_interference(ComplexSample s1, ComplexSample y2_hat, const Pac& a);

// Sequence forms, routed through the runtime-selected batch kernels.

void superpose(std::span<const ComplexSample> y1, std::span<const ComplexSample> y2,
               const Pac& a, std::span<ComplexSample> out);
void cancel_interference(std::span<const ComplexSample> s1,
                         std::span<const ComplexSample> y2_hat, const Pac& a,
                         std::span<ComplexSample> out);
void ml_detect_outer(std::span<const ComplexSample> samples, std::span<std::uint8_t> labels);
void eve_detect_outer(std::span<const ComplexSample> samples, const Pac& a,
                      std::span<std::uint8_t> labels);

}  // namespace superjam
