#pragma once

// Batch inner loops with a scalar reference and ISA-specific variants.
//
// Every variant must produce bit-identical results to the scalar reference:
// element-wise kernels use the same operation order without contraction, and
// reductions accumulate in four interleaved lanes combined as
// (l0 + l1) + (l2 + l3).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace superjam::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;

  /// out[i] = sa * y1[i] + sb * y2[i] over n interleaved doubles.
  void (*axpby)(const double* y1, const double* y2, double sa, double sb, double* out,
                std::size_t n);

  /// out[i] = (s[i] - sb * y2[i]) / sa over n interleaved doubles.
  void (*cancel)(const double* s, const double* y2, double sa, double sb, double* out,
                 std::size_t n);

  /// Quadrant labels for n complex samples (2n doubles).
  void (*detect_quadrant)(const double* samples, std::uint8_t* labels, std::size_t n);

  /// Outer bits of the 16-point rectangle decision with inner offset d2.
  void (*detect_super_outer)(const double* samples, double d2, std::uint8_t* labels,
                             std::size_t n);

  /// Number of positions where a[i] != b[i].
  std::size_t (*count_mismatch)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);

  /// Dot product with the fixed four-lane accumulation order.
  double (*dot)(const double* a, const double* b, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

/// Returns nullptr when the variant is not compiled in or the CPU lacks it.
const KernelTable* kernels_for(Isa isa) noexcept;

/// Best available variant. SUPERJAM_KERNELS=scalar forces the reference path.
const KernelTable& active() noexcept;

}  // namespace superjam::kernels
