#pragma once

#include <array>
#include <cstdint>

#include "superjam/constellation.hpp"

namespace superjam {

using CategoryLogits = std::array<double, 4>;
using CategoryProbs = std::array<double, 4>;

class Temperature {
 public:
  /// Throws std::invalid_argument unless tau > 0 and finite.
  explicit Temperature(double tau);
  double value() const noexcept { return tau_; }

 private:
  double tau_;
};

/// Where a sample's Gumbel deviates come from: (seed, index) on the gumbel stream.
struct SampleKey {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

/// Four independent Gumbel(0, 1) deviates, -ln(-ln u) with u clamped to
/// [1e-15, 1 - 1e-15].
std::array<double, 4> gumbel_deviates(SampleKey key) noexcept;

/// softmax over four entries, max-shifted.
CategoryProbs softmax(const CategoryLogits& z) noexcept;

/// softmax((logits + g) / tau) with g = gumbel_deviates(key).
CategoryProbs gumbel_softmax_sample(const CategoryLogits& logits, Temperature tau, SampleKey key);

/// argmax(logits + g), an exact draw from categorical(softmax(logits)).
unsigned hard_sample(const CategoryLogits& logits, SampleKey key);

/// Category c of (1+1j, 1-1j, -1+1j, -1-1j), scaled to unit power.
/// Throws std::invalid_argument for c > 3.
ComplexSample category_to_symbol(unsigned c);

}  // namespace superjam
