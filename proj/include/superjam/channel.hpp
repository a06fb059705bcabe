#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "superjam/constellation.hpp"
#include "superjam/rng.hpp"

namespace superjam {

/// Per-real-dimension noise standard deviation.
class NoiseSigma {
 public:
  /// Throws std::invalid_argument unless sigma is positive and finite.
  explicit NoiseSigma(double sigma);
  double value() const noexcept { return sigma_; }

 private:
  double sigma_;
};

/// sigma = sqrt(10^(-snr_db / 10)) for unit transmit power, applied to each of
/// the real and imaginary parts.
NoiseSigma sigma_from_snr(double snr_db);

struct ChannelSpec {
  double snr_db = 10.0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = rng::streams::bob_noise;
};

/// Adds N(0, sigma^2) to both coordinates of each sample. The noise on sample
/// i depends only on (seed, stream_id, first_index + i), so a sequence may be
/// processed in arbitrary chunks with identical results.
void awgn(std::span<const ComplexSample> in, const ChannelSpec& spec,
          std::span<ComplexSample> out, std::uint64_t first_index = 0);

std::vector<ComplexSample> awgn(std::span<const ComplexSample> in, const ChannelSpec& spec);

}  // namespace superjam
