#include "superjam/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace superjam {

NoiseSigma::NoiseSigma(double sigma) : sigma_(sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("noise sigma must be positive and finite");
  }
}

NoiseSigma sigma_from_snr(double snr_db) {
  if (!std::isfinite(snr_db)) throw std::invalid_argument("SNR must be finite");
  return NoiseSigma(std::sqrt(std::pow(10.0, -snr_db / 10.0)));
}

void awgn(std::span<const ComplexSample> in, const ChannelSpec& spec,
          std::span<ComplexSample> out, std::uint64_t first_index) {
  if (in.empty()) throw std::invalid_argument("awgn: empty sequence");
  if (in.size() != out.size()) throw std::invalid_argument("awgn: length mismatch");
  const double sigma = sigma_from_snr(spec.snr_db).value();
  for (std::size_t i = 0; i < in.size(); ++i) {
    const auto [g_re, g_im] = rng::normal_pair(spec.seed, spec.stream_id, first_index + i);
    out[i] = {in[i].real() + sigma * g_re, in[i].imag() + sigma * g_im};
  }
}

std::vector<ComplexSample> awgn(std::span<const ComplexSample> in, const ChannelSpec& spec) {
  std::vector<ComplexSample> out(in.size());
  awgn(in, spec, out);
  return out;
}

}  // namespace superjam
