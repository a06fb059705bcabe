#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "superjam/channel.hpp"
#include "superjam/rng.hpp"

using namespace superjam;

TEST_CASE("Philox4x32-10 known-answer vectors") {
  using rng::Counter;
  // Random123 kat_vectors.
  CHECK(rng::philox4x32_10({0, 0, 0, 0}, {0, 0}) ==
        Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(rng::philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                           {0xffffffffu, 0xffffffffu}) ==
        Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(rng::philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                           {0xa4093822u, 0x299f31d0u}) ==
        Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("open-unit mapping never reaches 0 or 1") {
  CHECK(rng::to_open_unit(0) > 0.0);
  CHECK(rng::to_open_unit(~0ull) < 1.0);
}

TEST_CASE("sigma_from_snr") {
  CHECK(sigma_from_snr(10.0).value() == doctest::Approx(0.316227766017).epsilon(1e-12));
  CHECK(sigma_from_snr(0.0).value() == 1.0);
  CHECK(sigma_from_snr(20.0).value() == doctest::Approx(0.1).epsilon(1e-14));
  CHECK_THROWS_AS(sigma_from_snr(NAN), std::invalid_argument);
  CHECK_THROWS_AS(NoiseSigma(0.0), std::invalid_argument);
}

TEST_CASE("awgn at vanishing noise returns the input") {
  std::vector<ComplexSample> in = {{0.5, -0.25}, {1.0, 1.0}, {-0.7, 0.1}};
  const auto out = awgn(in, ChannelSpec{200.0, 3, 1});
  for (std::size_t i = 0; i < in.size(); ++i) {
    CHECK(std::abs(out[i].real() - in[i].real()) < 1e-8);
    CHECK(std::abs(out[i].imag() - in[i].imag()) < 1e-8);
  }
}

TEST_CASE("awgn rejects an empty sequence") {
  std::vector<ComplexSample> none;
  CHECK_THROWS_AS(awgn(none, ChannelSpec{}), std::invalid_argument);
}

TEST_CASE("awgn is deterministic and chunking-invariant") {
  std::vector<ComplexSample> in(1000, ComplexSample{0.1, -0.2});
  const ChannelSpec spec{3.0, 99, 1};
  const auto a = awgn(in, spec);
  const auto b = awgn(in, spec);
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(ComplexSample)) == 0);

  std::vector<ComplexSample> chunked(in.size());
  const std::size_t cuts[] = {0, 1, 333, 334, 999, 1000};
  for (std::size_t k = 0; k + 1 < std::size(cuts); ++k) {
    const std::size_t lo = cuts[k], hi = cuts[k + 1];
    if (lo == hi) continue;
    awgn(std::span(in).subspan(lo, hi - lo), spec, std::span(chunked).subspan(lo, hi - lo), lo);
  }
  CHECK(std::memcmp(a.data(), chunked.data(), a.size() * sizeof(ComplexSample)) == 0);
}

TEST_CASE("awgn noise statistics at 10 dB over 1e6 samples") {
  const std::size_t n = 1'000'000;
  std::vector<ComplexSample> zero(n, ComplexSample{0.0, 0.0});
  const auto bob = awgn(zero, ChannelSpec{10.0, 2024, rng::streams::bob_noise});
  const auto eve = awgn(zero, ChannelSpec{10.0, 2024, rng::streams::eve_noise});

  double sum_re = 0, sum_im = 0, sq_re = 0, sq_im = 0, cross = 0, sq_eve = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum_re += bob[i].real();
    sum_im += bob[i].imag();
    sq_re += bob[i].real() * bob[i].real();
    sq_im += bob[i].imag() * bob[i].imag();
    cross += bob[i].real() * eve[i].real();
    sq_eve += eve[i].real() * eve[i].real();
  }
  const double var_re = sq_re / n - (sum_re / n) * (sum_re / n);
  const double var_im = sq_im / n - (sum_im / n) * (sum_im / n);
  // Per-dimension variance sigma^2 = 0.1, to within 1%.
  CHECK(var_re == doctest::Approx(0.1).epsilon(0.01));
  CHECK(var_im == doctest::Approx(0.1).epsilon(0.01));
  // Distinct streams uncorrelated.
  CHECK(std::abs(cross / std::sqrt(sq_re * sq_eve)) < 0.01);
}
