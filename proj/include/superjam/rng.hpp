#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace superjam::rng {

/// Philox4x32 with 10 rounds (Salmon et al., SC'11). Counter-based: the
/// output block is a pure function of (counter, key).
using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

Counter philox4x32_10(Counter counter, Key key) noexcept;

/// Stream identifiers used across the project under one master seed.
namespace streams {
inline constexpr std::uint64_t bob_noise = 1;
inline constexpr std::uint64_t eve_noise = 2;
inline constexpr std::uint64_t gumbel = 3;
inline constexpr std::uint64_t codeword_pick = 4;
inline constexpr std::uint64_t regen_error = 5;
inline constexpr std::uint64_t symbol_labels = 6;
}  // namespace streams

/// Four 32-bit words addressed by (seed, stream, index).
Counter block(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

/// Maps 64 random bits to a double in the open interval (0, 1).
double to_open_unit(std::uint64_t bits) noexcept;

/// Two uniforms in (0, 1) for (seed, stream, index).
std::pair<double, double> uniform_pair(std::uint64_t seed, std::uint64_t stream,
                                       std::uint64_t index) noexcept;

/// Two independent standard normal deviates via Box-Muller on uniform_pair:
/// r = sqrt(-2 ln u0), first = r cos(2 pi u1), second = r sin(2 pi u1).
std::pair<double, double> normal_pair(std::uint64_t seed, std::uint64_t stream,
                                      std::uint64_t index) noexcept;

/// 64 random bits for (seed, stream, index).
std::uint64_t bits64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

/// Uniform integer in [0, n) from 64 random bits (multiply-shift).
std::uint64_t bounded(std::uint64_t bits, std::uint64_t n) noexcept;

/// SplitMix64 finalizer, used to derive per-frame seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace superjam::rng
