#include "superjam/rng.hpp"

#include <cmath>
#include <numbers>

namespace superjam::rng {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline std::uint32_t lo32(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
inline std::uint32_t hi32(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

}  // namespace

Counter philox4x32_10(Counter c, Key k) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kWeyl0;
      k[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
  return c;
}

Counter block(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
  return philox4x32_10({lo32(index), hi32(index), lo32(stream), hi32(stream)},
                       {lo32(seed), hi32(seed)});
}

double to_open_unit(std::uint64_t bits) noexcept {
  // (k + 0.5) / 2^52 for the top 52 bits. k + 0.5 is exact, so the result is
  // never 0 and at most 1 - 2^-53.
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

std::pair<double, double> uniform_pair(std::uint64_t seed, std::uint64_t stream,
                                       std::uint64_t index) noexcept {
  const Counter r = block(seed, stream, index);
  const std::uint64_t a = (static_cast<std::uint64_t>(r[1]) << 32) | r[0];
  const std::uint64_t b = (static_cast<std::uint64_t>(r[3]) << 32) | r[2];
  return {to_open_unit(a), to_open_unit(b)};
}

std::pair<double, double> normal_pair(std::uint64_t seed, std::uint64_t stream,
                                      std::uint64_t index) noexcept {
  const auto [u0, u1] = uniform_pair(seed, stream, index);
  const double r = std::sqrt(-2.0 * std::log(u0));
  const double theta = 2.0 * std::numbers::pi * u1;
  return {r * std::cos(theta), r * std::sin(theta)};
}

std::uint64_t bits64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
  const Counter r = block(seed, stream, index);
  return (static_cast<std::uint64_t>(r[1]) << 32) | r[0];
}

std::uint64_t bounded(std::uint64_t bits, std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(bits) * n) >> 64);
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace superjam::rng
