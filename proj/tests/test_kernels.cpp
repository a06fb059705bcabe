#include <doctest.h>

#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "superjam/kernels.hpp"

using namespace superjam::kernels;

namespace {

std::vector<double> random_doubles(std::mt19937_64& gen, std::size_t n, double scale) {
  std::normal_distribution<double> d(0.0, scale);
  std::vector<double> v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

// Sizes chosen to exercise every tail length of the 2-, 4- and 32-wide loops.
const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 31, 32, 33, 63, 64, 65, 1000, 4099};

}  // namespace

TEST_CASE("scalar table is always available and active falls back to it") {
  CHECK(kernels_for(Isa::scalar) == &scalar_kernels());
  const KernelTable& a = active();
  CHECK((a.isa == Isa::scalar || a.isa == Isa::avx2));
}

TEST_CASE("SIMD variants are bit-identical to the scalar reference") {
  const KernelTable* simd = kernels_for(Isa::avx2);
  if (simd == nullptr) {
    MESSAGE("AVX2 not available on this machine; equivalence test skipped");
    return;
  }
  const KernelTable& ref = scalar_kernels();
  std::mt19937_64 gen(2024);

  for (std::size_t n : kSizes) {
    CAPTURE(n);
    const auto x = random_doubles(gen, 2 * n, 1.0);
    const auto y = random_doubles(gen, 2 * n, 1.0);
    const double sa = 0.7, sb = 0.71414284285428499;

    std::vector<double> r1(2 * n), r2(2 * n);
    ref.axpby(x.data(), y.data(), sa, sb, r1.data(), 2 * n);
    simd->axpby(x.data(), y.data(), sa, sb, r2.data(), 2 * n);
    CHECK(bit_equal(r1, r2));

    ref.cancel(x.data(), y.data(), sa, sb, r1.data(), 2 * n);
    simd->cancel(x.data(), y.data(), sa, sb, r2.data(), 2 * n);
    CHECK(bit_equal(r1, r2));

    std::vector<std::uint8_t> l1(n), l2(n);
    ref.detect_quadrant(x.data(), l1.data(), n);
    simd->detect_quadrant(x.data(), l2.data(), n);
    CHECK(l1 == l2);

    ref.detect_super_outer(x.data(), 0.55, l1.data(), n);
    simd->detect_super_outer(x.data(), 0.55, l2.data(), n);
    CHECK(l1 == l2);

    std::vector<std::uint8_t> a(4 * n + 3), b(4 * n + 3);
    std::uniform_int_distribution<int> lab(0, 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = static_cast<std::uint8_t>(lab(gen));
      b[i] = static_cast<std::uint8_t>(lab(gen));
    }
    CHECK(ref.count_mismatch(a.data(), b.data(), a.size()) ==
          simd->count_mismatch(a.data(), b.data(), a.size()));

    const double d1 = ref.dot(x.data(), y.data(), x.size());
    const double d2 = simd->dot(x.data(), y.data(), x.size());
    CHECK(std::memcmp(&d1, &d2, sizeof d1) == 0);
  }
}

TEST_CASE("detection kernels agree on boundary and signed-zero inputs") {
  const KernelTable* simd = kernels_for(Isa::avx2);
  const double d2 = 0.5;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const std::vector<double> edge = {0.0,  -0.0, d2,   -d2, 1e-300, -1e-300, d2, 0.0,
                                    -d2,  -0.0, 2.0,  -2.0, nan,   0.3,     -0.3, nan};
  const std::size_t n = edge.size() / 2;
  std::vector<std::uint8_t> q(n), s(n);
  scalar_kernels().detect_quadrant(edge.data(), q.data(), n);
  scalar_kernels().detect_super_outer(edge.data(), d2, s.data(), n);
  // (0, -0) is the positive quadrant; (d2, -d2) puts both axes in the outer-positive strip.
  CHECK(q[0] == 0);
  CHECK(s[1] == 0);
  if (simd != nullptr) {
    std::vector<std::uint8_t> q2(n), s2(n);
    simd->detect_quadrant(edge.data(), q2.data(), n);
    simd->detect_super_outer(edge.data(), d2, s2.data(), n);
    CHECK(q == q2);
    CHECK(s == s2);
  }
}

TEST_CASE("dot product matches a direct sum closely") {
  std::mt19937_64 gen(5);
  const auto a = random_doubles(gen, 1001, 1.0);
  const auto b = random_doubles(gen, 1001, 1.0);
  long double direct = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) direct += static_cast<long double>(a[i]) * b[i];
  CHECK(active().dot(a.data(), b.data(), a.size()) ==
        doctest::Approx(static_cast<double>(direct)).epsilon(1e-12));
}
