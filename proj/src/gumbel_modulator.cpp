#include "superjam/gumbel_modulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "superjam/rng.hpp"

namespace superjam {
namespace {

constexpr double kClamp = 1e-15;

void check_logits(const CategoryLogits& z) {
  for (double v : z) {
    if (!std::isfinite(v)) throw std::invalid_argument("logits must be finite");
  }
}

}  // namespace

Temperature::Temperature(double tau) : tau_(tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be positive");
}

std::array<double, 4> gumbel_deviates(SampleKey key) noexcept {
  const auto [u0, u1] = rng::uniform_pair(key.seed, rng::streams::gumbel, 2 * key.index);
  const auto [u2, u3] = rng::uniform_pair(key.seed, rng::streams::gumbel, 2 * key.index + 1);
  std::array<double, 4> g{u0, u1, u2, u3};
  for (double& v : g) {
    const double u = std::clamp(v, kClamp, 1.0 - kClamp);
    v = -std::log(-std::log(u));
  }
  return g;
}

CategoryProbs softmax(const CategoryLogits& z) noexcept {
  const double m = *std::max_element(z.begin(), z.end());
  CategoryProbs p{};
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    p[i] = std::exp(z[i] - m);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

CategoryProbs gumbel_softmax_sample(const CategoryLogits& logits, Temperature tau,
                                    SampleKey key) {
  check_logits(logits);
  const auto g = gumbel_deviates(key);
  CategoryLogits z{};
  for (std::size_t i = 0; i < 4; ++i) z[i] = (logits[i] + g[i]) / tau.value();
  return softmax(z);
}

unsigned hard_sample(const CategoryLogits& logits, SampleKey key) {
  check_logits(logits);
  const auto g = gumbel_deviates(key);
  unsigned best = 0;
  double best_value = logits[0] + g[0];
  for (unsigned i = 1; i < 4; ++i) {
    const double v = logits[i] + g[i];
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }
  return best;
}

ComplexSample category_to_symbol(unsigned c) {
  static constexpr double s = 0.70710678118654752440;
  switch (c) {
    case 0: return {s, s};
    case 1: return {s, -s};
    case 2: return {-s, s};
    case 3: return {-s, -s};
    default: throw std::invalid_argument("category must be in {0, 1, 2, 3}");
  }
}

}  // namespace superjam
