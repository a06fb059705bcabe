#include "superjam/link_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "superjam/channel.hpp"
#include "superjam/rng.hpp"
#include "superjam/sep_analysis.hpp"

namespace superjam {
namespace {

constexpr std::size_t kChunk = 1 << 16;

// Bob's regenerated codeword, optionally corrupted label by label.
std::vector<ComplexSample> regenerate(const SymbolSeq& y2, double error_prob,
                                      std::uint64_t seed) {
  if (error_prob <= 0.0) return y2.points;
  std::vector<ComplexSample> out(y2.size());
  for (std::size_t i = 0; i < y2.size(); ++i) {
    unsigned label = y2.labels[i];
    const rng::Counter r = rng::block(seed, rng::streams::regen_error, i);
    const double u = rng::to_open_unit((static_cast<std::uint64_t>(r[1]) << 32) | r[0]);
    if (u < error_prob) {
      const std::uint64_t shift = 1 + rng::bounded((static_cast<std::uint64_t>(r[3]) << 32) | r[2], 3);
      label = static_cast<unsigned>((label + shift) % 4);
    }
    out[i] = outer_point(OuterLabel(label));
  }
  return out;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::uint64_t frame_seed(std::uint64_t master, std::uint64_t frame) noexcept {
  return rng::mix64(master ^ rng::mix64(frame));
}

FrameResult transmit_frame(const Image& img, const Codebook& codebook, const LinkConfig& cfg,
                           std::uint64_t frame_index) {
  if (!(cfg.regen_error >= 0.0 && cfg.regen_error <= 1.0)) {
    throw std::invalid_argument("regeneration error probability must lie in [0, 1]");
  }
  const Pac& a = cfg.a;
  const std::uint64_t seed = frame_seed(cfg.master_seed, frame_index);
  const ImageShape shape{img.width, img.height, img.channels};

  // Alice
  const SymbolSeq y1 = encode(img, cfg.codec);
  if (y1.size() != codebook.sequence_length()) {
    throw std::invalid_argument("codebook sequence length " +
                                std::to_string(codebook.sequence_length()) +
                                " does not match codec output length " +
                                std::to_string(y1.size()));
  }
  const CodewordIndex index = pick_index(codebook, frame_seed(cfg.index_seed, frame_index));
  const SymbolSeq& y2 = codebook.lookup(index);
  std::vector<ComplexSample> y(y1.size());
  superpose(y1.points, y2.points, a, y);

  // Bob
  const auto s1 = awgn(y, ChannelSpec{cfg.snr_leg_db, seed, rng::streams::bob_noise});
  const auto y2_hat = regenerate(y2, cfg.regen_error, seed);
  std::vector<ComplexSample> y1_hat(y.size());
  cancel_interference(s1, y2_hat, a, y1_hat);
  std::vector<std::uint8_t> bob_labels(y.size());
  ml_detect_outer(y1_hat, bob_labels);

  // Eve
  const auto s2 = awgn(y, ChannelSpec{cfg.snr_eve_db, seed, rng::streams::eve_noise});
  std::vector<std::uint8_t> eve_labels(y.size());
  eve_detect_outer(s2, a, eve_labels);

  FrameResult out{decode(bob_labels, shape, cfg.codec), decode(eve_labels, shape, cfg.codec), {}};
  LinkReport& r = out.report;
  r.index = index;
  r.symbol_count = y.size();
  r.errors_leg = count_symbol_errors(y1.labels, bob_labels);
  r.errors_eve = count_symbol_errors(y1.labels, eve_labels);
  r.sep_emp_leg = static_cast<double>(r.errors_leg) / static_cast<double>(r.symbol_count);
  r.sep_emp_eve = static_cast<double>(r.errors_eve) / static_cast<double>(r.symbol_count);
  r.psnr_bob = psnr(img, out.bob);
  r.psnr_eve = psnr(img, out.eve);
  return out;
}

CampaignReport run_campaign(std::span<const Image> images, const Codebook& codebook,
                            const LinkConfig& cfg, unsigned workers) {
  if (images.empty()) throw std::invalid_argument("campaign needs at least one image");
  CampaignReport c;
  c.frames.resize(images.size());
  parallel_for(images.size(), workers, [&](std::size_t f) {
    c.frames[f] = transmit_frame(images[f], codebook, cfg, f).report;
  });

  double bob_sum = 0.0;
  double eve_sum = 0.0;
  for (const auto& r : c.frames) {
    c.symbol_count += r.symbol_count;
    c.errors_leg += r.errors_leg;
    c.errors_eve += r.errors_eve;
    if (r.psnr_bob.infinite) ++c.infinite_psnr_bob; else bob_sum += r.psnr_bob.db;
    if (r.psnr_eve.infinite) ++c.infinite_psnr_eve; else eve_sum += r.psnr_eve.db;
  }
  const double n = static_cast<double>(c.symbol_count);
  c.sep_emp_leg = static_cast<double>(c.errors_leg) / n;
  c.sep_emp_eve = static_cast<double>(c.errors_eve) / n;
  const std::size_t finite_bob = c.frames.size() - c.infinite_psnr_bob;
  const std::size_t finite_eve = c.frames.size() - c.infinite_psnr_eve;
  c.mean_psnr_bob_db = finite_bob ? bob_sum / static_cast<double>(finite_bob) : 0.0;
  c.mean_psnr_eve_db = finite_eve ? eve_sum / static_cast<double>(finite_eve) : 0.0;
  return c;
}

double SimulationResult::halfwidth_leg() const {
  return binomial_halfwidth3(sep_leg_analytic, symbols);
}
double SimulationResult::halfwidth_eve() const {
  return binomial_halfwidth3(sep_eve_analytic, symbols);
}
bool SimulationResult::leg_within() const {
  return std::abs(sep_leg_empirical() - sep_leg_analytic) <= halfwidth_leg();
}
bool SimulationResult::eve_within() const {
  return std::abs(sep_eve_empirical() - sep_eve_analytic) <= halfwidth_eve();
}

SimulationResult simulate_sep(const SimulationConfig& cfg) {
  if (cfg.symbols == 0) throw std::invalid_argument("simulation needs at least one symbol");
  const Pac& a = cfg.a;
  const std::size_t chunks = (cfg.symbols + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> leg_errors(chunks, 0);
  std::vector<std::uint64_t> eve_errors(chunks, 0);

  parallel_for(chunks, cfg.workers, [&](std::size_t c) {
    const std::uint64_t first = c * kChunk;
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, cfg.symbols - first));
    std::vector<std::uint8_t> outer(n);
    std::vector<ComplexSample> y1(n), y2(n), y(n), s(n), y1_hat(n);
    for (std::size_t i = 0; i < n; ++i) {
      const rng::Counter r = rng::block(cfg.seed, rng::streams::symbol_labels, first + i);
      outer[i] = static_cast<std::uint8_t>(r[0] & 3u);
      y1[i] = outer_point(OuterLabel(outer[i]));
      y2[i] = outer_point(OuterLabel(r[1] & 3u));
    }
    superpose(y1, y2, a, y);
    std::vector<std::uint8_t> detected(n);

    awgn(y, ChannelSpec{cfg.snr_leg_db, cfg.seed, rng::streams::bob_noise}, s, first);
    cancel_interference(s, y2, a, y1_hat);
    ml_detect_outer(y1_hat, detected);
    leg_errors[c] = count_symbol_errors(outer, detected);

    awgn(y, ChannelSpec{cfg.snr_eve_db, cfg.seed, rng::streams::eve_noise}, s, first);
    eve_detect_outer(s, a, detected);
    eve_errors[c] = count_symbol_errors(outer, detected);
  });

  SimulationResult r;
  r.symbols = cfg.symbols;
  for (std::size_t c = 0; c < chunks; ++c) {
    r.errors_leg += leg_errors[c];
    r.errors_eve += eve_errors[c];
  }
  r.sep_leg_analytic = sep_legitimate(a, sigma_from_snr(cfg.snr_leg_db));
  r.sep_eve_analytic = sep_eavesdropper(a, sigma_from_snr(cfg.snr_eve_db));
  return r;
}

}  // namespace superjam
