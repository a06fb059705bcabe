#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "superjam/codec.hpp"
#include "superjam/constellation.hpp"
#include "superjam/jamming_codebook.hpp"
#include "superjam/metrics.hpp"

namespace superjam {

struct LinkConfig {
  Pac a{0.49};
  double snr_leg_db = 10.0;
  double snr_eve_db = 10.0;
  std::uint64_t master_seed = 0;
  CodecSpec codec = CodecSpec::raw();
  std::uint64_t index_seed = 0;
  /// Probability that Bob's regenerated jamming label is replaced by one of
  /// the three wrong labels. 0 means exact regeneration.
  double regen_error = 0.0;
};

struct LinkReport {
  CodewordIndex index{0};
  double sep_emp_leg = 0.0;
  double sep_emp_eve = 0.0;
  PsnrValue psnr_bob;
  PsnrValue psnr_eve;
  std::size_t symbol_count = 0;
  std::size_t errors_leg = 0;
  std::size_t errors_eve = 0;

  friend bool operator==(const LinkReport&, const LinkReport&) = default;
};

struct FrameResult {
  Image bob;
  Image eve;
  LinkReport report;
};

/// Seed used for frame f of a run with the given master seed.
std::uint64_t frame_seed(std::uint64_t master, std::uint64_t frame) noexcept;

/// Alice encodes the image and superposes a codeword picked from the codebook;
/// Bob cancels the regenerated codeword and takes quadrant decisions; Eve
/// applies the 16-point ML detector and keeps the outer bits. Both paths see
/// independent AWGN. Throws std::invalid_argument when the codebook sequence
/// length differs from the codec output length.
FrameResult transmit_frame(const Image& img, const Codebook& codebook, const LinkConfig& cfg,
                           std::uint64_t frame_index = 0);

struct CampaignReport {
  std::vector<LinkReport> frames;
  std::size_t symbol_count = 0;
  std::size_t errors_leg = 0;
  std::size_t errors_eve = 0;
  double sep_emp_leg = 0.0;
  double sep_emp_eve = 0.0;
  /// Means over frames with finite PSNR; the infinite ones are counted.
  double mean_psnr_bob_db = 0.0;
  double mean_psnr_eve_db = 0.0;
  std::size_t infinite_psnr_bob = 0;
  std::size_t infinite_psnr_eve = 0;
};

/// Frames use frame_seed(master, frame index) and may run on several workers;
/// the result does not depend on the worker count.
CampaignReport run_campaign(std::span<const Image> images, const Codebook& codebook,
                            const LinkConfig& cfg, unsigned workers = 1);

struct SimulationConfig {
  Pac a{0.49};
  double snr_leg_db = 10.0;
  double snr_eve_db = 10.0;
  std::uint64_t symbols = 1'000'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct SimulationResult {
  std::uint64_t symbols = 0;
  std::uint64_t errors_leg = 0;
  std::uint64_t errors_eve = 0;
  double sep_leg_analytic = 0.0;
  double sep_eve_analytic = 0.0;

  double sep_leg_empirical() const { return static_cast<double>(errors_leg) / symbols; }
  double sep_eve_empirical() const { return static_cast<double>(errors_eve) / symbols; }
  double halfwidth_leg() const;
  double halfwidth_eve() const;
  bool leg_within() const;
  bool eve_within() const;
};

/// Symbol-level Monte Carlo with uniform outer and inner labels. Symbol i
/// draws its labels and both noise samples from (seed, i) alone, so any
/// partition across workers gives identical counts.
SimulationResult simulate_sep(const SimulationConfig& cfg);

}  // namespace superjam
