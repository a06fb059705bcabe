#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace superjam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;

struct SepCurveOptions {
  double snr_db = 10.0;
  double a_min = 0.01;
  double a_max = 0.49;
  int steps = 97;
  std::string out;  // empty: standard output
  std::string svg;
};

struct PacPlanOptions {
  double snr_db = 10.0;
  double min_eve_sep = 0.0;
  std::optional<double> max_leg_sep;
};

struct SimulateOptions {
  double a = 0.49;
  double snr_leg_db = 10.0;
  double snr_eve_db = 10.0;
  std::int64_t symbols = 1'000'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string out;
};

struct TransmitOptions {
  std::string image;
  std::string kb;
  double a = 0.49;
  double snr_leg_db = 10.0;
  double snr_eve_db = 10.0;
  std::uint64_t seed = 0;
  std::uint64_t index_seed = 0;
  std::string codec = "raw";
  double regen_error = 0.0;
  std::string out_bob;
  std::string out_eve;
  std::string report;
};

struct NhsicOptions {
  std::string x;
  std::string y;
  bool uncentered = false;
};

// Each command validates its options, prints errors to stderr, and returns
// the process exit code.
int sep_curve(const SepCurveOptions& o);
int pac_plan(const PacPlanOptions& o);
int simulate(const SimulateOptions& o);
int transmit(const TransmitOptions& o);
int nhsic(const NhsicOptions& o);

/// SUPERJAM_SEED when set, else 0.
std::uint64_t default_seed();

}  // namespace superjam::cli
