#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superjam/channel.hpp"
#include "superjam/constellation.hpp"

namespace superjam {

/// Gaussian upper tail, 0.5 * erfc(x / sqrt(2)).
double q_function(double x) noexcept;

/// Outer-symbol error probability after ideal interference cancellation:
/// 1 - Q(-d1 / sigma)^2.
double sep_legitimate(const Pac& a, NoiseSigma sigma);

/// Probability that the 16-point ML detector lands in a region whose outer
/// bits equal the transmitted outer bits, integrated over the rectangle
/// regions around the exact transmitted point.
double eve_correct_probability(SuperLabel transmitted, const Pac& a, NoiseSigma sigma);

/// Per-region terms of eve_correct_probability for inner 00 and the given
/// outer label, indexed by the region's inner bits. Rectangle-integration path.
std::array<double, 4> eve_region_terms_rectangle(OuterLabel outer, const Pac& a,
                                                 NoiseSigma sigma);

/// The same four terms written as explicit Q-function products in the
/// d1/d2 form (edge, inner, and cross-boundary strips per axis).
std::array<double, 4> eve_region_terms_closed_form(OuterLabel outer, const Pac& a,
                                                   NoiseSigma sigma);

/// 1 - mean over the four outer symbols of the correct-decision probability,
/// with inner symbol 00 transmitted.
double sep_eavesdropper(const Pac& a, NoiseSigma sigma);

/// Same quantity from the closed-form terms.
double sep_eavesdropper_closed_form(const Pac& a, NoiseSigma sigma);

struct SepPoint {
  double a;
  double snr_db;
  double sep_leg;
  double sep_eve;
};

struct SepCurve {
  double snr_db;
  std::vector<SepPoint> points;
};

/// Throws std::invalid_argument unless the grid is strictly increasing and
/// inside (0, 0.5).
SepCurve sweep_curve(double snr_db, const std::vector<double>& a_grid);

/// steps evenly spaced values from a_min to a_max inclusive.
std::vector<double> linear_grid(double a_min, double a_max, int steps);

enum class BindingConstraint { min_eve_sep, max_leg_sep };

class InfeasiblePlan : public std::runtime_error {
 public:
  InfeasiblePlan(BindingConstraint binding, const std::string& what)
      : std::runtime_error(what), binding_(binding) {}
  BindingConstraint binding() const noexcept { return binding_; }

 private:
  BindingConstraint binding_;
};

struct PacPlan {
  Pac a;
  double sep_leg;
  double sep_eve;
};

inline constexpr double kPlanResolution = 1e-4;

/// Largest a on the 1e-4 grid over (0, 0.5) whose eavesdropper SEP is at
/// least min_eve_sep and, when given, whose legitimate SEP is at most
/// max_leg_sep. Throws InfeasiblePlan naming the constraint that cannot be met.
PacPlan plan_pac(double snr_db, double min_eve_sep,
                 std::optional<double> max_leg_sep = std::nullopt);

}  // namespace superjam
