#include "superjam/sep_analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace superjam {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Interval {
  double lo;
  double hi;
};

// Decision interval on one axis for the given inner/outer sign bits.
Interval axis_region(bool inner_negative, bool outer_negative, double d2) {
  if (!inner_negative) return outer_negative ? Interval{0.0, d2} : Interval{d2, kInf};
  return outer_negative ? Interval{-kInf, -d2} : Interval{-d2, 0.0};
}

// P(lo <= c + n < hi) for n ~ N(0, sigma^2).
double interval_probability(Interval r, double c, double sigma) {
  return q_function((r.lo - c) / sigma) - q_function((r.hi - c) / sigma);
}

double region_probability(SuperLabel region, ComplexSample point, double d2, double sigma) {
  const unsigned inner = region.inner().bits();
  const unsigned outer = region.outer().bits();
  const Interval re = axis_region(inner & 1, outer & 1, d2);
  const Interval im = axis_region(inner & 2, outer & 2, d2);
  return interval_probability(re, point.real(), sigma) *
         interval_probability(im, point.imag(), sigma);
}

}  // namespace

double q_function(double x) noexcept { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double sep_legitimate(const Pac& a, NoiseSigma sigma) {
  const double p = q_function(-a.d1() / sigma.value());
  return 1.0 - p * p;
}

double eve_correct_probability(SuperLabel transmitted, const Pac& a, NoiseSigma sigma) {
  const ComplexSample point = super_point(transmitted, a);
  const double d2 = a.d2();
  double total = 0.0;
  for (unsigned inner = 0; inner < 4; ++inner) {
    total += region_probability({OuterLabel(inner), transmitted.outer()}, point, d2,
                                sigma.value());
  }
  return total;
}

std::array<double, 4> eve_region_terms_rectangle(OuterLabel outer, const Pac& a,
                                                 NoiseSigma sigma) {
  const ComplexSample point = super_point({OuterLabel(0), outer}, a);
  std::array<double, 4> terms{};
  for (unsigned inner = 0; inner < 4; ++inner) {
    terms[inner] = region_probability({OuterLabel(inner), outer}, point, a.d2(), sigma.value());
  }
  return terms;
}

std::array<double, 4> eve_region_terms_closed_form(OuterLabel outer, const Pac& a,
                                                   NoiseSigma sigma) {
  const double d1 = a.d1();
  const double d2 = a.d2();
  const double s = sigma.value();
  const auto Q = [](double x) { return q_function(x); };

  // With inner 00 sent, an axis whose outer bit is positive sits at d2 + d1
  // ("far"), otherwise at d2 - d1 ("near"). Each factor is the probability
  // of the correct-outer strip on the same or the opposite inner side.
  const double far_same = Q(-d1 / s);
  const double far_opposite = Q(-(d1 + 2 * d2) / s) - Q(-(d1 + d2) / s);
  const double near_same = Q(-(d2 - d1) / s) - Q(d1 / s);
  const double near_opposite = Q((2 * d2 - d1) / s);

  const bool re_near = outer.bits() & 1;
  const bool im_near = outer.bits() & 2;
  std::array<double, 4> terms{};
  for (unsigned inner = 0; inner < 4; ++inner) {
    const bool re_opposite = inner & 1;
    const bool im_opposite = inner & 2;
    const double fr = re_near ? (re_opposite ? near_opposite : near_same)
                              : (re_opposite ? far_opposite : far_same);
    const double fi = im_near ? (im_opposite ? near_opposite : near_same)
                              : (im_opposite ? far_opposite : far_same);
    terms[inner] = fr * fi;
  }
  return terms;
}

double sep_eavesdropper(const Pac& a, NoiseSigma sigma) {
  double correct = 0.0;
  for (unsigned outer = 0; outer < 4; ++outer) {
    correct += eve_correct_probability({OuterLabel(0), OuterLabel(outer)}, a, sigma);
  }
  return 1.0 - correct / 4.0;
}

double sep_eavesdropper_closed_form(const Pac& a, NoiseSigma sigma) {
  double correct = 0.0;
  for (unsigned outer = 0; outer < 4; ++outer) {
    for (double t : eve_region_terms_closed_form(OuterLabel(outer), a, sigma)) correct += t;
  }
  return 1.0 - correct / 4.0;
}

std::vector<double> linear_grid(double a_min, double a_max, int steps) {
  if (steps < 2) throw std::invalid_argument("grid needs at least 2 steps");
  if (!(a_min < a_max)) throw std::invalid_argument("grid requires a_min < a_max");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        i == steps - 1 ? a_max : a_min + (a_max - a_min) * i / (steps - 1);
  }
  return grid;
}

SepCurve sweep_curve(double snr_db, const std::vector<double>& a_grid) {
  const NoiseSigma sigma = sigma_from_snr(snr_db);
  SepCurve curve{snr_db, {}};
  curve.points.reserve(a_grid.size());
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    if (i > 0 && !(a_grid[i] > a_grid[i - 1])) {
      throw std::invalid_argument("PAC grid must be strictly increasing");
    }
    const Pac a(a_grid[i]);
    curve.points.push_back({a.value(), snr_db, sep_legitimate(a, sigma), sep_eavesdropper(a, sigma)});
  }
  return curve;
}

PacPlan plan_pac(double snr_db, double min_eve_sep, std::optional<double> max_leg_sep) {
  if (!(min_eve_sep >= 0.0 && min_eve_sep < 1.0)) {
    throw std::invalid_argument("min_eve_sep must lie in [0, 1)");
  }
  if (max_leg_sep && !(*max_leg_sep >= 0.0 && *max_leg_sep <= 1.0)) {
    throw std::invalid_argument("max_leg_sep must lie in [0, 1]");
  }
  const NoiseSigma sigma = sigma_from_snr(snr_db);
  const int top = static_cast<int>(std::lround(0.5 / kPlanResolution)) - 1;

  bool eve_feasible_somewhere = false;
  double best_eve = 0.0;
  double best_leg_among_eve_ok = 1.0;
  for (int k = top; k >= 1; --k) {
    const Pac a(k / 10000.0);
    const double eve = sep_eavesdropper(a, sigma);
    best_eve = std::max(best_eve, eve);
    if (eve < min_eve_sep) continue;
    eve_feasible_somewhere = true;
    const double leg = sep_legitimate(a, sigma);
    best_leg_among_eve_ok = std::min(best_leg_among_eve_ok, leg);
    if (max_leg_sep && leg > *max_leg_sep) continue;
    return {a, leg, eve};
  }

  std::ostringstream msg;
  msg.precision(6);
  if (!eve_feasible_somewhere) {
    msg << "infeasible: min_eve_sep " << min_eve_sep << " exceeds the largest eavesdropper SEP "
        << best_eve << " reachable at " << snr_db << " dB";
    throw InfeasiblePlan(BindingConstraint::min_eve_sep, msg.str());
  }
  msg << "infeasible: max_leg_sep " << *max_leg_sep
      << " is below the smallest legitimate SEP " << best_leg_among_eve_ok
      << " among PACs meeting min_eve_sep " << min_eve_sep;
  throw InfeasiblePlan(BindingConstraint::max_leg_sep, msg.str());
}

}  // namespace superjam
