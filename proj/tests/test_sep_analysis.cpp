#include <doctest.h>

#include <cmath>
#include <vector>

#include "superjam/link_pipeline.hpp"
#include "superjam/sep_analysis.hpp"

using namespace superjam;

namespace {

NoiseSigma at_db(double snr) { return sigma_from_snr(snr); }

}  // namespace

TEST_CASE("q_function against high-precision quadrature") {
  // Reference values from 40-digit numerical integration of the Gaussian tail.
  const std::pair<double, double> table[] = {
      {-8.0, 0.9999999999999993779},     {-3.0, 0.99865010196836990547},
      {-1.5, 0.933192798731141934},      {-0.5, 0.69146246127401310364},
      {0.5, 0.30853753872598689636},     {1.0, 0.15865525393145705141},
      {2.0, 0.0227501319481792072},      {3.5, 0.00023262907903552503635},
      {5.0, 2.8665157187919391167e-7},   {8.0, 6.2209605742717841235e-16},
  };
  for (auto [x, q] : table) {
    CAPTURE(x);
    CHECK(std::abs(q_function(x) - q) / q <= 1e-12);
  }
  CHECK(q_function(0.0) == 0.5);
  CHECK(q_function(40.0) < 1e-300);
}

TEST_CASE("legitimate SEP operating points") {
  CHECK(std::abs(sep_legitimate(Pac(0.49), at_db(10)) - 0.1133) <= 0.002);
  CHECK(std::abs(sep_legitimate(Pac(0.40), at_db(10)) - 0.1514) <= 0.002);
  for (double a : {0.01, 0.2, 0.49}) CHECK(sep_legitimate(Pac(a), at_db(60)) < 1e-12);
}

TEST_CASE("eavesdropper SEP operating points") {
  CHECK(std::abs(sep_eavesdropper(Pac(0.49), at_db(10)) - 0.4766) <= 0.005);
  CHECK(std::abs(sep_eavesdropper(Pac(0.40), at_db(10)) - 0.4463) <= 0.005);
}

TEST_CASE("rectangle and closed-form eavesdropper terms agree") {
  const Pac a(0.30);
  const NoiseSigma s = at_db(5);
  for (unsigned o = 0; o < 4; ++o) {
    const auto r = eve_region_terms_rectangle(OuterLabel(o), a, s);
    const auto c = eve_region_terms_closed_form(OuterLabel(o), a, s);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(r[k] - c[k]) <= 1e-12);
  }
  CHECK(std::abs(sep_eavesdropper(a, s) - sep_eavesdropper_closed_form(a, s)) <= 1e-12);
}

TEST_CASE("correct-decision probability depends only on the inner/outer sign pattern") {
  // Flipping the same axis of both labels mirrors the constellation.
  for (double av : {0.1, 0.3, 0.49}) {
    const Pac a(av);
    const NoiseSigma s = at_db(7);
    for (unsigned o = 0; o < 4; ++o) {
      const double ref = eve_correct_probability({OuterLabel(0), OuterLabel(o)}, a, s);
      for (unsigned i = 1; i < 4; ++i) {
        CHECK(std::abs(eve_correct_probability({OuterLabel(i), OuterLabel(o ^ i)}, a, s) - ref) <=
              1e-14);
      }
    }
  }
}

TEST_CASE("the four correct-region terms sum to a probability below 1") {
  const auto t = eve_region_terms_rectangle(OuterLabel(2), Pac(0.49), at_db(10));
  double sum = 0;
  for (double v : t) {
    CHECK(v >= 0.0);
    sum += v;
  }
  CHECK(sum < 1.0);
}

TEST_CASE("SEP monotonicity and bounds") {
  const NoiseSigma s = at_db(10);
  double prev = 1.0;
  for (int k = 1; k < 500; ++k) {
    const Pac a(k / 1000.0);
    const double leg = sep_legitimate(a, s);
    const double eve = sep_eavesdropper(a, s);
    CHECK(leg < prev);
    prev = leg;
    CHECK(eve >= leg);
    CHECK((leg >= 0.0 && leg <= 1.0));
    CHECK((eve >= 0.0 && eve <= 1.0));
  }
  double prev_sigma = 0.0;
  for (double snr = 20; snr >= -10; snr -= 1) {
    const double leg = sep_legitimate(Pac(0.3), at_db(snr));
    CHECK(leg > prev_sigma);
    prev_sigma = leg;
  }
}

TEST_CASE("sweep_curve") {
  const SepCurve c = sweep_curve(10, {0.40, 0.49});
  REQUIRE(c.points.size() == 2);
  CHECK(std::abs(c.points[0].sep_leg - 0.1514) <= 0.002);
  CHECK(std::abs(c.points[0].sep_eve - 0.4463) <= 0.005);
  CHECK(std::abs(c.points[1].sep_leg - 0.1133) <= 0.002);
  CHECK(std::abs(c.points[1].sep_eve - 0.4766) <= 0.005);

  CHECK_THROWS_AS(sweep_curve(10, {0.2, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_curve(10, {0.0, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_curve(10, {0.3, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_curve(10, {0.3, 0.3}), std::invalid_argument);
}

TEST_CASE("sweep at 0.005 steps: eavesdropper SEP has an interior minimum") {
  std::vector<double> grid;
  for (int k = 1; k <= 99; ++k) grid.push_back(0.005 * k);
  const SepCurve c = sweep_curve(10, grid);
  std::size_t arg = 0;
  for (std::size_t i = 1; i < c.points.size(); ++i) {
    if (c.points[i].sep_eve < c.points[arg].sep_eve) arg = i;
    CHECK(c.points[i].sep_leg < c.points[i - 1].sep_leg);
  }
  CHECK(arg > 0);
  CHECK(arg + 1 < c.points.size());
}

TEST_CASE("linear_grid") {
  const auto g = linear_grid(0.1, 0.4, 4);
  REQUIRE(g.size() == 4);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 0.4);
  CHECK(g[1] == doctest::Approx(0.2));
  CHECK_THROWS_AS(linear_grid(0.1, 0.4, 1), std::invalid_argument);
}

TEST_CASE("plan_pac against a grid-sweep oracle") {
  // Independent sweep: largest k/10000 meeting the floor.
  const NoiseSigma s = at_db(10);
  int expected = 0;
  for (int k = 4999; k >= 1; --k) {
    if (sep_eavesdropper(Pac(k / 10000.0), s) >= 0.47) {
      expected = k;
      break;
    }
  }
  const PacPlan plan = plan_pac(10, 0.47);
  CHECK(plan.a.value() == expected / 10000.0);
  CHECK(plan.a.value() >= 0.47);
  CHECK(plan.a.value() <= 0.4999);
  CHECK(plan.sep_eve >= 0.47);

  CHECK(plan_pac(10, 0.0).a.value() == 0.4999);
}

TEST_CASE("plan_pac reports the binding constraint") {
  try {
    plan_pac(10, 0.99);
    FAIL("expected infeasible");
  } catch (const InfeasiblePlan& e) {
    CHECK(e.binding() == BindingConstraint::min_eve_sep);
  }
  try {
    plan_pac(10, 0.47, 0.01);
    FAIL("expected infeasible");
  } catch (const InfeasiblePlan& e) {
    CHECK(e.binding() == BindingConstraint::max_leg_sep);
  }
  // Security floor met only at small a forces a larger legitimate SEP.
  const PacPlan low = plan_pac(10, 0.6);
  CHECK(low.a.value() < 0.1);
  CHECK(low.sep_eve >= 0.6);
  CHECK_THROWS_AS(plan_pac(10, 1.0), std::invalid_argument);
}
