#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mingate/transient.hpp"

using namespace mingate;

TEST_CASE("energy is the power-delay product") {
  CHECK(energy_from_power_delay(2.25e-6, 23.0e-12) ==
        doctest::Approx(5.175e-17).epsilon(1e-12));
  CHECK(energy_from_power_delay(0.792e-6, 58.3e-12) ==
        doctest::Approx(4.61736e-17).epsilon(1e-12));
  CHECK(energy_from_power_delay(0.0, 1e-12) == 0.0);
  CHECK_THROWS_AS(energy_from_power_delay(-1.0, 1.0), std::domain_error);
}

TEST_CASE("delay of the RC stage") {
  const RcModel m{1000.0, 0.0, 1.0};
  OperatingPoint op;
  op.c_load_f = 2e-15;
  CHECK(estimate_delay(m, op) ==
        doctest::Approx(1.3862943611198906e-12).epsilon(1e-12));
  // linear in the load
  op.c_load_f = 4e-15;
  CHECK(estimate_delay(m, op) ==
        doctest::Approx(2 * 1.3862943611198906e-12).epsilon(1e-12));
  op.c_load_f = 0.0;
  CHECK(estimate_delay(m, op) == 0.0);
}

TEST_CASE("switched energy per transition") {
  const RcModel m{1000.0, 0.0, 1.0};
  OperatingPoint op;
  op.vdd_v = 0.9;
  op.c_load_f = 2e-15;
  CHECK(estimate_energy(m, op) == doctest::Approx(1.62e-15).epsilon(1e-12));
  op.vdd_v = 0.0;
  CHECK(estimate_energy(m, op) == 0.0);
  // quadratic in vdd
  op.vdd_v = 1.8;
  CHECK(estimate_energy(m, op) == doctest::Approx(4 * 1.62e-15).epsilon(1e-12));
}

TEST_CASE("model validation") {
  OperatingPoint op;
  CHECK_THROWS_AS(estimate_delay(RcModel{0.0, 0.0, 1.0}, op), std::domain_error);
  CHECK_THROWS_AS(estimate_delay(RcModel{1e3, -1e-15, 1.0}, op),
                  std::domain_error);
  CHECK_THROWS_AS(estimate_energy(RcModel{1e3, 0.0, 1.5}, op),
                  std::domain_error);
  CHECK_THROWS_AS(estimate_energy(RcModel{1e3, 0.0, 0.0}, op),
                  std::domain_error);
  op.c_load_f = -1e-15;
  CHECK_THROWS_AS(estimate_delay(RcModel{1e3, 0.0, 1.0}, op),
                  std::domain_error);
}

TEST_CASE("two-point calibration inverts the synthetic model exactly") {
  const std::vector<DelayPoint> pts{{2e-15, 1.3862943611198906e-12},
                                    {4e-15, 2.7725887222397812e-12}};
  const RcModel m = calibrate_delay(pts);
  CHECK(m.r_eff_ohm == doctest::Approx(1000.0).epsilon(1e-9));
  CHECK(m.c_par_f == doctest::Approx(0.0).scale(1e-15).epsilon(1e-9));
}

TEST_CASE("calibration round-trips any positive model") {
  for (double r : {200.0, 1234.5, 8.2e4}) {
    for (double cp : {0.0, 0.4e-15, 3.3e-15}) {
      RcModel truth{r, cp, 1.0};
      std::vector<DelayPoint> pts;
      for (double c = 1e-15; c <= 9e-15; c += 2e-15) {
        OperatingPoint op;
        op.c_load_f = c;
        pts.push_back({c, estimate_delay(truth, op)});
      }
      const RcModel fit = calibrate_delay(pts);
      CHECK(fit.r_eff_ohm == doctest::Approx(r).epsilon(1e-9));
      if (cp == 0.0) {
        CHECK(fit.c_par_f == doctest::Approx(0.0).scale(1e-15).epsilon(1e-9));
      } else {
        CHECK(fit.c_par_f == doctest::Approx(cp).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("calibration rejects degenerate input") {
  CHECK_THROWS_AS(calibrate_delay(std::vector<DelayPoint>{{2e-15, 5e-12}}),
                  std::domain_error);
  // identical load values: no slope information
  CHECK_THROWS_AS(
      calibrate_delay(std::vector<DelayPoint>{{2e-15, 5e-12}, {2e-15, 6e-12}}),
      std::domain_error);
}

TEST_CASE("calibration flags a non-physical fit") {
  // delay falling with load: negative slope has no RC interpretation
  CHECK_THROWS_AS(
      calibrate_delay(std::vector<DelayPoint>{{2e-15, 6e-12}, {4e-15, 5e-12}}),
      std::runtime_error);
  // positive slope but a large negative intercept: c_par < 0
  CHECK_THROWS_AS(
      calibrate_delay(std::vector<DelayPoint>{{2e-15, 1e-13}, {4e-15, 2e-12}}),
      std::runtime_error);
}

TEST_CASE("improvement percentage") {
  CHECK(improvement_pct(49.7, 21.1) ==
        doctest::Approx(57.54527162977867).epsilon(1e-12));
  CHECK(improvement_pct(12.10, 9.29) ==
        doctest::Approx(23.223140495867774).epsilon(1e-12));
  CHECK(improvement_pct(5.0, 5.0) == 0.0);
  CHECK(improvement_pct(5.0, 7.5) == doctest::Approx(-50.0).epsilon(1e-12));
  CHECK_THROWS_AS(improvement_pct(0.0, 1.0), std::domain_error);
}

TEST_CASE("load sweep is affine with the model slope and intercept") {
  const RcModel m{1500.0, 1e-15, 1.0};
  OperatingPoint base;
  std::vector<double> grid;
  for (double c = 2e-15; c <= 20e-15 + 1e-21; c += 2e-15) grid.push_back(c);
  const auto rows = sweep(m, base, SweepAxis::CLoad, grid);
  REQUIRE(rows.size() == 10);
  const double slope = std::numbers::ln2 * m.r_eff_ohm;
  double prev = 0.0;
  for (const SweepRow& r : rows) {
    CHECK(r.delay_s ==
          doctest::Approx(slope * (m.c_par_f + r.param)).epsilon(1e-12));
    CHECK(r.delay_s > prev);
    prev = r.delay_s;
  }
}

TEST_CASE("supply sweep varies only the energy") {
  const RcModel m{1500.0, 1e-15, 1.0};
  OperatingPoint base;
  base.c_load_f = 2e-15;
  const std::vector<double> grid{0.8, 0.9, 1.0};
  const auto rows = sweep(m, base, SweepAxis::Vdd, grid);
  REQUIRE(rows.size() == 3);
  for (const SweepRow& r : rows) {
    CHECK(r.delay_s == rows[0].delay_s);
    CHECK(r.energy_j ==
          doctest::Approx(3e-15 * r.param * r.param).epsilon(1e-12));
  }
  CHECK(rows[0].energy_j < rows[1].energy_j);
  CHECK(rows[1].energy_j < rows[2].energy_j);
}

TEST_CASE("sweep sorts its grid and rejects an empty one") {
  const RcModel m{1500.0, 0.0, 1.0};
  OperatingPoint base;
  const std::vector<double> shuffled{6e-15, 2e-15, 4e-15};
  const auto rows = sweep(m, base, SweepAxis::CLoad, shuffled);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].param == 2e-15);
  CHECK(rows[2].param == 6e-15);
  CHECK_THROWS_AS(sweep(m, base, SweepAxis::CLoad, std::vector<double>{}),
                  std::domain_error);
}
