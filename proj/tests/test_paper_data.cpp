#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "mingate/paper_data.hpp"
#include "mingate/transient.hpp"

using namespace mingate;

TEST_CASE("bundled tables load with SI units") {
  const ReferenceTables t = load_reference_tables();
  REQUIRE(t.vs_frequency.size() == 3);
  REQUIRE(t.vs_supply.size() == 3);
  REQUIRE(t.nand_comparison.size() == 3);

  // 250 MHz row of the frequency table
  CHECK(t.vs_frequency[0].param == doctest::Approx(250e6).epsilon(1e-12));
  CHECK(t.vs_frequency[0].delay_s == doctest::Approx(23.0e-12).epsilon(1e-12));
  CHECK(t.vs_frequency[0].power_w == doctest::Approx(2.25e-6).epsilon(1e-12));
  CHECK(t.vs_frequency[0].energy_j == doctest::Approx(5.18e-17).epsilon(1e-12));

  // 0.8 V row of the supply table
  CHECK(t.vs_supply[0].param == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(t.vs_supply[0].delay_s == doctest::Approx(58.3e-12).epsilon(1e-12));

  // 0.9 V row of the comparison table
  CHECK(t.nand_comparison[1].vdd_v == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(t.nand_comparison[1].delay_conventional_s ==
        doctest::Approx(49.7e-12).epsilon(1e-12));
  CHECK(t.nand_comparison[1].delay_proposed_s ==
        doctest::Approx(21.1e-12).epsilon(1e-12));
  CHECK(t.nand_comparison[1].energy_conventional_j ==
        doctest::Approx(12.1e-17).epsilon(1e-12));
  CHECK(t.nand_comparison[1].energy_proposed_j ==
        doctest::Approx(9.29e-17).epsilon(1e-12));
}

TEST_CASE("energy equals power times delay on every stored row") {
  const ReferenceTables t = load_reference_tables();
  CHECK(max_energy_residual(t.vs_frequency) <= 0.01);
  CHECK(max_energy_residual(t.vs_supply) <= 0.01);
  for (const ReferenceRow& r : t.vs_frequency) {
    const double product = energy_from_power_delay(r.power_w, r.delay_s);
    CHECK(product == doctest::Approx(r.energy_j).epsilon(0.01));
  }
}

TEST_CASE("stored delay falls as the supply rises") {
  const ReferenceTables t = load_reference_tables();
  for (std::size_t i = 1; i < t.vs_supply.size(); ++i) {
    CHECK(t.vs_supply[i].param > t.vs_supply[i - 1].param);
    CHECK(t.vs_supply[i].delay_s < t.vs_supply[i - 1].delay_s);
  }
  // the proposed gate stays ahead of the conventional one on every row
  for (const NandCompareRow& r : t.nand_comparison) {
    CHECK(r.delay_proposed_s < r.delay_conventional_s);
    CHECK(r.energy_proposed_j < r.energy_conventional_j);
  }
}

TEST_CASE("published improvement claims at nominal supply") {
  const ReferenceTables t = load_reference_tables();
  const NandCompareRow& row = t.nand_comparison[1];
  const double delay_gain =
      improvement_pct(row.delay_conventional_s, row.delay_proposed_s);
  const double energy_gain =
      improvement_pct(row.energy_conventional_j, row.energy_proposed_j);
  // the published rounded rows land within 1.5 points of the claims
  CHECK(std::abs(delay_gain - 57.67) <= 1.5);
  CHECK(std::abs(energy_gain - 22.67) <= 1.5);
  // frozen values of the recomputation itself
  CHECK(delay_gain == doctest::Approx(57.54527162977867).epsilon(1e-12));
  CHECK(energy_gain == doctest::Approx(23.223140495867774).epsilon(1e-12));
}

TEST_CASE("loader rejects malformed files") {
  CHECK_THROWS_AS(load_reference_tables("/nonexistent/tables.json"),
                  std::runtime_error);
  const char* dir = std::getenv("TMPDIR");
  const std::string base = dir ? dir : "/tmp";
  const std::string bad = base + "/mingate_bad_tables.json";
  {
    std::ofstream out(bad);
    out << "{ \"table3_minority_vs_frequency\": [ { \"frequency_mhz\": 250 } ] }";
  }
  CHECK_THROWS_AS(load_reference_tables(bad), std::runtime_error);
  std::remove(bad.c_str());
}
