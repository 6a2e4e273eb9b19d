#include "mingate/paper_data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace mingate {

namespace {

using nlohmann::json;

constexpr double kPs = 1e-12;
constexpr double kUw = 1e-6;
constexpr double kE17j = 1e-17;
constexpr double kMhz = 1e6;

double field(const json& row, const char* key) {
  if (!row.contains(key) || !row[key].is_number()) {
    throw std::runtime_error(std::string("reference table row missing field: ") + key);
  }
  return row[key].get<double>();
}

}  // namespace

std::string default_reference_path() {
  if (const char* env = std::getenv("MINGATE_DATA")) {
    return std::string(env) + "/paper_tables.json";
  }
#ifdef MINGATE_DATA_DIR
  return std::string(MINGATE_DATA_DIR) + "/paper_tables.json";
#else
  return "data/paper_tables.json";
#endif
}

ReferenceTables load_reference_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open reference data file: " + path);
  }
  json doc = json::parse(in);

  ReferenceTables t;
  for (const json& row : doc.at("table3_minority_vs_frequency")) {
    t.vs_frequency.push_back({field(row, "frequency_mhz") * kMhz,
                              field(row, "delay_ps") * kPs,
                              field(row, "power_uw") * kUw,
                              field(row, "energy_e17j") * kE17j});
  }
  for (const json& row : doc.at("table4_minority_vs_vdd")) {
    t.vs_supply.push_back({field(row, "vdd_v"), field(row, "delay_ps") * kPs,
                           field(row, "power_uw") * kUw,
                           field(row, "energy_e17j") * kE17j});
  }
  for (const json& row : doc.at("table5_nand_comparison")) {
    t.nand_comparison.push_back({field(row, "vdd_v"),
                                 field(row, "delay_conventional_ps") * kPs,
                                 field(row, "delay_proposed_ps") * kPs,
                                 field(row, "energy_conventional_e17j") * kE17j,
                                 field(row, "energy_proposed_e17j") * kE17j});
  }
  if (t.vs_frequency.empty() || t.vs_supply.empty() || t.nand_comparison.empty()) {
    throw std::runtime_error("reference data file has empty tables");
  }
  return t;
}

ReferenceTables load_reference_tables() {
  return load_reference_tables(default_reference_path());
}

double max_energy_residual(const std::vector<ReferenceRow>& rows) {
  double worst = 0.0;
  for (const ReferenceRow& r : rows) {
    const double residual =
        std::abs(r.power_w * r.delay_s - r.energy_j) / r.energy_j;
    worst = std::max(worst, residual);
  }
  return worst;
}

}  // namespace mingate
