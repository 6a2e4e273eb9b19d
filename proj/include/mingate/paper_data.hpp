#ifndef MINGATE_PAPER_DATA_HPP
#define MINGATE_PAPER_DATA_HPP

#include <string>
#include <vector>

namespace mingate {

/// One row of the bundled reference measurements for the 7-input gate.
/// param is the swept quantity in SI units (Hz or V); the metrics are in
/// seconds, watts and joules.
struct ReferenceRow {
  double param = 0.0;
  double delay_s = 0.0;
  double power_w = 0.0;
  double energy_j = 0.0;
};

/// Conventional-vs-proposed 4-input NAND comparison row (SI units).
struct NandCompareRow {
  double vdd_v = 0.0;
  double delay_conventional_s = 0.0;
  double delay_proposed_s = 0.0;
  double energy_conventional_j = 0.0;
  double energy_proposed_j = 0.0;
};

struct ReferenceTables {
  std::vector<ReferenceRow> vs_frequency;  // table3: sweep over frequency
  std::vector<ReferenceRow> vs_supply;     // table4: sweep over vdd
  std::vector<NandCompareRow> nand_comparison;  // table5
};

/// Location of the bundled data file: the MINGATE_DATA environment
/// variable when set, otherwise the path compiled in from the source tree.
std::string default_reference_path();

ReferenceTables load_reference_tables(const std::string& path);
ReferenceTables load_reference_tables();  // from default_reference_path()

/// Largest relative |power*delay - energy| / energy over the rows.
double max_energy_residual(const std::vector<ReferenceRow>& rows);

}  // namespace mingate

#endif
