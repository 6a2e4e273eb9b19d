#ifndef MINGATE_TRANSIENT_HPP
#define MINGATE_TRANSIENT_HPP

#include <span>
#include <vector>

namespace mingate {

/// First-order RC abstraction of the driving inverter: one effective
/// resistance into the parasitic-plus-load capacitance, with a switching
/// activity factor for the energy term.
struct RcModel {
  double r_eff_ohm = 0.0;
  double c_par_f = 0.0;
  double alpha = 1.0;  // activity factor in (0, 1]
};

struct OperatingPoint {
  double vdd_v = 0.9;
  double c_load_f = 2e-15;
  double frequency_hz = 250e6;
};

/// Per-run performance triple; energy = avg_power * delay by definition.
struct Metrics {
  double delay_s = 0.0;
  double avg_power_w = 0.0;
  double energy_j = 0.0;
};

/// Energy as the power-delay product.
double energy_from_power_delay(double power_w, double delay_s);

/// 50% step response of the RC stage: ln(2) * r_eff * (c_par + c_load).
double estimate_delay(const RcModel& m, const OperatingPoint& op);

/// Switched energy per transition: alpha * (c_par + c_load) * vdd^2.
double estimate_energy(const RcModel& m, const OperatingPoint& op);

struct DelayPoint {
  double c_load_f = 0.0;
  double delay_s = 0.0;
};

/// Least-squares fit of delay = a + b * c_load, inverted to
/// r_eff = b / ln(2) and c_par = a / b. Needs two distinct load values;
/// a negative fitted parameter is reported as model-inapplicable
/// (std::runtime_error).
RcModel calibrate_delay(std::span<const DelayPoint> points);

/// 100 * (baseline - proposed) / baseline.
double improvement_pct(double baseline, double proposed);

enum class SweepAxis { CLoad, Vdd };

struct SweepRow {
  double param = 0.0;  // the swept grid value
  double delay_s = 0.0;
  double energy_j = 0.0;
};

/// Delay/energy rows over a parameter grid, sorted ascending by grid
/// value. The non-swept operating parameters come from `base`.
std::vector<SweepRow> sweep(const RcModel& m, const OperatingPoint& base,
                            SweepAxis axis, std::span<const double> grid);

}  // namespace mingate

#endif
