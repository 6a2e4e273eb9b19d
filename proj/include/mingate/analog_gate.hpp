#ifndef MINGATE_ANALOG_GATE_HPP
#define MINGATE_ANALOG_GATE_HPP

#include <vector>

#include "mingate/minority.hpp"

namespace mingate {

/// Behavioral description of the capacitive-divider minority gate.
/// fan_in is the base minority width (odd) and must equal the sum of the
/// per-input capacitive weights; a merged tied input carries its weight
/// as one entry.
struct GateConfig {
  int fan_in = 7;
  double vdd = 0.9;
  std::vector<int> weights;  // one entry per driven input

  /// Plain n-input gate, all weights 1.
  static GateConfig unit(int n, double vdd);

  /// Divider for a derived NAND/NOR binding: k unit inputs plus the
  /// merged tied input (when present).
  static GateConfig from_binding(const GateBinding& b, double vdd);
};

/// Piecewise-linear inverter transfer curve: full rails outside the
/// transition band of width width_w centered on v_sw, linear inside.
/// width_w = 0 degenerates to an ideal step.
struct VtcParams {
  double v_sw = 0.45;
  double width_w = 0.045;
};

/// Mid-supply switching point with a 5%-of-supply transition width.
VtcParams default_vtc(double vdd);

enum class LogicLevel { Zero, One, Indeterminate };

struct EvalResult {
  double vm = 0.0;    // divider node voltage
  double vout = 0.0;  // inverter output
  LogicLevel logic = LogicLevel::Indeterminate;
  double margin = 0.0;  // |vm - v_sw| - width_w/2, may be negative
};

/// Open interval of switching thresholds realizing minority exactly.
struct VoltageWindow {
  double lo = 0.0;
  double hi = 0.0;
};

/// Divider node voltage: vdd * (sum of weight_i * x_i) / (sum of weight_i).
double midpoint_voltage(const InputVector& v, const GateConfig& cfg);

/// ( floor(n/2)/n * vdd, (floor(n/2)+1)/n * vdd ): any v_sw strictly
/// inside yields correct minority logic at zero transition width.
VoltageWindow threshold_window(const GateConfig& cfg);

/// Inverter output voltage for an input on [0, vdd].
double vtc(double vin, const VtcParams& p, double vdd);

/// Weighted minority reference for a driven-input assignment; equals the
/// pure minority function when all weights are 1.
int reference_output(const InputVector& v, const GateConfig& cfg);

/// Full divider-plus-inverter evaluation of one input vector. Logic
/// decodes at the 10%/90% rails; in between it is Indeterminate.
EvalResult evaluate(const InputVector& v, const GateConfig& cfg,
                    const VtcParams& p);

/// Exhaustive check over all 2^N driven-input vectors that the analog
/// path decodes to the weighted minority output. N above 24 is refused.
bool functional_check(const GateConfig& cfg, const VtcParams& p);

/// Worst-case distance from any reachable divider level to the edge of
/// the transition band; min over vectors of |vm - v_sw| - width_w/2.
double static_margin(const GateConfig& cfg, const VtcParams& p);

}  // namespace mingate

#endif
