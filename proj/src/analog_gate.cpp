#include "mingate/analog_gate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mingate {

namespace {

constexpr int kEnumerationLimit = 24;

void check_config(const GateConfig& cfg) {
  if (cfg.fan_in < 1 || cfg.fan_in % 2 == 0) {
    throw std::domain_error("gate fan-in must be odd and positive");
  }
  if (!(cfg.vdd > 0.0)) {
    throw std::domain_error("vdd must be positive");
  }
  if (cfg.weights.empty()) {
    throw std::domain_error("gate has no driven inputs");
  }
  int total = 0;
  for (int w : cfg.weights) {
    if (w < 1) {
      throw std::domain_error("capacitive weights must be positive");
    }
    total += w;
  }
  if (total != cfg.fan_in) {
    throw std::domain_error("weights must sum to the gate fan-in");
  }
}

void check_vtc(const VtcParams& p, double vdd) {
  if (!(p.v_sw > 0.0) || !(p.v_sw < vdd)) {
    throw std::domain_error("switching threshold must lie strictly inside the rails");
  }
  if (p.width_w < 0.0) {
    throw std::domain_error("transition width must be non-negative");
  }
}

int weighted_ones(const InputVector& v, const GateConfig& cfg) {
  if (v.width() != static_cast<int>(cfg.weights.size())) {
    throw std::domain_error("input vector width does not match driven inputs");
  }
  int sum = 0;
  for (std::size_t i = 0; i < cfg.weights.size(); ++i) {
    const int b = v.bits[i];
    if (b != 0 && b != 1) {
      throw std::domain_error("input vector entries must be 0 or 1");
    }
    sum += cfg.weights[i] * b;
  }
  return sum;
}

// Divider levels reachable from some input assignment (subset sums of
// the weights), as flags over 0..fan_in.
std::vector<char> reachable_levels(const GateConfig& cfg) {
  std::vector<char> reach(static_cast<std::size_t>(cfg.fan_in) + 1, 0);
  reach[0] = 1;
  for (int w : cfg.weights) {
    for (int s = cfg.fan_in; s >= w; --s) {
      if (reach[static_cast<std::size_t>(s - w)]) {
        reach[static_cast<std::size_t>(s)] = 1;
      }
    }
  }
  return reach;
}

}  // namespace

GateConfig GateConfig::unit(int n, double vdd) {
  GateConfig cfg;
  cfg.fan_in = n;
  cfg.vdd = vdd;
  cfg.weights.assign(n > 0 ? static_cast<std::size_t>(n) : 0, 1);
  check_config(cfg);
  return cfg;
}

GateConfig GateConfig::from_binding(const GateBinding& b, double vdd) {
  GateConfig cfg;
  cfg.fan_in = b.base_width;
  cfg.vdd = vdd;
  cfg.weights.assign(static_cast<std::size_t>(b.free_inputs), 1);
  if (b.tied_count > 0) {
    cfg.weights.push_back(b.tied_weight);
  }
  check_config(cfg);
  return cfg;
}

VtcParams default_vtc(double vdd) {
  if (!(vdd > 0.0)) {
    throw std::domain_error("vdd must be positive");
  }
  return {vdd / 2.0, 0.05 * vdd};
}

double midpoint_voltage(const InputVector& v, const GateConfig& cfg) {
  check_config(cfg);
  return cfg.vdd * static_cast<double>(weighted_ones(v, cfg)) /
         static_cast<double>(cfg.fan_in);
}

VoltageWindow threshold_window(const GateConfig& cfg) {
  check_config(cfg);
  const double n = static_cast<double>(cfg.fan_in);
  const double half = static_cast<double>(cfg.fan_in / 2);
  return {cfg.vdd * half / n, cfg.vdd * (half + 1.0) / n};
}

double vtc(double vin, const VtcParams& p, double vdd) {
  if (!(vdd > 0.0)) {
    throw std::domain_error("vdd must be positive");
  }
  check_vtc(p, vdd);
  if (vin < 0.0 || vin > vdd) {
    throw std::domain_error("inverter input outside the rails");
  }
  if (p.width_w == 0.0) {
    if (vin < p.v_sw) return vdd;
    if (vin > p.v_sw) return 0.0;
    return vdd / 2.0;
  }
  const double t = (p.v_sw + p.width_w / 2.0 - vin) / p.width_w;
  return vdd * std::clamp(t, 0.0, 1.0);
}

int reference_output(const InputVector& v, const GateConfig& cfg) {
  check_config(cfg);
  return minority_of_weight(weighted_ones(v, cfg), cfg.fan_in);
}

EvalResult evaluate(const InputVector& v, const GateConfig& cfg,
                    const VtcParams& p) {
  check_config(cfg);
  check_vtc(p, cfg.vdd);
  EvalResult r;
  r.vm = midpoint_voltage(v, cfg);
  r.vout = vtc(r.vm, p, cfg.vdd);
  r.margin = std::abs(r.vm - p.v_sw) - p.width_w / 2.0;
  if (r.vout >= 0.9 * cfg.vdd) {
    r.logic = LogicLevel::One;
  } else if (r.vout <= 0.1 * cfg.vdd) {
    r.logic = LogicLevel::Zero;
  } else {
    r.logic = LogicLevel::Indeterminate;
  }
  return r;
}

bool functional_check(const GateConfig& cfg, const VtcParams& p) {
  check_config(cfg);
  check_vtc(p, cfg.vdd);
  const int n = static_cast<int>(cfg.weights.size());
  if (n > kEnumerationLimit) {
    throw std::domain_error("driven input count exceeds enumeration guard");
  }
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const InputVector v = InputVector::from_mask(mask, n);
    const EvalResult r = evaluate(v, cfg, p);
    const LogicLevel want =
        reference_output(v, cfg) == 1 ? LogicLevel::One : LogicLevel::Zero;
    if (r.logic != want) {
      return false;
    }
  }
  return true;
}

double static_margin(const GateConfig& cfg, const VtcParams& p) {
  check_config(cfg);
  check_vtc(p, cfg.vdd);
  const std::vector<char> reach = reachable_levels(cfg);
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s <= cfg.fan_in; ++s) {
    if (!reach[static_cast<std::size_t>(s)]) continue;
    const double vm =
        cfg.vdd * static_cast<double>(s) / static_cast<double>(cfg.fan_in);
    worst = std::min(worst, std::abs(vm - p.v_sw) - p.width_w / 2.0);
  }
  return worst;
}

}  // namespace mingate
