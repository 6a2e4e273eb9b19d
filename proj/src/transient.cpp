#include "mingate/transient.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mingate {

namespace {

void check_model(const RcModel& m) {
  if (!(m.r_eff_ohm > 0.0)) {
    throw std::domain_error("effective resistance must be positive");
  }
  if (m.c_par_f < 0.0) {
    throw std::domain_error("parasitic capacitance must be non-negative");
  }
  if (!(m.alpha > 0.0) || m.alpha > 1.0) {
    throw std::domain_error("activity factor must be in (0, 1]");
  }
}

void check_point(const OperatingPoint& op) {
  if (op.vdd_v < 0.0) {
    throw std::domain_error("vdd must be non-negative");
  }
  if (op.c_load_f < 0.0) {
    throw std::domain_error("load capacitance must be non-negative");
  }
}

}  // namespace

double energy_from_power_delay(double power_w, double delay_s) {
  if (power_w < 0.0 || delay_s < 0.0) {
    throw std::domain_error("power and delay must be non-negative");
  }
  return power_w * delay_s;
}

double estimate_delay(const RcModel& m, const OperatingPoint& op) {
  check_model(m);
  check_point(op);
  return std::numbers::ln2 * m.r_eff_ohm * (m.c_par_f + op.c_load_f);
}

double estimate_energy(const RcModel& m, const OperatingPoint& op) {
  check_model(m);
  check_point(op);
  return m.alpha * (m.c_par_f + op.c_load_f) * op.vdd_v * op.vdd_v;
}

RcModel calibrate_delay(std::span<const DelayPoint> points) {
  if (points.size() < 2) {
    throw std::domain_error("calibration needs at least two points");
  }
  const double n = static_cast<double>(points.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const DelayPoint& p : points) {
    mean_x += p.c_load_f;
    mean_y += p.delay_s;
  }
  mean_x /= n;
  mean_y /= n;
  // centered least squares for conditioning at fF scales
  double sxx = 0.0, sxy = 0.0, max_x = 0.0;
  for (const DelayPoint& p : points) {
    const double dx = p.c_load_f - mean_x;
    sxx += dx * dx;
    sxy += dx * (p.delay_s - mean_y);
    max_x = std::max(max_x, std::abs(p.c_load_f));
  }
  if (sxx <= 0.0) {
    throw std::domain_error("calibration points have identical load values");
  }
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  if (!(slope > 0.0)) {
    throw std::runtime_error("model inapplicable: negative fitted parameters");
  }
  double c_par = intercept / slope;
  if (c_par < 0.0 && std::abs(c_par) <= 1e-9 * max_x) {
    c_par = 0.0;  // rounding residue on exact affine data
  }
  if (c_par < 0.0) {
    throw std::runtime_error("model inapplicable: negative fitted parameters");
  }
  RcModel m;
  m.r_eff_ohm = slope / std::numbers::ln2;
  m.c_par_f = c_par;
  return m;
}

double improvement_pct(double baseline, double proposed) {
  if (!(baseline > 0.0)) {
    throw std::domain_error("baseline must be positive");
  }
  return 100.0 * (baseline - proposed) / baseline;
}

std::vector<SweepRow> sweep(const RcModel& m, const OperatingPoint& base,
                            SweepAxis axis, std::span<const double> grid) {
  check_model(m);
  check_point(base);
  if (grid.empty()) {
    throw std::domain_error("sweep grid is empty");
  }
  std::vector<double> values(grid.begin(), grid.end());
  std::sort(values.begin(), values.end());
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (double v : values) {
    OperatingPoint op = base;
    if (axis == SweepAxis::CLoad) {
      op.c_load_f = v;
    } else {
      op.vdd_v = v;
    }
    rows.push_back({v, estimate_delay(m, op), estimate_energy(m, op)});
  }
  return rows;
}

}  // namespace mingate
