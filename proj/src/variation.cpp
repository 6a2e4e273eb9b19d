#include "mingate/variation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mingate {

namespace {

constexpr int kYieldFanInLimit = 15;  // exhaustive inner check per trial
constexpr double kDiameterFloor = 0.1;

void check_spec(const VariationSpec& spec) {
  if (spec.sigma_rel < 0.0 || spec.sigma_rel >= 0.5) {
    throw std::domain_error("sigma_rel must lie in [0, 0.5)");
  }
  if (spec.trials < 1) {
    throw std::domain_error("at least one trial required");
  }
}

void check_semiconducting(const CntDevice& nominal) {
  if (nominal.kind != Conduction::Semiconducting || !nominal.threshold_v) {
    throw std::domain_error("no threshold: metallic CNT");
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::pair<double, double> standard_normal_pair(std::mt19937_64& rng) {
  // u1 in (0, 1], u2 in [0, 1); both from the top 53 bits
  const double u1 =
      (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

double standard_normal(std::mt19937_64& rng) {
  return standard_normal_pair(rng).first;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(trial_index)));
}

double perturbed_vth(const CntDevice& nominal, double rel_diameter_shift) {
  check_semiconducting(nominal);
  const double scale =
      std::max(1.0 + rel_diameter_shift, kDiameterFloor);
  return threshold_from_diameter(nominal.diameter_nm * scale);
}

double sample_vth(const CntDevice& nominal, const VariationSpec& spec,
                  std::mt19937_64& rng) {
  check_spec(spec);
  check_semiconducting(nominal);
  return perturbed_vth(nominal, spec.sigma_rel * standard_normal(rng));
}

TrialOutcome variation_trial(const GateConfig& cfg, const VtcParams& p,
                             const CntDevice& nominal,
                             const VariationSpec& spec,
                             std::uint64_t trial_index) {
  check_spec(spec);
  check_semiconducting(nominal);
  if (cfg.fan_in > kYieldFanInLimit) {
    throw std::domain_error("fan-in exceeds yield enumeration guard");
  }

  // common random numbers: the standard-normal pair is independent of
  // sigma_rel, so runs at different sigma levels stay paired
  std::mt19937_64 rng = trial_rng(spec.seed, trial_index);
  const auto [z_n, z_p] = standard_normal_pair(rng);

  const double vth0 = *nominal.threshold_v;
  TrialOutcome out;
  out.vth_n_v = perturbed_vth(nominal, spec.sigma_rel * z_n);
  out.vth_p_v = perturbed_vth(nominal, spec.sigma_rel * z_p);
  const double shift =
      spec.kappa * ((out.vth_n_v - vth0) - (out.vth_p_v - vth0)) / 2.0;

  VtcParams shifted = p;
  shifted.v_sw = p.v_sw + shift;
  out.v_sw_shifted_v = shifted.v_sw;
  if (shifted.v_sw <= 0.0 || shifted.v_sw >= cfg.vdd) {
    // switching point pushed outside the rails: unconditional failure
    out.pass = false;
    out.margin_v = -std::abs(shift);
    return out;
  }
  out.pass = functional_check(cfg, shifted);
  out.margin_v = static_margin(cfg, shifted);
  return out;
}

YieldReport summarize_trials(std::span<const TrialOutcome> outcomes) {
  if (outcomes.empty()) {
    throw std::domain_error("no trial outcomes to summarize");
  }
  YieldReport rep;
  rep.trials = static_cast<int>(outcomes.size());
  double sum = 0.0;
  double worst = std::numeric_limits<double>::infinity();
  for (const TrialOutcome& t : outcomes) {
    if (t.pass) ++rep.passes;
    sum += t.vth_n_v + t.vth_p_v;
    worst = std::min(worst, t.margin_v);
  }
  const double count = 2.0 * static_cast<double>(rep.trials);
  rep.vth_mean_v = sum / count;
  double var = 0.0;
  for (const TrialOutcome& t : outcomes) {
    const double dn = t.vth_n_v - rep.vth_mean_v;
    const double dp = t.vth_p_v - rep.vth_mean_v;
    var += dn * dn + dp * dp;
  }
  rep.vth_stddev_v = std::sqrt(var / count);
  rep.worst_margin_v = worst;
  rep.yield_fraction =
      static_cast<double>(rep.passes) / static_cast<double>(rep.trials);
  return rep;
}

YieldReport gate_yield(const GateConfig& cfg, const VtcParams& p,
                       const CntDevice& nominal, const VariationSpec& spec) {
  check_spec(spec);
  std::vector<TrialOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(spec.trials));
  for (int t = 0; t < spec.trials; ++t) {
    outcomes.push_back(variation_trial(cfg, p, nominal, spec,
                                       static_cast<std::uint64_t>(t)));
  }
  return summarize_trials(outcomes);
}

}  // namespace mingate
