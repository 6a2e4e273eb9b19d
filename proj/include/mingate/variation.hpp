#ifndef MINGATE_VARIATION_HPP
#define MINGATE_VARIATION_HPP

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "mingate/analog_gate.hpp"
#include "mingate/cnt.hpp"

namespace mingate {

/// Monte Carlo setup for diameter variation. sigma_rel is the relative
/// standard deviation of the tube diameter; kappa scales how a threshold
/// split between the two inverter devices moves the switching point.
struct VariationSpec {
  double sigma_rel = 0.0;
  int trials = 1;
  std::uint64_t seed = 0;
  double kappa = 1.0;
};

struct YieldReport {
  int trials = 0;
  int passes = 0;
  double yield_fraction = 0.0;
  double vth_mean_v = 0.0;
  double vth_stddev_v = 0.0;
  double worst_margin_v = 0.0;
};

/// Per-trial record; gate_yield is a deterministic reduction over these.
struct TrialOutcome {
  bool pass = false;
  double vth_n_v = 0.0;
  double vth_p_v = 0.0;
  double v_sw_shifted_v = 0.0;
  double margin_v = 0.0;
};

/// Box-Muller pair on a fixed engine-output mapping, so sample streams
/// are identical across platforms for a given seed.
std::pair<double, double> standard_normal_pair(std::mt19937_64& rng);
double standard_normal(std::mt19937_64& rng);

/// Engine for one trial's substream, derived from (seed, trial index).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial_index);

/// Threshold of the nominal device at a relative diameter shift g:
/// 0.43 / (D * (1 + g)), with the perturbed diameter floored at 10% of
/// nominal. The device must be semiconducting.
double perturbed_vth(const CntDevice& nominal, double rel_diameter_shift);

/// One random threshold sample: g ~ Normal(0, sigma_rel).
double sample_vth(const CntDevice& nominal, const VariationSpec& spec,
                  std::mt19937_64& rng);

/// One Monte Carlo trial: draws the two inverter-device thresholds,
/// shifts the switching point by kappa * (dVn - dVp) / 2 and runs the
/// exhaustive functional check at the shifted point.
TrialOutcome variation_trial(const GateConfig& cfg, const VtcParams& p,
                             const CntDevice& nominal,
                             const VariationSpec& spec,
                             std::uint64_t trial_index);

/// Order-independent reduction of trial outcomes into a report.
YieldReport summarize_trials(std::span<const TrialOutcome> outcomes);

/// Full yield run: trials 0..spec.trials-1 through variation_trial,
/// reduced with summarize_trials. Bit-identical for identical inputs.
YieldReport gate_yield(const GateConfig& cfg, const VtcParams& p,
                       const CntDevice& nominal, const VariationSpec& spec);

}  // namespace mingate

#endif
