// mingate — command-line front end for the CNTFET minority-gate toolkit.
//
// Subcommands: device, truthtable, cost, eval, check, derive, sweep,
// calibrate, mc, paperdata. JSON config in (--config or MINGATE_CONFIG),
// human-readable tables or CSV out; --json switches any command to a
// machine-readable report.
//
// Exit codes: 0 success/verified, 1 computed-but-failing verdict,
// 2 usage or validation error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mingate/analog_gate.hpp"
#include "mingate/cnt.hpp"
#include "mingate/minority.hpp"
#include "mingate/paper_data.hpp"
#include "mingate/transient.hpp"
#include "mingate/variation.hpp"

namespace {

using nlohmann::json;

// fixed CSV number format: scientific, 6 significant digits
std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.5e", x);
  return buf;
}

std::string fixed4(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

const char* logic_name(mingate::LogicLevel l) {
  switch (l) {
    case mingate::LogicLevel::Zero: return "zero";
    case mingate::LogicLevel::One: return "one";
    default: return "indeterminate";
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw std::runtime_error("cannot write output file: " + out_path);
  }
  out << text;
}

// ---------------------------------------------------------------------
// config handling

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) {
    throw std::domain_error("config section '" + where + "' must be an object");
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::domain_error("unknown key '" + it.key() + "' in " + where);
    }
  }
}

void validate_schema(const json& cfg) {
  reject_unknown(cfg, "config",
                 {"gate", "vtc", "vector", "rc", "operating", "sweep",
                  "calibrate", "variation"});
  if (cfg.contains("gate"))
    reject_unknown(cfg["gate"], "gate", {"fan_in", "vdd", "weights"});
  if (cfg.contains("vtc"))
    reject_unknown(cfg["vtc"], "vtc", {"v_sw", "width_w"});
  if (cfg.contains("rc"))
    reject_unknown(cfg["rc"], "rc", {"r_eff_ohm", "c_par_f", "alpha"});
  if (cfg.contains("operating"))
    reject_unknown(cfg["operating"], "operating",
                   {"vdd_v", "c_load_f", "frequency_hz"});
  if (cfg.contains("sweep"))
    reject_unknown(cfg["sweep"], "sweep", {"axis", "grid"});
  if (cfg.contains("calibrate"))
    reject_unknown(cfg["calibrate"], "calibrate", {"points"});
  if (cfg.contains("variation"))
    reject_unknown(cfg["variation"], "variation",
                   {"chirality", "sigma_rel", "trials", "seed", "kappa"});
}

json load_config(const std::string& explicit_path) {
  std::string path = explicit_path;
  if (path.empty()) {
    if (const char* env = std::getenv("MINGATE_CONFIG")) {
      path = env;
    }
  }
  if (path.empty()) {
    return json::object();
  }
  std::ifstream in(path);
  if (!in) {
    throw std::domain_error("cannot open config file: " + path);
  }
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::domain_error(std::string("config parse error: ") + e.what());
  }
  validate_schema(cfg);
  return cfg;
}

double num_field(const json& s, const std::string& where, const char* key,
                 double fallback) {
  if (!s.contains(key)) return fallback;
  if (!s[key].is_number()) {
    throw std::domain_error("field '" + where + "." + key + "' must be a number");
  }
  return s[key].get<double>();
}

std::int64_t int_field(const json& s, const std::string& where, const char* key,
                       std::int64_t fallback) {
  if (!s.contains(key)) return fallback;
  if (!s[key].is_number_integer()) {
    throw std::domain_error("field '" + where + "." + key + "' must be an integer");
  }
  return s[key].get<std::int64_t>();
}

mingate::GateConfig gate_from(const json& cfg) {
  if (!cfg.contains("gate")) {
    return mingate::GateConfig::unit(7, 0.9);
  }
  const json& s = cfg["gate"];
  const int fan_in = static_cast<int>(int_field(s, "gate", "fan_in", 7));
  const double vdd = num_field(s, "gate", "vdd", 0.9);
  if (!s.contains("weights")) {
    return mingate::GateConfig::unit(fan_in, vdd);
  }
  if (!s["weights"].is_array()) {
    throw std::domain_error("field 'gate.weights' must be an array of integers");
  }
  mingate::GateConfig g;
  g.fan_in = fan_in;
  g.vdd = vdd;
  for (const json& w : s["weights"]) {
    if (!w.is_number_integer()) {
      throw std::domain_error("field 'gate.weights' must be an array of integers");
    }
    g.weights.push_back(w.get<int>());
  }
  return g;
}

mingate::VtcParams vtc_from(const json& cfg, double vdd) {
  mingate::VtcParams p = mingate::default_vtc(vdd);
  if (!cfg.contains("vtc")) return p;
  const json& s = cfg["vtc"];
  p.v_sw = num_field(s, "vtc", "v_sw", p.v_sw);
  p.width_w = num_field(s, "vtc", "width_w", p.width_w);
  return p;
}

mingate::RcModel rc_from(const json& cfg) {
  mingate::RcModel m{1000.0, 0.0, 1.0};
  if (!cfg.contains("rc")) return m;
  const json& s = cfg["rc"];
  m.r_eff_ohm = num_field(s, "rc", "r_eff_ohm", m.r_eff_ohm);
  m.c_par_f = num_field(s, "rc", "c_par_f", m.c_par_f);
  m.alpha = num_field(s, "rc", "alpha", m.alpha);
  return m;
}

mingate::OperatingPoint operating_from(const json& cfg) {
  mingate::OperatingPoint op;
  if (!cfg.contains("operating")) return op;
  const json& s = cfg["operating"];
  op.vdd_v = num_field(s, "operating", "vdd_v", op.vdd_v);
  op.c_load_f = num_field(s, "operating", "c_load_f", op.c_load_f);
  op.frequency_hz = num_field(s, "operating", "frequency_hz", op.frequency_hz);
  return op;
}

mingate::Chirality chirality_from(const json& s, const std::string& where) {
  if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
      !s[1].is_number_integer()) {
    throw std::domain_error("field '" + where + "' must be [n1, n2]");
  }
  return {s[0].get<int>(), s[1].get<int>()};
}

// ---------------------------------------------------------------------
// commands

int cmd_device(int n1, int n2, bool as_json) {
  const mingate::CntDevice dev = mingate::make_device({n1, n2});
  const bool semi = dev.kind == mingate::Conduction::Semiconducting;
  if (as_json) {
    json out = {
        {"chirality", {n1, n2}},
        {"kind", semi ? "semiconducting" : "metallic"},
        {"diameter_nm", dev.diameter_nm},
        {"chiral_length_nm", dev.chiral_length_nm},
    };
    if (semi) out["threshold_v"] = *dev.threshold_v;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "chirality: (" << n1 << "," << n2 << ")\n"
            << "kind: " << (semi ? "semiconducting" : "metallic") << "\n"
            << "diameter: " << fixed4(dev.diameter_nm) << " nm\n"
            << "chiral length: " << fixed4(dev.chiral_length_nm) << " nm\n";
  if (semi) {
    std::cout << "threshold voltage: " << fixed4(*dev.threshold_v) << " V\n";
  } else {
    std::cout << "threshold voltage: metallic\n";
  }
  return 0;
}

int cmd_truthtable(int n, bool full, bool as_json) {
  if (n < 1 || n > 24) {
    throw std::domain_error("fan-in must be in 1..24");
  }
  const mingate::MinorityTable table = mingate::weight_table(n);
  if (as_json) {
    json rows = json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"weight", r.weight}, {"output", r.output}});
    }
    json out = {{"width", n}, {"rows", rows}};
    if (full) {
      json vectors = json::array();
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto v = mingate::InputVector::from_mask(mask, n);
        std::string bits;
        for (int b : v.bits) bits.push_back(static_cast<char>('0' + b));
        vectors.push_back({{"vector", bits}, {"output", mingate::minority(v)}});
      }
      out["vectors"] = vectors;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (full) {
    std::cout << "vector,output\n";
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto v = mingate::InputVector::from_mask(mask, n);
      for (int b : v.bits) std::cout << b;
      std::cout << "," << mingate::minority(v) << "\n";
    }
    return 0;
  }
  std::cout << "weight output\n";
  for (const auto& r : table.rows) {
    std::printf("%6d %6d\n", r.weight, r.output);
  }
  return 0;
}

int cmd_cost(int n, bool as_json) {
  const mingate::CostReport r = mingate::cost_report(n);
  if (as_json) {
    json out = {{"inputs", r.inputs},
                {"sop_terms", r.sop_terms},
                {"conventional_transistors", r.conventional_transistors},
                {"proposed_devices", r.proposed_devices},
                {"reduction_pct", r.reduction_pct}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  char pct[40];
  std::snprintf(pct, sizeof pct, "%.4f", r.reduction_pct);
  std::cout << "inputs: " << r.inputs << "\n"
            << "sop terms: " << r.sop_terms << "\n"
            << "conventional transistors: " << r.conventional_transistors << "\n"
            << "proposed devices: " << r.proposed_devices << "\n"
            << "reduction: " << pct << "%\n";
  return 0;
}

int cmd_eval(const std::string& config_path, const std::string& vector_arg,
             bool as_json) {
  const json cfg = load_config(config_path);
  const mingate::GateConfig gate = gate_from(cfg);
  const mingate::VtcParams p = vtc_from(cfg, gate.vdd);
  std::string bits = vector_arg;
  if (bits.empty() && cfg.contains("vector")) {
    if (!cfg["vector"].is_string()) {
      throw std::domain_error("field 'vector' must be a 0/1 string");
    }
    bits = cfg["vector"].get<std::string>();
  }
  if (bits.empty()) {
    throw std::domain_error("no input vector given (--vector or config)");
  }
  const mingate::InputVector v = mingate::InputVector::parse(bits);
  const mingate::EvalResult r = mingate::evaluate(v, gate, p);
  if (as_json) {
    json out = {{"vector", bits},
                {"vm_v", r.vm},
                {"vout_v", r.vout},
                {"logic", logic_name(r.logic)},
                {"margin_v", r.margin}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "vector: " << bits << "\n"
            << "vm: " << sci(r.vm) << " V\n"
            << "vout: " << sci(r.vout) << " V\n"
            << "logic: " << logic_name(r.logic) << "\n"
            << "margin: " << sci(r.margin) << " V\n";
  return 0;
}

int cmd_check(const std::string& config_path, bool as_json) {
  const json cfg = load_config(config_path);
  const mingate::GateConfig gate = gate_from(cfg);
  const mingate::VtcParams p = vtc_from(cfg, gate.vdd);
  const bool ok = mingate::functional_check(gate, p);
  const std::uint64_t vectors = 1ull << gate.weights.size();
  if (as_json) {
    json out = {{"pass", ok},
                {"vectors", vectors},
                {"fan_in", gate.fan_in},
                {"v_sw", p.v_sw},
                {"width_w", p.width_w}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "functional check: " << (ok ? "PASS" : "FAIL") << " ("
              << vectors << " vectors)\n";
  }
  return ok ? 0 : 1;
}

int cmd_derive(const std::string& kind, int k, bool as_json) {
  const mingate::GateBinding b = kind == "nand" ? mingate::derive_nand(k)
                                                : mingate::derive_nor(k);
  const bool ok = mingate::verify_binding(b);
  const std::uint64_t assignments = 1ull << b.free_inputs;
  if (as_json) {
    json out = {{"target", kind},
                {"free_inputs", b.free_inputs},
                {"base_width", b.base_width},
                {"tied_constant", b.tied_constant},
                {"tied_count", b.tied_count},
                {"tied_weight", b.tied_weight},
                {"verified", ok},
                {"assignments", assignments}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "target: " << kind << k << "\n"
              << "base width: " << b.base_width << "\n"
              << "free inputs: " << b.free_inputs << "\n"
              << "tied: " << b.tied_count << " input(s) at constant "
              << b.tied_constant << ", merged weight " << b.tied_weight << "\n"
              << "equivalence: " << (ok ? "verified" : "FAILED") << " ("
              << assignments << " assignments)\n";
  }
  return ok ? 0 : 1;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              bool as_json) {
  const json cfg = load_config(config_path);
  const mingate::RcModel m = rc_from(cfg);
  const mingate::OperatingPoint base = operating_from(cfg);
  mingate::SweepAxis axis = mingate::SweepAxis::CLoad;
  std::vector<double> grid;
  if (cfg.contains("sweep")) {
    const json& s = cfg["sweep"];
    if (s.contains("axis")) {
      const std::string a = s["axis"].get<std::string>();
      if (a == "c_load") {
        axis = mingate::SweepAxis::CLoad;
      } else if (a == "vdd") {
        axis = mingate::SweepAxis::Vdd;
      } else {
        throw std::domain_error("sweep.axis must be 'c_load' or 'vdd'");
      }
    }
    if (s.contains("grid")) {
      if (!s["grid"].is_array()) {
        throw std::domain_error("sweep.grid must be an array of numbers");
      }
      for (const json& g : s["grid"]) {
        if (!g.is_number()) {
          throw std::domain_error("sweep.grid must be an array of numbers");
        }
        grid.push_back(g.get<double>());
      }
    }
  }
  if (grid.empty()) {
    for (double c = 2e-15; c <= 20e-15 + 1e-21; c += 2e-15) grid.push_back(c);
  }
  const std::vector<mingate::SweepRow> rows = mingate::sweep(m, base, axis, grid);
  if (as_json) {
    json jr = json::array();
    for (const auto& r : rows) {
      jr.push_back({{"param", r.param},
                    {"delay_s", r.delay_s},
                    {"energy_j", r.energy_j}});
    }
    emit(json({{"axis", axis == mingate::SweepAxis::CLoad ? "c_load" : "vdd"},
               {"rows", jr}})
             .dump(2) +
             "\n",
         out_path);
    return 0;
  }
  std::string csv = "param,delay_s,energy_j\n";
  for (const auto& r : rows) {
    csv += sci(r.param) + "," + sci(r.delay_s) + "," + sci(r.energy_j) + "\n";
  }
  emit(csv, out_path);
  return 0;
}

int cmd_calibrate(const std::string& config_path, const std::string& out_path,
                  bool as_json) {
  const json cfg = load_config(config_path);
  if (!cfg.contains("calibrate") || !cfg["calibrate"].contains("points")) {
    throw std::domain_error("config must provide calibrate.points");
  }
  const json& pts = cfg["calibrate"]["points"];
  if (!pts.is_array()) {
    throw std::domain_error("calibrate.points must be an array of [c_load_f, delay_s]");
  }
  std::vector<mingate::DelayPoint> points;
  for (const json& p : pts) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw std::domain_error("calibrate.points must be an array of [c_load_f, delay_s]");
    }
    points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  const mingate::RcModel m = mingate::calibrate_delay(points);
  if (as_json) {
    emit(json({{"r_eff_ohm", m.r_eff_ohm}, {"c_par_f", m.c_par_f}}).dump(2) + "\n",
         out_path);
    return 0;
  }
  emit("r_eff_ohm,c_par_f\n" + sci(m.r_eff_ohm) + "," + sci(m.c_par_f) + "\n",
       out_path);
  return 0;
}

int cmd_mc(const std::string& config_path, const std::string& out_path,
           bool as_json) {
  const json cfg = load_config(config_path);
  const mingate::GateConfig gate = gate_from(cfg);
  const mingate::VtcParams p = vtc_from(cfg, gate.vdd);

  mingate::Chirality chir{19, 0};
  std::vector<double> sigmas{0.0, 0.02, 0.05, 0.10};
  mingate::VariationSpec spec;
  spec.trials = 1000;
  spec.seed = 1;
  if (cfg.contains("variation")) {
    const json& s = cfg["variation"];
    if (s.contains("chirality")) {
      chir = chirality_from(s["chirality"], "variation.chirality");
    }
    if (s.contains("sigma_rel")) {
      sigmas.clear();
      if (s["sigma_rel"].is_number()) {
        sigmas.push_back(s["sigma_rel"].get<double>());
      } else if (s["sigma_rel"].is_array()) {
        for (const json& v : s["sigma_rel"]) {
          if (!v.is_number()) {
            throw std::domain_error("variation.sigma_rel must be a number or array");
          }
          sigmas.push_back(v.get<double>());
        }
      } else {
        throw std::domain_error("variation.sigma_rel must be a number or array");
      }
    }
    spec.trials = static_cast<int>(int_field(s, "variation", "trials", spec.trials));
    spec.seed = static_cast<std::uint64_t>(
        int_field(s, "variation", "seed", static_cast<std::int64_t>(spec.seed)));
    spec.kappa = num_field(s, "variation", "kappa", spec.kappa);
  }
  if (sigmas.empty()) {
    throw std::domain_error("variation.sigma_rel list is empty");
  }

  const mingate::CntDevice nominal = mingate::make_device(chir);
  json jrows = json::array();
  std::string csv = "sigma_rel,trials,yield\n";
  for (double sigma : sigmas) {
    mingate::VariationSpec level = spec;
    level.sigma_rel = sigma;
    const mingate::YieldReport rep = mingate::gate_yield(gate, p, nominal, level);
    csv += sci(sigma) + "," + std::to_string(rep.trials) + "," +
           sci(rep.yield_fraction) + "\n";
    jrows.push_back({{"sigma_rel", sigma},
                     {"trials", rep.trials},
                     {"passes", rep.passes},
                     {"yield", rep.yield_fraction},
                     {"vth_mean_v", rep.vth_mean_v},
                     {"vth_stddev_v", rep.vth_stddev_v},
                     {"worst_margin_v", rep.worst_margin_v}});
  }
  if (as_json) {
    emit(json({{"chirality", {chir.n1, chir.n2}},
               {"seed", spec.seed},
               {"kappa", spec.kappa},
               {"rows", jrows}})
             .dump(2) +
             "\n",
         out_path);
    return 0;
  }
  emit(csv, out_path);
  return 0;
}

int cmd_paperdata(const std::string& id, bool as_json) {
  const mingate::ReferenceTables tables = mingate::load_reference_tables();
  constexpr double kTol = 0.01;  // 1% relative on energy = power * delay

  if (id == "table5") {
    if (as_json) {
      json rows = json::array();
      for (const auto& r : tables.nand_comparison) {
        rows.push_back({{"vdd_v", r.vdd_v},
                        {"delay_conventional_s", r.delay_conventional_s},
                        {"delay_proposed_s", r.delay_proposed_s},
                        {"energy_conventional_j", r.energy_conventional_j},
                        {"energy_proposed_j", r.energy_proposed_j}});
      }
      std::cout << json({{"table", id}, {"rows", rows}}).dump(2) << "\n";
    } else {
      std::cout << "vdd_v  delay_conv_ps  delay_prop_ps  energy_conv_e17j  "
                   "energy_prop_e17j\n";
      for (const auto& r : tables.nand_comparison) {
        std::printf("%-6.1f %-14.1f %-14.1f %-17.2f %-16.2f\n", r.vdd_v,
                    r.delay_conventional_s * 1e12, r.delay_proposed_s * 1e12,
                    r.energy_conventional_j * 1e17, r.energy_proposed_j * 1e17);
      }
    }
    return 0;
  }

  const bool is_table3 = id == "table3";
  const auto& rows = is_table3 ? tables.vs_frequency : tables.vs_supply;
  bool all_pass = true;
  json jrows = json::array();
  if (!as_json) {
    std::cout << (is_table3 ? "frequency_mhz" : "vdd_v")
              << "  delay_ps  power_uw  energy_e17j  residual_pct  check\n";
  }
  for (const auto& r : rows) {
    const double residual =
        std::abs(mingate::energy_from_power_delay(r.power_w, r.delay_s) -
                 r.energy_j) /
        r.energy_j;
    const bool ok = residual <= kTol;
    all_pass = all_pass && ok;
    if (as_json) {
      jrows.push_back({{is_table3 ? "frequency_hz" : "vdd_v", r.param},
                       {"delay_s", r.delay_s},
                       {"power_w", r.power_w},
                       {"energy_j", r.energy_j},
                       {"residual", residual},
                       {"pass", ok}});
    } else {
      std::printf("%-13.4g %-9.1f %-9.3g %-12.3g %-13.3f %s\n",
                  is_table3 ? r.param / 1e6 : r.param, r.delay_s * 1e12,
                  r.power_w * 1e6, r.energy_j * 1e17, residual * 100.0,
                  ok ? "PASS" : "FAIL");
    }
  }
  if (as_json) {
    std::cout << json({{"table", id}, {"rows", jrows}, {"all_pass", all_pass}})
                     .dump(2)
              << "\n";
  } else {
    std::cout << "energy = power * delay: " << (all_pass ? "PASS" : "FAIL")
              << " (tolerance 1%)\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CNTFET minority-gate modeling toolkit"};
  app.require_subcommand(1);

  int rc = 0;
  bool as_json = false;

  // device
  int n1 = 0, n2 = 0;
  auto* device = app.add_subcommand("device", "CNT device parameters from chirality");
  device->add_option("n1", n1, "first chiral index")->required()
      ->check(CLI::NonNegativeNumber);
  device->add_option("n2", n2, "second chiral index")->required()
      ->check(CLI::NonNegativeNumber);
  device->add_flag("--json", as_json, "emit a machine-readable JSON report");
  device->callback([&] { rc = cmd_device(n1, n2, as_json); });

  // truthtable
  int tt_n = 7;
  bool tt_full = false;
  auto* truthtable =
      app.add_subcommand("truthtable", "weight-compressed minority truth table");
  truthtable->add_option("n", tt_n, "fan-in (1..24)")->required();
  truthtable->add_flag("--full", tt_full, "emit all 2^n vectors as CSV");
  truthtable->add_flag("--json", as_json, "emit a machine-readable JSON report");
  truthtable->callback([&] { rc = cmd_truthtable(tt_n, tt_full, as_json); });

  // cost
  int cost_n = 7;
  auto* cost = app.add_subcommand("cost", "SOP cost vs proposed device count");
  cost->add_option("n", cost_n, "odd fan-in")->required();
  cost->add_flag("--json", as_json, "emit a machine-readable JSON report");
  cost->callback([&] { rc = cmd_cost(cost_n, as_json); });

  // eval / check
  std::string config_path, vector_arg;
  auto* eval = app.add_subcommand("eval", "evaluate one input vector");
  eval->add_option("--config", config_path, "JSON config file");
  eval->add_option("--vector", vector_arg, "input bits, e.g. 0000111");
  eval->add_flag("--json", as_json, "emit a machine-readable JSON report");
  eval->callback([&] { rc = cmd_eval(config_path, vector_arg, as_json); });

  auto* check = app.add_subcommand("check", "exhaustive functional check");
  check->add_option("--config", config_path, "JSON config file");
  check->add_flag("--json", as_json, "emit a machine-readable JSON report");
  check->callback([&] { rc = cmd_check(config_path, as_json); });

  // derive
  std::string derive_kind;
  int derive_k = 4;
  auto* derive =
      app.add_subcommand("derive", "NAND/NOR binding on a minority gate");
  derive->add_option("kind", derive_kind, "nand or nor")->required()
      ->check(CLI::IsMember({"nand", "nor"}));
  derive->add_option("k", derive_k, "derived gate fan-in")->required();
  derive->add_flag("--json", as_json, "emit a machine-readable JSON report");
  derive->callback([&] { rc = cmd_derive(derive_kind, derive_k, as_json); });

  // sweep / calibrate / mc
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "delay/energy over a parameter grid");
  sweep->add_option("--config", config_path, "JSON config file");
  sweep->add_option("--out", out_path, "write CSV to file instead of stdout");
  sweep->add_flag("--json", as_json, "emit a machine-readable JSON report");
  sweep->callback([&] { rc = cmd_sweep(config_path, out_path, as_json); });

  auto* calibrate =
      app.add_subcommand("calibrate", "fit the RC model to (c_load, delay) points");
  calibrate->add_option("--config", config_path, "JSON config file");
  calibrate->add_option("--out", out_path, "write CSV to file instead of stdout");
  calibrate->add_flag("--json", as_json, "emit a machine-readable JSON report");
  calibrate->callback([&] { rc = cmd_calibrate(config_path, out_path, as_json); });

  auto* mc = app.add_subcommand("mc", "Monte Carlo yield under diameter variation");
  mc->add_option("--config", config_path, "JSON config file");
  mc->add_option("--out", out_path, "write CSV to file instead of stdout");
  mc->add_flag("--json", as_json, "emit a machine-readable JSON report");
  mc->callback([&] { rc = cmd_mc(config_path, out_path, as_json); });

  // paperdata
  std::string table_id;
  auto* paperdata = app.add_subcommand(
      "paperdata", "bundled reference tables and consistency checks");
  paperdata->add_option("id", table_id, "table3, table4 or table5")->required()
      ->check(CLI::IsMember({"table3", "table4", "table5"}));
  paperdata->add_flag("--json", as_json, "emit a machine-readable JSON report");
  paperdata->callback([&] { rc = cmd_paperdata(table_id, as_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
