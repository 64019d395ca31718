// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "metasurf/errors.hpp"
#include "metasurf/scenario.hpp"
#include "metasurf/tuner.hpp"
#include "metasurf/version.hpp"

namespace metasurf {

using json = nlohmann::ordered_json;

// FNV-1a 64-bit over raw bytes; hashes the config file exactly as given.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

// Canonical default configuration. Comments are accepted by the loader, so
// this text doubles as the file --write-default-config emits.
inline std::string default_config_text() {
  return R"cfg({
  // Tunable frequency-selective surface simulation defaults.
  // Units: hertz, meters, farads, henries, volts, ohms, kelvin; powers in
  // dBm where the key says so, otherwise milliwatts.

  "varactor": {
    "part": "SMV2019-079LF",        // informational only
    "c_zero_bias_f": 2.31e-12,
    "c_min_f": 0.24e-12,
    "v_max_v": 19.0,
    "r_series_ohm": 0.5
  },

  "substrate": {
    "rel_permittivity": 4.3,        // FR-4
    "thickness_m": 0.38e-3,
    "include_in_stack": true
  },

  // Design A: bandstop (series-LC) front filter, reflect-assist operation.
  "design_a": {
    "topology": "series_lc",
    "inductance_h": 0.365e-9,
    "capacitance_f": 0.24e-12,      // used when no bias is given
    "stopband_halfwidth_hz": 1.0e9,
    "absorber_absorption": 0.99
  },

  // Design B: bandpass (parallel-LC) filter with transmit-side gain.
  "design_b": {
    "topology": "parallel_lc",
    "inductance_h": 0.33e-9,
    "capacitance_f": 0.236e-12,
    "computational_power_gain": 2.0
  },

  "tuner": {
    "tolerance": 1.0e-6,            // relative, on the achieved frequency
    "bias_quantization_step_v": 0.0 // 0 disables driver-side quantization
  },

  "frequency_sweep": {
    "start_hz": 10.0e9,
    "stop_hz": 25.0e9,
    "points": 1001
  },

  "noise": {
    "temperature_k": 290.0,
    "bandwidth_hz": 1.0e6,
    "noise_figure_db": 0.0
  },

  "power_model": {
    "driver_generator_mw": 250.0,
    "bias_amplifier_mw": 180.0,
    "fpga_mw": 1500.0,
    "per_unit_mw": 150.0,           // active-RIS amplifier, per unit
    "unit_count": 64
  },

  // Surface palette; scenario surface lists refer to these labels.
  "surfaces": {
    "frics_a": {
      "type": "frics_a"             // filter from design_a + substrate
    },
    "frics_b": {
      "type": "frics_b"             // filter from design_b + substrate
    },
    "passive_ris": {
      "type": "passive_ris",
      "residual_interference_fraction": 0.10
    },
    "active_ris": {
      "type": "active_ris",
      "amplification_power_gain": 2.0,
      "residual_interference_fraction": 0.02
    },
    "star_ris": {
      "type": "star_ris",           // half/half split, Design A baseline
      "reflect_fraction": 0.5,
      "transmit_fraction": 0.5,
      "gain": 1.0,
      "residual_interference_fraction": 0.25
    },
    "star_ris_ft": {
      "type": "star_ris",           // full transmission, Design B baseline
      "reflect_fraction": 0.0,
      "transmit_fraction": 1.0,
      "gain": 1.0,
      "residual_interference_fraction": 0.25
    }
  },

  // Which scenario `simulate` runs by default: "design_a" or "design_b".
  "scenario": "design_a",

  // Design A: served D2D link at f1 with a fixed co-channel interferer.
  "scenario_a": {
    "carriers_hz": [14.0e9, 17.0e9, 20.0e9],
    "desired_distance_m": 10.0,
    "interferer_distance_m": 20.0,
    "interferer_power_dbm": 30.0,
    "path_loss_exponent": 2.0,
    "tx_power_sweep_dbm": { "start": 15.0, "stop": 39.0, "step": 2.0 },
    "surfaces": ["frics_a", "passive_ris", "active_ris", "star_ris"]
  },

  // Design B: RSU link through the surface at f2, V2V bounce at f1.
  "scenario_b": {
    "carriers_hz": [15.0e9, 18.0e9, 21.0e9],
    "rsu_distance_m": 30.0,
    "v2v_distance_m": 15.0,
    "path_loss_exponent": 2.0,
    "tx_power_sweep_dbm": { "start": 15.0, "stop": 39.0, "step": 2.0 },
    "surfaces": ["frics_b", "passive_ris", "active_ris", "star_ris_ft"]
  },

  "compare": {
    "reference_power_dbm": 27.0
  }
}
)cfg";
}

namespace detail {

// Path-tracking accessor; every type/missing-key failure names the key path.
struct Cursor {
  const json* node;
  std::string path;

  Cursor child(const std::string& key) const {
    if (!node->is_object()) throw config_error(path + ": expected an object");
    auto it = node->find(key);
    if (it == node->end()) throw config_error(path + "." + key + ": missing key");
    return Cursor{&*it, path + "." + key};
  }

  bool has(const std::string& key) const { return node->is_object() && node->contains(key); }

  double number() const {
    if (!node->is_number()) throw config_error(path + ": expected a number");
    return node->get<double>();
  }

  int integer() const {
    if (!node->is_number_integer()) throw config_error(path + ": expected an integer");
    return node->get<int>();
  }

  bool boolean() const {
    if (!node->is_boolean()) throw config_error(path + ": expected a boolean");
    return node->get<bool>();
  }

  std::string str() const {
    if (!node->is_string()) throw config_error(path + ": expected a string");
    return node->get<std::string>();
  }

  double number_or(const std::string& key, double fallback) const {
    return has(key) ? child(key).number() : fallback;
  }

  int integer_or(const std::string& key, int fallback) const {
    return has(key) ? child(key).integer() : fallback;
  }
};

// Fill keys the user omitted from the defaults, recording each filled leaf.
inline void merge_defaults(json& user, const json& defaults, const std::string& path,
                           std::vector<std::pair<std::string, std::string>>& used) {
  for (auto it = defaults.begin(); it != defaults.end(); ++it) {
    const std::string p = path.empty() ? it.key() : path + "." + it.key();
    if (!user.contains(it.key())) {
      if (it.value().is_object()) {
        user[it.key()] = json::object();
        merge_defaults(user[it.key()], it.value(), p, used);
      } else {
        user[it.key()] = it.value();
        used.emplace_back(p, it.value().dump());
      }
    } else if (it.value().is_object() && user[it.key()].is_object()) {
      merge_defaults(user[it.key()], it.value(), p, used);
    }
  }
}

inline Topology parse_topology(const Cursor& c) {
  const std::string s = c.str();
  if (s == "series_lc") return Topology::SeriesLc;
  if (s == "parallel_lc") return Topology::ParallelLc;
  throw config_error(c.path + ": expected \"series_lc\" or \"parallel_lc\"");
}

}  // namespace detail

enum class DesignId { A, B };

struct FrequencySweepSpec {
  double start_hz;
  double stop_hz;
  int points;
};

// A parsed configuration: user values merged over the canonical defaults,
// with the list of defaults that filled missing keys retained for the run
// manifest. Invariant-violating values surface as config_error (bad shape)
// or std::invalid_argument (bad physics) when the typed builders run.
class Config {
 public:
  static Config from_text(const std::string& text, const std::string& source_name = "<config>") {
    Config cfg;
    cfg.source_hash_ = fnv1a64(text);
    try {
      cfg.resolved_ = json::parse(text, nullptr, /*allow_exceptions=*/true,
                                  /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
      throw config_error(source_name + ": " + e.what());
    }
    if (!cfg.resolved_.is_object()) throw config_error(source_name + ": expected a JSON object");
    const json defaults = json::parse(default_config_text(), nullptr, true, true);
    detail::merge_defaults(cfg.resolved_, defaults, "", cfg.defaults_used_);
    return cfg;
  }

  static Config from_file(const std::string& file_path) {
    std::ifstream in(file_path, std::ios::binary);
    if (!in) throw config_error(file_path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), file_path);
  }

  static Config defaults() { return from_text(default_config_text(), "<defaults>"); }

  const json& resolved() const { return resolved_; }
  std::uint64_t source_hash() const { return source_hash_; }
  const std::vector<std::pair<std::string, std::string>>& defaults_used() const {
    return defaults_used_;
  }

  VaractorModel varactor() const {
    const auto v = root().child("varactor");
    return VaractorModel(v.child("c_zero_bias_f").number(), v.child("c_min_f").number(),
                         v.child("v_max_v").number(), v.child("r_series_ohm").number());
  }

  std::optional<DielectricSlab> substrate() const {
    const auto s = root().child("substrate");
    if (!s.child("include_in_stack").boolean()) return std::nullopt;
    return DielectricSlab(s.child("rel_permittivity").number(), s.child("thickness_m").number());
  }

  // Filter stack for a design; capacitance comes from the bias if given,
  // else from the explicit capacitance, else from the design's default.
  LayerStack design_stack(DesignId design, std::optional<double> bias = std::nullopt,
                          std::optional<double> capacitance = std::nullopt) const {
    const auto d = root().child(design == DesignId::A ? "design_a" : "design_b");
    const VaractorModel var = varactor();
    const Topology topo = detail::parse_topology(d.child("topology"));
    const double inductance = d.child("inductance_h").number();
    double c;
    if (bias)
      c = capacitance_at_bias(var, *bias);
    else if (capacitance)
      c = *capacitance;
    else
      c = d.child("capacitance_f").number();
    std::vector<Layer> layers;
    layers.emplace_back(ShuntResonator(topo, inductance, c, var.r_series));
    if (const auto slab = substrate()) layers.emplace_back(*slab);
    return LayerStack(std::move(layers));
  }

  TuneRequest tune_request(DesignId design, double target_frequency) const {
    const auto d = root().child(design == DesignId::A ? "design_a" : "design_b");
    const auto t = root().child("tuner");
    return TuneRequest(varactor(), d.child("inductance_h").number(),
                       detail::parse_topology(d.child("topology")), target_frequency,
                       t.child("tolerance").number());
  }

  double bias_quantization_step() const {
    return root().child("tuner").child("bias_quantization_step_v").number();
  }

  FrequencySweepSpec frequency_sweep() const {
    const auto s = root().child("frequency_sweep");
    return FrequencySweepSpec{s.child("start_hz").number(), s.child("stop_hz").number(),
                              s.child("points").integer()};
  }

  NoiseSpec noise() const {
    const auto n = root().child("noise");
    return NoiseSpec(n.child("temperature_k").number(), n.child("bandwidth_hz").number(),
                     n.child("noise_figure_db").number());
  }

  PowerModel power_model() const {
    const auto p = root().child("power_model");
    PowerModel pm;
    pm.driver_generator_mw = p.child("driver_generator_mw").number();
    pm.bias_amplifier_mw = p.child("bias_amplifier_mw").number();
    pm.fpga_mw = p.child("fpga_mw").number();
    pm.per_unit_mw = p.child("per_unit_mw").number();
    pm.unit_count = p.child("unit_count").integer();
    return pm;
  }

  // Build one surface from its palette entry.
  SurfaceKind surface(const std::string& label) const {
    const auto all = root().child("surfaces");
    if (!all.has(label)) throw config_error("surfaces." + label + ": unknown surface label");
    const auto s = all.child(label);
    const std::string type = s.child("type").str();
    const PowerModel pm = power_model();
    if (type == "passive_ris") {
      return PassiveRis(s.number_or("residual_interference_fraction", 0.10));
    }
    if (type == "active_ris") {
      return ActiveRis(s.number_or("amplification_power_gain", 2.0),
                       s.number_or("per_unit_mw", pm.per_unit_mw),
                       s.integer_or("unit_count", pm.unit_count),
                       s.number_or("residual_interference_fraction", 0.02));
    }
    if (type == "star_ris") {
      return StarRis(s.number_or("reflect_fraction", 0.5), s.number_or("transmit_fraction", 0.5),
                     s.number_or("gain", 1.0), s.number_or("residual_interference_fraction", 0.25));
    }
    if (type == "frics_a") {
      const auto d = root().child("design_a");
      std::optional<AbsorberBandProfile> profile;
      if (s.has("absorber_profile")) {
        const auto p = s.child("absorber_profile");
        profile = AbsorberBandProfile(p.child("f_low_hz").number(), p.child("f_high_hz").number(),
                                      p.child("in_band_absorption").number(),
                                      p.child("out_band_absorption").number());
      }
      return FricsA(design_stack(DesignId::A),
                    s.number_or("absorber_absorption", d.child("absorber_absorption").number()),
                    profile,
                    s.number_or("stopband_halfwidth_hz",
                                d.child("stopband_halfwidth_hz").number()));
    }
    if (type == "frics_b") {
      const auto d = root().child("design_b");
      return FricsB(design_stack(DesignId::B),
                    s.number_or("computational_power_gain",
                                d.child("computational_power_gain").number()));
    }
    throw config_error("surfaces." + label + ".type: unknown surface type \"" + type + "\"");
  }

  ScenarioId default_scenario() const {
    const std::string s = root().child("scenario").str();
    if (s == "design_a") return ScenarioId::DesignA;
    if (s == "design_b") return ScenarioId::DesignB;
    throw config_error("scenario: expected \"design_a\" or \"design_b\"");
  }

  ScenarioConfig scenario(ScenarioId id) const {
    const auto sec = root().child(id == ScenarioId::DesignA ? "scenario_a" : "scenario_b");
    ScenarioConfig out;
    out.scenario = id;
    const auto carriers = sec.child("carriers_hz");
    if (!carriers.node->is_array() || carriers.node->size() != 3)
      throw config_error(carriers.path + ": expected an array of three carriers");
    for (const auto& c : *carriers.node)
      if (!c.is_number()) throw config_error(carriers.path + ": expected numbers");
    out.f1 = (*carriers.node)[0].get<double>();
    out.f2 = (*carriers.node)[1].get<double>();
    out.f3 = (*carriers.node)[2].get<double>();
    out.path_loss_exponent = sec.child("path_loss_exponent").number();
    if (id == ScenarioId::DesignA) {
      out.desired_distance = sec.child("desired_distance_m").number();
      out.interferer_distance = sec.child("interferer_distance_m").number();
      out.interferer_power_dbm = sec.child("interferer_power_dbm").number();
    } else {
      out.rsu_distance = sec.child("rsu_distance_m").number();
      out.v2v_distance = sec.child("v2v_distance_m").number();
    }
    const auto sweep = sec.child("tx_power_sweep_dbm");
    out.sweep = PowerSweep(sweep.child("start").number(), sweep.child("stop").number(),
                           sweep.child("step").number());
    out.noise = noise();
    out.power_model = power_model();
    const auto list = sec.child("surfaces");
    if (!list.node->is_array()) throw config_error(list.path + ": expected an array of labels");
    for (const auto& item : *list.node) {
      if (!item.is_string()) throw config_error(list.path + ": expected surface labels");
      const std::string label = item.get<std::string>();
      out.surfaces.push_back(SurfaceEntry{label, surface(label)});
    }
    out.validate();
    return out;
  }

  double compare_reference_power() const {
    return root().child("compare").child("reference_power_dbm").number();
  }

 private:
  detail::Cursor root() const { return detail::Cursor{&resolved_, "config"}; }

  json resolved_;
  std::uint64_t source_hash_ = 0;
  std::vector<std::pair<std::string, std::string>> defaults_used_;
};

inline std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

// Run provenance written next to every output file. The timestamp keeps the
// manifest out of byte-identity guarantees; result files carry none.
inline json run_manifest(const Config& cfg, const std::string& command,
                         const std::vector<std::string>& outputs) {
  json m;
  m["tool"] = "metasurf";
  m["tool_version"] = version;
  m["command"] = command;
  m["config_hash_fnv1a64"] = hex64(cfg.source_hash());
  m["generated_at_utc"] = utc_timestamp();
  m["outputs"] = outputs;
  json defaults = json::array();
  for (const auto& [key, value] : cfg.defaults_used()) {
    json d;
    d["key"] = key;
    d["value"] = json::parse(value);
    defaults.push_back(d);
  }
  m["resolved_defaults"] = defaults;
  return m;
}

// Summary serialization shared by the CLI and tests.
inline json summary_json(const ScenarioConfig& cfg, const ScenarioSummary& summary) {
  json j;
  j["scenario"] = cfg.scenario == ScenarioId::DesignA ? "design_a" : "design_b";
  j["carriers_hz"] = {cfg.f1, cfg.f2, cfg.f3};
  json links;
  if (cfg.scenario == ScenarioId::DesignA) {
    links["desired_distance_m"] = cfg.desired_distance;
    links["interferer_distance_m"] = cfg.interferer_distance;
    links["interferer_power_dbm"] = cfg.interferer_power_dbm;
  } else {
    links["rsu_distance_m"] = cfg.rsu_distance;
    links["v2v_distance_m"] = cfg.v2v_distance;
  }
  j["links"] = links;
  json per_surface = json::object();
  for (const auto& [label, metrics] : summary.per_surface) {
    json ms = json::object();
    for (const auto& [metric, st] : metrics) {
      json s;
      s["min"] = st.min;
      s["max"] = st.max;
      s["mean"] = st.mean;
      s["count"] = st.count;
      s["no_path_count"] = st.no_path_count;
      ms[metric] = s;
    }
    per_surface[label] = ms;
  }
  j["per_surface"] = per_surface;
  json checks = json::object();
  for (const auto& [name, ok] : summary.ordering_checks) checks[name] = ok;
  j["ordering_checks"] = checks;
  j["warnings"] = summary.warnings;
  return j;
}

}  // namespace metasurf
