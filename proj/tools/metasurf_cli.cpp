// SPDX-License-Identifier: Apache-2.0
//
// metasurf: equivalent-circuit sweeps, bias tuning, and link-level scenario
// runs for tunable frequency-selective metasurfaces.
//
// Exit codes: 0 success, 2 usage/config problem, 3 domain error (target out
// of band, bias out of range, singular network).

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metasurf/metasurf.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;

metasurf::Config load_config(const std::optional<std::string>& path) {
  if (path) return metasurf::Config::from_file(*path);
  return metasurf::Config::defaults();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw metasurf::config_error(path + ": cannot open for writing");
  out << text;
  if (!out) throw metasurf::config_error(path + ": write failed");
}

void write_json_file(const std::string& path, const metasurf::json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

int cmd_sweep(const std::optional<std::string>& config_path, const std::string& design,
              std::optional<double> bias, std::optional<double> capacitance,
              std::optional<double> from_hz, std::optional<double> to_hz,
              std::optional<int> points, const std::string& out_path) {
  const metasurf::Config cfg = load_config(config_path);
  const metasurf::DesignId id =
      (design == "B" || design == "b") ? metasurf::DesignId::B : metasurf::DesignId::A;
  const metasurf::LayerStack stack = cfg.design_stack(id, bias, capacitance);
  const metasurf::FrequencySweepSpec spec = cfg.frequency_sweep();
  const double f0 = from_hz.value_or(spec.start_hz);
  const double f1 = to_hz.value_or(spec.stop_hz);
  const int n = points.value_or(spec.points);
  const auto sweep = metasurf::sweep_s_parameters(stack, f0, f1, n);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw metasurf::config_error(out_path + ": cannot open for writing");
  metasurf::write_sweep_csv(out, sweep);
  out.close();
  write_json_file(out_path + ".manifest.json",
                  metasurf::run_manifest(cfg, "sweep", {out_path}));

  const metasurf::SParameters* min_s21 = &sweep.front();
  const metasurf::SParameters* min_s11 = &sweep.front();
  for (const auto& p : sweep) {
    if (std::abs(p.s21) < std::abs(min_s21->s21)) min_s21 = &p;
    if (std::abs(p.s11) < std::abs(min_s11->s11)) min_s11 = &p;
  }
  std::cout << "wrote " << out_path << " (" << sweep.size() << " points)\n";
  std::cout << "min_s21_db " << metasurf::format_number(
                   metasurf::floored_magnitude_db(std::abs(min_s21->s21)))
            << " at_hz " << metasurf::format_number(min_s21->frequency) << "\n";
  std::cout << "min_s11_db " << metasurf::format_number(
                   metasurf::floored_magnitude_db(std::abs(min_s11->s11)))
            << " at_hz " << metasurf::format_number(min_s11->frequency) << "\n";
  return exit_ok;
}

int cmd_tune(const std::optional<std::string>& config_path, const std::string& design,
             double target_hz) {
  const metasurf::Config cfg = load_config(config_path);
  const metasurf::DesignId id =
      (design == "B" || design == "b") ? metasurf::DesignId::B : metasurf::DesignId::A;
  const metasurf::TuneRequest req = cfg.tune_request(id, target_hz);
  const metasurf::FrequencyBand band = metasurf::achievable_band(req.varactor, req.inductance);
  metasurf::TuneResult result = metasurf::tune_bias(req);

  const double step = cfg.bias_quantization_step();
  if (step > 0.0) {
    double q = std::round(result.bias / step) * step;
    q = std::min(std::max(q, 0.0), req.varactor.v_max);
    const double c = metasurf::capacitance_at_bias(req.varactor, q);
    const metasurf::ShuntResonator r(req.topology, req.inductance, c, req.varactor.r_series);
    result = metasurf::TuneResult{q, metasurf::resonant_frequency(r)};
  }

  std::cout << "bias_v " << metasurf::format_number(result.bias) << "\n";
  std::cout << "achieved_hz " << metasurf::format_number(result.achieved) << "\n";
  std::cout << "band_low_hz " << metasurf::format_number(band.f_low) << "\n";
  std::cout << "band_high_hz " << metasurf::format_number(band.f_high) << "\n";
  return exit_ok;
}

int cmd_simulate(const std::optional<std::string>& config_path,
                 const std::optional<std::string>& design, const std::string& out_dir) {
  const metasurf::Config cfg = load_config(config_path);
  metasurf::ScenarioId id = cfg.default_scenario();
  if (design) {
    if (*design == "A" || *design == "a")
      id = metasurf::ScenarioId::DesignA;
    else if (*design == "B" || *design == "b")
      id = metasurf::ScenarioId::DesignB;
  }
  const metasurf::ScenarioConfig scenario = cfg.scenario(id);
  const metasurf::SweepResult result = metasurf::run_scenario(scenario);
  const metasurf::ScenarioSummary summary = metasurf::summarize(scenario, result);

  std::filesystem::create_directories(out_dir);
  const std::string csv_path = (std::filesystem::path(out_dir) / "results.csv").string();
  const std::string summary_path = (std::filesystem::path(out_dir) / "summary.json").string();
  const std::string manifest_path = (std::filesystem::path(out_dir) / "manifest.json").string();

  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw metasurf::config_error(csv_path + ": cannot open for writing");
  metasurf::write_result_csv(csv, result);
  csv.close();
  write_json_file(summary_path, metasurf::summary_json(scenario, summary));
  write_json_file(manifest_path,
                  metasurf::run_manifest(cfg, "simulate", {csv_path, summary_path}));

  for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "wrote " << csv_path << "\n";
  std::cout << "wrote " << summary_path << "\n";
  for (const auto& [name, ok] : summary.ordering_checks)
    std::cout << "check " << name << " " << (ok ? "true" : "false") << "\n";
  return exit_ok;
}

int cmd_compare(const std::optional<std::string>& config_path,
                const std::optional<std::string>& design, std::optional<double> ref_power) {
  const metasurf::Config cfg = load_config(config_path);
  metasurf::ScenarioId id = cfg.default_scenario();
  if (design) {
    if (*design == "A" || *design == "a")
      id = metasurf::ScenarioId::DesignA;
    else if (*design == "B" || *design == "b")
      id = metasurf::ScenarioId::DesignB;
  }
  const metasurf::ScenarioConfig scenario = cfg.scenario(id);
  const double p = ref_power.value_or(cfg.compare_reference_power());

  std::cout << std::left << std::setw(16) << "surface" << std::setw(12) << "power_w"
            << std::setw(16) << (id == metasurf::ScenarioId::DesignA ? "sinr_db" : "snr_rsu_db")
            << std::setw(16) << "rate_bps" << "ee_bits_per_joule\n";
  for (const metasurf::SurfaceEntry& entry : scenario.surfaces) {
    const double watts = metasurf::surface_power_consumption(entry.kind, scenario.power_model);
    std::optional<double> quality;
    if (id == metasurf::ScenarioId::DesignA) {
      const metasurf::LinkPath desired(scenario.desired_distance, scenario.f1,
                                       scenario.path_loss_exponent);
      const metasurf::LinkPath interferer(scenario.interferer_distance, scenario.f1,
                                          scenario.path_loss_exponent);
      quality = metasurf::sinr_design_a(p, scenario.interferer_power_dbm, desired, interferer,
                                        entry.kind, scenario.noise);
    } else {
      const metasurf::LinkPath rsu(scenario.rsu_distance, scenario.f2,
                                   scenario.path_loss_exponent);
      quality = metasurf::snr_design_b(p, rsu, entry.kind, true, scenario.noise);
    }
    const double rate =
        quality ? metasurf::shannon_rate(scenario.noise.bandwidth, *quality) : 0.0;
    const double ee = metasurf::energy_efficiency(rate, watts);
    std::cout << std::left << std::setw(16) << entry.label << std::setw(12)
              << metasurf::format_number(watts) << std::setw(16)
              << (quality ? metasurf::format_number(*quality) : std::string("no_path"))
              << std::setw(16) << metasurf::format_number(rate) << metasurf::format_number(ee)
              << "\n";
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tunable frequency-selective metasurface simulation toolkit"};
  app.set_version_flag("--version", std::string("metasurf ") + metasurf::version);
  app.require_subcommand(0, 1);

  std::optional<std::string> write_default_path;
  app.add_option("--write-default-config", write_default_path,
                 "Write the fully-commented default config to PATH and exit");

  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "Configuration file (JSON, // comments allowed)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Sweep S-parameters of a design's filter stack");
  std::string sweep_design = "A";
  sweep->add_option("--band-design", sweep_design, "Which design's stack to sweep: A or B")
      ->check(CLI::IsMember({"A", "a", "B", "b"}));
  std::optional<double> sweep_bias, sweep_capacitance, sweep_from, sweep_to;
  std::optional<int> sweep_points;
  auto* value_group = sweep->add_option_group("tuning value", "exactly one of --bias/--capacitance");
  value_group->add_option("--bias", sweep_bias, "Reverse bias in volts");
  value_group->add_option("--capacitance", sweep_capacitance, "Capacitance in farads");
  value_group->require_option(1);
  sweep->add_option("--from", sweep_from, "Sweep start in hertz");
  sweep->add_option("--to", sweep_to, "Sweep stop in hertz");
  sweep->add_option("--points", sweep_points, "Number of sweep points (>= 2)");
  std::string sweep_out = "sweep.csv";
  sweep->add_option("--out", sweep_out, "Output CSV path");

  // tune
  auto* tune = app.add_subcommand("tune", "Solve the bias voltage for a target resonance");
  double tune_target = 0.0;
  tune->add_option("--target", tune_target, "Target resonant frequency in hertz")->required();
  std::string tune_design = "A";
  tune->add_option("--band-design", tune_design, "Which design's inductor to use: A or B")
      ->check(CLI::IsMember({"A", "a", "B", "b"}));

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run the configured link-level scenario");
  std::optional<std::string> sim_design;
  simulate->add_option("--design", sim_design, "Override the scenario: A or B")
      ->check(CLI::IsMember({"A", "a", "B", "b"}));
  std::string sim_out = "out";
  simulate->add_option("--out", sim_out, "Output directory");

  // compare
  auto* compare = app.add_subcommand("compare", "Print per-surface power/EE at a reference power");
  std::optional<std::string> cmp_design;
  compare->add_option("--design", cmp_design, "Override the scenario: A or B")
      ->check(CLI::IsMember({"A", "a", "B", "b"}));
  std::optional<double> cmp_ref_power;
  compare->add_option("--ref-power", cmp_ref_power, "Reference transmit power in dBm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return exit_usage;
  }

  try {
    if (write_default_path) {
      write_text_file(*write_default_path, metasurf::default_config_text());
      std::cout << "wrote " << *write_default_path << "\n";
      return exit_ok;
    }
    if (sweep->parsed())
      return cmd_sweep(config_path, sweep_design, sweep_bias, sweep_capacitance, sweep_from,
                       sweep_to, sweep_points, sweep_out);
    if (tune->parsed()) return cmd_tune(config_path, tune_design, tune_target);
    if (simulate->parsed()) return cmd_simulate(config_path, sim_design, sim_out);
    if (compare->parsed()) return cmd_compare(config_path, cmp_design, cmp_ref_power);
    std::cerr << app.help() << "\n";
    return exit_usage;
  } catch (const metasurf::band_range_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const metasurf::bias_range_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const metasurf::unreachable_capacitance_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const metasurf::singular_network_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const metasurf::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
