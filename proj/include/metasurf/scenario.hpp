// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "metasurf/link.hpp"

namespace metasurf {

enum class ScenarioId { DesignA, DesignB };

// Inclusive dBm grid; 15..39 step 2 yields 13 points.
// Invariants: start <= stop, step > 0.
struct PowerSweep {
  double start_dbm = 15.0;
  double stop_dbm = 39.0;
  double step_dbm = 2.0;

  PowerSweep(double start_dbm = 15.0, double stop_dbm = 39.0, double step_dbm = 2.0)
      : start_dbm(start_dbm), stop_dbm(stop_dbm), step_dbm(step_dbm) {
    if (!(step_dbm > 0.0)) throw std::invalid_argument("sweep: require step > 0");
    if (!(start_dbm <= stop_dbm)) throw std::invalid_argument("sweep: require start <= stop");
  }

  std::vector<double> points() const {
    std::vector<double> out;
    for (int i = 0;; ++i) {
      const double p = start_dbm + step_dbm * static_cast<double>(i);
      if (p > stop_dbm + step_dbm * 1e-9) break;
      out.push_back(p);
    }
    return out;
  }
};

struct SurfaceEntry {
  std::string label;
  SurfaceKind kind;
};

// One scenario run: carriers f1 < f2 < f3 span below-band / in-band /
// above-band probes; the per-link distance fields are consumed by the
// design the scenario selects.
struct ScenarioConfig {
  ScenarioId scenario = ScenarioId::DesignA;
  double f1 = 14e9, f2 = 17e9, f3 = 20e9;  // Hz
  double desired_distance = 10.0;          // m, Design A served D2D link
  double interferer_distance = 20.0;       // m, Design A co-channel interferer
  double rsu_distance = 30.0;              // m, Design B transmit-side link
  double v2v_distance = 15.0;              // m, Design B reflect-side link
  double path_loss_exponent = 2.0;
  double interferer_power_dbm = 30.0;      // Design A, fixed while tx power sweeps
  PowerSweep sweep{};
  NoiseSpec noise{};
  PowerModel power_model{};
  std::vector<SurfaceEntry> surfaces;

  void validate() const {
    if (!(f1 > 0.0) || !(f2 > 0.0) || !(f3 > 0.0))
      throw std::invalid_argument("scenario: require carriers > 0");
    if (f1 == f2 || f2 == f3 || f1 == f3)
      throw std::invalid_argument("scenario: require distinct carriers");
    if (surfaces.empty()) throw std::invalid_argument("scenario: require at least one surface");
  }
};

// One output cell. A disengaged value (surface offers no such path) is
// nullopt and serializes as the literal string "no_path".
struct SweepRow {
  double tx_power_dbm;
  std::string surface;
  std::string metric;
  std::optional<double> value;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by (surface, power, metric order)
  std::vector<std::string> warnings;
};

namespace detail {

inline void sort_rows(std::vector<SweepRow>& rows, const std::vector<std::string>& metric_order) {
  std::map<std::string, int> rank;
  for (std::size_t i = 0; i < metric_order.size(); ++i)
    rank[metric_order[i]] = static_cast<int>(i);
  std::stable_sort(rows.begin(), rows.end(), [&rank](const SweepRow& l, const SweepRow& r) {
    if (l.surface != r.surface) return l.surface < r.surface;
    if (l.tx_power_dbm != r.tx_power_dbm) return l.tx_power_dbm < r.tx_power_dbm;
    return rank.at(l.metric) < rank.at(r.metric);
  });
}

inline std::string format_ghz(double f) {
  std::ostringstream os;
  os << f / 1e9;
  return os.str();
}

}  // namespace detail

// Design A (reflect-assist D2D): the served link runs directly at f1 while a
// fixed-power co-channel interferer reaches the receiver only through each
// surface's interference coupling. Metrics per (surface, power): sinr_db,
// rate_bps, ee_bits_per_joule, power_w.
inline SweepResult run_design_a(const ScenarioConfig& cfg) {
  cfg.validate();
  SweepResult result;
  const LinkPath desired(cfg.desired_distance, cfg.f1, cfg.path_loss_exponent);
  const LinkPath interferer(cfg.interferer_distance, cfg.f1, cfg.path_loss_exponent);
  for (const SurfaceEntry& entry : cfg.surfaces) {
    if (const auto* fa = std::get_if<FricsA>(&entry.kind)) {
      if (interferer_in_stopband(*fa, interferer.carrier)) {
        result.warnings.push_back("interferer carrier " + detail::format_ghz(interferer.carrier) +
                                  " GHz lies inside the stopband of surface '" + entry.label +
                                  "'; reflect-assist model assumes an out-of-band interferer");
      }
    }
    const double power_w = surface_power_consumption(entry.kind, cfg.power_model);
    for (double p : cfg.sweep.points()) {
      const double sinr =
          sinr_design_a(p, cfg.interferer_power_dbm, desired, interferer, entry.kind, cfg.noise);
      const double rate = shannon_rate(cfg.noise.bandwidth, sinr);
      result.rows.push_back({p, entry.label, "sinr_db", sinr});
      result.rows.push_back({p, entry.label, "rate_bps", rate});
      result.rows.push_back({p, entry.label, "ee_bits_per_joule", energy_efficiency(rate, power_w)});
      result.rows.push_back({p, entry.label, "power_w", power_w});
    }
  }
  detail::sort_rows(result.rows, {"sinr_db", "rate_bps", "ee_bits_per_joule", "power_w"});
  return result;
}

// Design B (refract/reflect V2X): an RSU link crosses the surface at f2 on
// the transmit side; a V2V link bounces off it at f1 on the reflect side.
// Surfaces lacking a side produce no_path cells there. Rate and EE are
// evaluated on the RSU link (no path -> 0). Metrics per (surface, power):
// snr_rsu_db, snr_v2v_db, rate_bps, ee_bits_per_joule, power_w.
inline SweepResult run_design_b(const ScenarioConfig& cfg) {
  cfg.validate();
  SweepResult result;
  const LinkPath rsu(cfg.rsu_distance, cfg.f2, cfg.path_loss_exponent);
  const LinkPath v2v(cfg.v2v_distance, cfg.f1, cfg.path_loss_exponent);
  for (const SurfaceEntry& entry : cfg.surfaces) {
    const double power_w = surface_power_consumption(entry.kind, cfg.power_model);
    for (double p : cfg.sweep.points()) {
      const std::optional<double> snr_rsu = snr_design_b(p, rsu, entry.kind, true, cfg.noise);
      const std::optional<double> snr_v2v = snr_design_b(p, v2v, entry.kind, false, cfg.noise);
      const double rate = snr_rsu ? shannon_rate(cfg.noise.bandwidth, *snr_rsu) : 0.0;
      result.rows.push_back({p, entry.label, "snr_rsu_db", snr_rsu});
      result.rows.push_back({p, entry.label, "snr_v2v_db", snr_v2v});
      result.rows.push_back({p, entry.label, "rate_bps", rate});
      result.rows.push_back({p, entry.label, "ee_bits_per_joule", energy_efficiency(rate, power_w)});
      result.rows.push_back({p, entry.label, "power_w", power_w});
    }
  }
  detail::sort_rows(result.rows, {"snr_rsu_db", "snr_v2v_db", "rate_bps", "ee_bits_per_joule", "power_w"});
  return result;
}

inline SweepResult run_scenario(const ScenarioConfig& cfg) {
  return cfg.scenario == ScenarioId::DesignA ? run_design_a(cfg) : run_design_b(cfg);
}

// Per-surface, per-metric statistics over the finite cells.
struct MetricStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  int count = 0;          // finite cells
  int no_path_count = 0;  // disengaged cells
};

struct ScenarioSummary {
  // surface label -> metric -> stats
  std::map<std::string, std::map<std::string, MetricStats>> per_surface;
  // named boolean invariants consumed by downstream checks; a check is
  // present only when every surface kind it mentions exists in the run
  std::map<std::string, bool> ordering_checks;
  std::vector<std::string> warnings;
};

namespace detail {

// Value table: metric -> power -> label -> value.
using Cells = std::map<std::string, std::map<double, std::map<std::string, std::optional<double>>>>;

inline Cells tabulate(const SweepResult& r) {
  Cells cells;
  for (const SweepRow& row : r.rows) cells[row.metric][row.tx_power_dbm][row.surface] = row.value;
  return cells;
}

// First label of each variant kind, if any.
inline std::map<std::string, std::string> kind_labels(const ScenarioConfig& cfg) {
  std::map<std::string, std::string> out;
  for (const SurfaceEntry& e : cfg.surfaces) {
    const std::string kind(surface_type_name(e.kind));
    if (!out.count(kind)) out[kind] = e.label;
  }
  return out;
}

// -inf stand-in for ordering comparisons against disengaged cells.
inline double or_neg_inf(const std::optional<double>& v) {
  return v ? *v : -std::numeric_limits<double>::infinity();
}

}  // namespace detail

inline ScenarioSummary summarize(const ScenarioConfig& cfg, const SweepResult& result) {
  ScenarioSummary summary;
  summary.warnings = result.warnings;
  for (const SweepRow& row : result.rows) {
    MetricStats& st = summary.per_surface[row.surface][row.metric];
    if (!row.value) {
      ++st.no_path_count;
      continue;
    }
    if (st.count == 0) {
      st.min = st.max = st.mean = *row.value;
    } else {
      st.min = std::min(st.min, *row.value);
      st.max = std::max(st.max, *row.value);
      st.mean += *row.value;
    }
    ++st.count;
  }
  for (auto& [label, metrics] : summary.per_surface)
    for (auto& [metric, st] : metrics)
      if (st.count > 0) st.mean /= st.count;

  const detail::Cells cells = detail::tabulate(result);
  const auto labels = detail::kind_labels(cfg);
  const auto has = [&labels](const char* k) { return labels.count(k) > 0; };
  const auto monotone = [&cells](const std::string& metric) {
    auto it = cells.find(metric);
    if (it == cells.end()) return true;
    std::map<std::string, double> last;
    for (const auto& [power, by_label] : it->second) {
      for (const auto& [label, v] : by_label) {
        if (!v) continue;
        auto prev = last.find(label);
        if (prev != last.end() && *v < prev->second - 1e-12) return false;
        last[label] = *v;
      }
    }
    return true;
  };

  if (cfg.scenario == ScenarioId::DesignA) {
    const auto& sinr = cells.at("sinr_db");
    const auto& ee = cells.at("ee_bits_per_joule");
    if (has("frics_a")) {
      bool highest_sinr = true, highest_ee = true;
      for (const auto& [power, by_label] : sinr)
        for (const auto& [label, v] : by_label)
          if (label != labels.at("frics_a") &&
              detail::or_neg_inf(by_label.at(labels.at("frics_a"))) <= detail::or_neg_inf(v))
            highest_sinr = false;
      for (const auto& [power, by_label] : ee)
        for (const auto& [label, v] : by_label)
          if (label != labels.at("frics_a") &&
              detail::or_neg_inf(by_label.at(labels.at("frics_a"))) <= detail::or_neg_inf(v))
            highest_ee = false;
      summary.ordering_checks["frics_a_highest_sinr"] = highest_sinr;
      summary.ordering_checks["frics_a_highest_ee"] = highest_ee;
    }
    if (has("frics_a") && has("active_ris") && has("passive_ris") && has("star_ris")) {
      bool chain = true;
      for (const auto& [power, by_label] : sinr) {
        const double a = detail::or_neg_inf(by_label.at(labels.at("frics_a")));
        const double b = detail::or_neg_inf(by_label.at(labels.at("active_ris")));
        const double c = detail::or_neg_inf(by_label.at(labels.at("passive_ris")));
        const double d = detail::or_neg_inf(by_label.at(labels.at("star_ris")));
        if (!(a > b && b > c && c > d)) chain = false;
      }
      summary.ordering_checks["sinr_order_frics_active_passive_star"] = chain;
    }
    summary.ordering_checks["sinr_monotone_in_tx_power"] = monotone("sinr_db");
  } else {
    const auto& rsu = cells.at("snr_rsu_db");
    if (has("frics_b")) {
      bool highest = true;
      for (const auto& [power, by_label] : rsu)
        for (const auto& [label, v] : by_label)
          if (label != labels.at("frics_b") &&
              detail::or_neg_inf(by_label.at(labels.at("frics_b"))) <= detail::or_neg_inf(v))
            highest = false;
      summary.ordering_checks["frics_b_highest_rsu_snr"] = highest;
    }
    if (has("passive_ris")) {
      bool worst = true;
      for (const auto& [power, by_label] : rsu)
        for (const auto& [label, v] : by_label)
          if (label != labels.at("passive_ris") &&
              detail::or_neg_inf(by_label.at(labels.at("passive_ris"))) > detail::or_neg_inf(v))
            worst = false;
      summary.ordering_checks["passive_worst_rsu_snr"] = worst;
    }
    if (has("frics_b")) {
      bool only_frics_both = true;
      const auto& v2v = cells.at("snr_v2v_db");
      for (const auto& [power, by_rsu] : rsu) {
        const auto& by_v2v = v2v.at(power);
        for (const auto& [label, rsu_v] : by_rsu) {
          const bool both = rsu_v.has_value() && by_v2v.at(label).has_value();
          const bool is_frics = (label == labels.at("frics_b"));
          if (both != is_frics) only_frics_both = false;
        }
      }
      summary.ordering_checks["only_frics_b_improves_both"] = only_frics_both;
    }
    summary.ordering_checks["snr_monotone_in_tx_power"] =
        monotone("snr_rsu_db") && monotone("snr_v2v_db");
  }
  return summary;
}

}  // namespace metasurf
