// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "metasurf/constants.hpp"
#include "metasurf/decibel.hpp"
#include "metasurf/surface.hpp"

namespace metasurf {

// Thermal noise floor referred to the receiver input.
// Invariants: temperature > 0, bandwidth > 0, noise_figure_db >= 0.
struct NoiseSpec {
  double temperature = 290.0;   // K
  double bandwidth = 1e6;       // Hz
  double noise_figure_db = 0.0;

  NoiseSpec(double temperature = 290.0, double bandwidth = 1e6, double noise_figure_db = 0.0)
      : temperature(temperature), bandwidth(bandwidth), noise_figure_db(noise_figure_db) {
    if (!(temperature > 0.0)) throw std::invalid_argument("noise: require temperature > 0");
    if (!(bandwidth > 0.0)) throw std::invalid_argument("noise: require bandwidth > 0");
    if (!(noise_figure_db >= 0.0))
      throw std::invalid_argument("noise: require noise_figure_db >= 0");
  }
};

// Single-segment propagation path. Invariants: distance > 0, carrier > 0,
// path_loss_exponent >= 2.
struct LinkPath {
  double distance;                  // m
  double carrier;                   // Hz
  double path_loss_exponent = 2.0;

  LinkPath(double distance, double carrier, double path_loss_exponent = 2.0)
      : distance(distance), carrier(carrier), path_loss_exponent(path_loss_exponent) {
    if (!(distance > 0.0)) throw std::invalid_argument("link: require distance > 0");
    if (!(carrier > 0.0)) throw std::invalid_argument("link: require carrier > 0");
    if (!(path_loss_exponent >= 2.0))
      throw std::invalid_argument("link: require path_loss_exponent >= 2");
  }
};

// 20*log10(4*pi*f/c) + 10*n*log10(d). At d = c/(4*pi*f) the loss is 0 dB.
inline double path_loss_db(const LinkPath& p) {
  return 20.0 * std::log10(4.0 * pi * p.carrier / speed_of_light) +
         10.0 * p.path_loss_exponent * std::log10(p.distance);
}

// 10*log10(k*T*B / 1 mW) + NF.
inline double noise_power_dbm(const NoiseSpec& n) {
  return 10.0 * std::log10(boltzmann_constant * n.temperature * n.bandwidth * 1000.0) +
         n.noise_figure_db;
}

// Reflect-assist SINR (Design A geometry): the desired link is served
// directly (surface reflection treated as ideal recombination, no extra
// loss), while the co-channel interferer reaches the receiver only through
// the surface's interference coupling at the interferer's carrier. A
// coupling of exactly zero makes the link noise-limited.
inline double sinr_design_a(double p_tx_desired_dbm, double p_tx_interferer_dbm,
                            const LinkPath& desired, const LinkPath& interferer,
                            const SurfaceKind& surface, const NoiseSpec& noise) {
  const double signal_dbm = p_tx_desired_dbm - path_loss_db(desired);
  const double noise_dbm = noise_power_dbm(noise);
  const double coupling = interference_coupling(surface, interferer.carrier);
  if (coupling == 0.0) return signal_dbm - noise_dbm;
  const double interference_dbm =
      p_tx_interferer_dbm - path_loss_db(interferer) + to_db(coupling);
  const double denom_mw = from_db(interference_dbm) + from_db(noise_dbm);
  return signal_dbm - to_db(denom_mw);
}

// Refract/reflect SNR (Design B geometry): the link passes through the
// surface once, on the transmit side (use_transmit_side) or the reflect
// side. A surface with zero gain on the requested side provides no path at
// all; that is reported as nullopt rather than a -inf SNR.
inline std::optional<double> snr_design_b(double p_tx_dbm, const LinkPath& path,
                                          const SurfaceKind& surface, bool use_transmit_side,
                                          const NoiseSpec& noise) {
  const SurfaceResponse r = surface_response(surface, path.carrier);
  const double gain = use_transmit_side ? r.transmit_gain : r.reflect_gain;
  if (gain == 0.0) return std::nullopt;
  const double signal_dbm = p_tx_dbm - path_loss_db(path) + to_db(gain);
  return signal_dbm - noise_power_dbm(noise);
}

// Shannon capacity B * log2(1 + SINR_linear), linear in bandwidth.
inline double shannon_rate(double bandwidth, double sinr_db) {
  if (!(bandwidth > 0.0)) throw std::invalid_argument("rate: require bandwidth > 0");
  return bandwidth * std::log2(1.0 + from_db(sinr_db));
}

// Bits per joule. Every surface's power model yields strictly positive
// consumption, so zero is a caller error.
inline double energy_efficiency(double rate_bps, double consumption_w) {
  if (!(consumption_w > 0.0)) throw std::domain_error("ee: require consumption > 0");
  return rate_bps / consumption_w;
}

// True when a co-channel interferer carrier falls inside the FricsA notch;
// the scenario layer turns this into a warning (the reflect-assist model is
// meant for interferers the stopband does not capture).
inline bool interferer_in_stopband(const FricsA& surface, double interferer_carrier) {
  double f0 = 0.0;
  for (const Layer& layer : surface.filter.layers) {
    if (const auto* r = std::get_if<ShuntResonator>(&layer)) {
      f0 = resonant_frequency(*r);
      break;
    }
  }
  if (f0 == 0.0) return false;
  return std::abs(interferer_carrier - f0) <= surface.stopband_halfwidth;
}

}  // namespace metasurf
