// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

#include "metasurf/constants.hpp"
#include "metasurf/errors.hpp"
#include "metasurf/resonator.hpp"
#include "metasurf/varactor.hpp"

namespace metasurf {

struct FrequencyBand {
  double f_low;   // Hz, reached at zero bias (largest capacitance)
  double f_high;  // Hz, reached at full bias (smallest capacitance)
};

// Band reachable by sweeping the bias over [0, v_max] with a fixed inductor.
inline FrequencyBand achievable_band(const VaractorModel& varactor, double inductance) {
  if (!(inductance > 0.0)) throw std::invalid_argument("tuner: require inductance > 0");
  const double f_low = 1.0 / (2.0 * pi * std::sqrt(inductance * varactor.c_zero_bias));
  const double f_high = 1.0 / (2.0 * pi * std::sqrt(inductance * varactor.c_min));
  return FrequencyBand{f_low, f_high};
}

// Invariants: target_frequency > 0, tolerance > 0. The tolerance is relative
// on the achieved resonant frequency.
struct TuneRequest {
  VaractorModel varactor;
  double inductance;         // H
  Topology topology;
  double target_frequency;   // Hz
  double tolerance = 1e-6;

  TuneRequest(VaractorModel varactor, double inductance, Topology topology,
              double target_frequency, double tolerance = 1e-6)
      : varactor(varactor),
        inductance(inductance),
        topology(topology),
        target_frequency(target_frequency),
        tolerance(tolerance) {
    if (!(inductance > 0.0)) throw std::invalid_argument("tuner: require inductance > 0");
    if (!(target_frequency > 0.0))
      throw std::invalid_argument("tuner: require target_frequency > 0");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tuner: require tolerance > 0");
  }
};

struct TuneResult {
  double bias;      // V
  double achieved;  // Hz, f0 recomputed from the bias actually applied
};

namespace detail {

// Achieved resonance for a candidate bias under the request's L.
inline double achieved_f0(const TuneRequest& req, double bias) {
  const double c = capacitance_at_bias(req.varactor, bias);
  return 1.0 / (2.0 * pi * std::sqrt(req.inductance * c));
}

}  // namespace detail

// Solve C* = 1/((2*pi*f)^2 * L), invert the varactor curve in closed form,
// then verify; a bisection refinement (max 200 iterations) backs up the
// closed form for future curve shapes whose inverse is not exact. Targets
// outside the achievable band raise band_range_error carrying the edges;
// capacitances within 1e-9 relative of a band edge are snapped onto it so
// edge targets resolve to exactly 0 or v_max volts.
inline TuneResult tune_bias(const TuneRequest& req) {
  const FrequencyBand band = achievable_band(req.varactor, req.inductance);
  const double w = 2.0 * pi * req.target_frequency;
  double c_star = 1.0 / (w * w * req.inductance);
  if (c_star > req.varactor.c_zero_bias) {
    if (c_star > req.varactor.c_zero_bias * (1.0 + 1e-9))
      throw band_range_error(req.target_frequency, band.f_low, band.f_high);
    c_star = req.varactor.c_zero_bias;
  } else if (c_star < req.varactor.c_min) {
    if (c_star < req.varactor.c_min * (1.0 - 1e-9))
      throw band_range_error(req.target_frequency, band.f_low, band.f_high);
    c_star = req.varactor.c_min;
  }

  double bias = bias_for_capacitance(req.varactor, c_star);
  double achieved = detail::achieved_f0(req, bias);
  if (std::abs(achieved - req.target_frequency) <= req.tolerance * req.target_frequency)
    return TuneResult{bias, achieved};

  // Frequency increases monotonically with bias (capacitance decreases).
  double lo = 0.0, hi = req.varactor.v_max;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = detail::achieved_f0(req, mid);
    if (std::abs(f_mid - req.target_frequency) <= req.tolerance * req.target_frequency)
      return TuneResult{mid, f_mid};
    if (f_mid < req.target_frequency)
      lo = mid;
    else
      hi = mid;
  }
  bias = 0.5 * (lo + hi);
  return TuneResult{bias, detail::achieved_f0(req, bias)};
}

}  // namespace metasurf
