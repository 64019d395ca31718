// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "metasurf/constants.hpp"
#include "metasurf/varactor.hpp"

namespace metasurf {

// A shunt RLC resonator mounted across a free-space transmission line.
// SeriesLc (L, C, R in series) behaves as a bandstop element: at resonance
// the branch shorts the line. ParallelLc (C across a lossy inductor) is the
// bandpass dual: at resonance the branch opens and the line is undisturbed.
enum class Topology { SeriesLc, ParallelLc };

// Invariants: inductance > 0, capacitance > 0, resistance >= 0.
struct ShuntResonator {
  Topology topology;
  double inductance;    // H
  double capacitance;   // F
  double resistance;    // ohm

  ShuntResonator(Topology topology, double inductance, double capacitance, double resistance)
      : topology(topology),
        inductance(inductance),
        capacitance(capacitance),
        resistance(resistance) {
    if (!(inductance > 0.0)) throw std::invalid_argument("resonator: require inductance > 0");
    if (!(capacitance > 0.0)) throw std::invalid_argument("resonator: require capacitance > 0");
    if (!(resistance >= 0.0)) throw std::invalid_argument("resonator: require resistance >= 0");
  }
};

// f0 = 1 / (2*pi*sqrt(L*C)), identical for both topologies.
inline double resonant_frequency(const ShuntResonator& r) {
  return 1.0 / (2.0 * pi * std::sqrt(r.inductance * r.capacitance));
}

// Branch impedance with an explicit open flag. A lossless ParallelLc branch
// at exact resonance has no finite impedance; |z| > 1e12 ohm (equivalently
// |y| < 1e-12 S) is reported as open so the cascade can use an identity
// section instead of dividing by ~zero.
struct ShuntImpedance {
  std::complex<double> value;
  bool is_open;
};

inline ShuntImpedance shunt_impedance(const ShuntResonator& r, double frequency) {
  if (!(frequency > 0.0)) throw std::invalid_argument("resonator: require frequency > 0");
  const double w = 2.0 * pi * frequency;
  std::complex<double> z;
  if (r.topology == Topology::SeriesLc) {
    z = std::complex<double>(r.resistance, w * r.inductance - 1.0 / (w * r.capacitance));
  } else {
    // C in parallel with the series pair (R, L).
    const std::complex<double> y =
        std::complex<double>(0.0, w * r.capacitance) +
        1.0 / std::complex<double>(r.resistance, w * r.inductance);
    if (std::abs(y) < 1e-12) return {std::complex<double>(0.0, 0.0), true};
    z = 1.0 / y;
  }
  if (std::abs(z) > 1e12) return {z, true};
  return {z, false};
}

// Resonator whose capacitance comes from a biased varactor; the varactor's
// series resistance becomes the branch loss.
inline ShuntResonator resonator_from_varactor(Topology topology, double inductance,
                                              const VaractorModel& varactor,
                                              double reverse_bias) {
  return ShuntResonator(topology, inductance, capacitance_at_bias(varactor, reverse_bias),
                        varactor.r_series);
}

}  // namespace metasurf
