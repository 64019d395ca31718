// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <variant>
#include <vector>

#include "metasurf/constants.hpp"
#include "metasurf/two_port.hpp"

namespace metasurf {

// Dielectric slab traversed normally, modeled as a transmission-line section
// of impedance eta0/sqrt(er) and electrical length 2*pi*f*sqrt(er)*d/c.
// Invariants: rel_permittivity >= 1, thickness > 0.
struct DielectricSlab {
  double rel_permittivity;
  double thickness;  // m

  DielectricSlab(double rel_permittivity, double thickness)
      : rel_permittivity(rel_permittivity), thickness(thickness) {
    if (!(rel_permittivity >= 1.0))
      throw std::invalid_argument("slab: require rel_permittivity >= 1");
    if (!(thickness > 0.0)) throw std::invalid_argument("slab: require thickness > 0");
  }
};

using Layer = std::variant<ShuntResonator, DielectricSlab>;

// Ordered layers, first entry on the incidence side, embedded between
// free-space ports of impedance port_impedance.
struct LayerStack {
  std::vector<Layer> layers;
  double port_impedance = free_space_impedance;  // ohm

  explicit LayerStack(std::vector<Layer> layers,
                      double port_impedance = free_space_impedance)
      : layers(std::move(layers)), port_impedance(port_impedance) {
    if (this->layers.empty()) throw std::invalid_argument("stack: require at least one layer");
    if (!(this->port_impedance > 0.0))
      throw std::invalid_argument("stack: require port_impedance > 0");
  }
};

// Lossless line section: det = 1 identically; thickness -> 0 gives identity.
inline AbcdMatrix abcd_of_slab(const DielectricSlab& s, double frequency) {
  if (!(frequency > 0.0)) throw std::invalid_argument("slab: require frequency > 0");
  const double n = std::sqrt(s.rel_permittivity);
  const double theta = 2.0 * pi * frequency * n * s.thickness / speed_of_light;
  const double zl = free_space_impedance / n;
  const double ct = std::cos(theta), st = std::sin(theta);
  return AbcdMatrix{std::complex<double>(ct, 0.0), std::complex<double>(0.0, zl * st),
                    std::complex<double>(0.0, st / zl), std::complex<double>(ct, 0.0)};
}

inline AbcdMatrix stack_abcd(const LayerStack& stack, double frequency) {
  AbcdMatrix m = AbcdMatrix::identity();
  for (const Layer& layer : stack.layers) {
    if (const auto* r = std::get_if<ShuntResonator>(&layer)) {
      m = m * abcd_of_shunt(shunt_impedance(*r, frequency));
    } else {
      m = m * abcd_of_slab(std::get<DielectricSlab>(layer), frequency);
    }
  }
  return m;
}

inline SParameters s_parameters(const LayerStack& stack, double frequency) {
  return s_parameters(stack_abcd(stack, frequency), stack.port_impedance, frequency);
}

// Uniform frequency sweep, inclusive endpoints. points >= 2, f_start < f_stop.
// For a lossless stack every point satisfies |s11|^2 + |s21|^2 = 1 within 1e-9.
inline std::vector<SParameters> sweep_s_parameters(const LayerStack& stack, double f_start,
                                                   double f_stop, int points) {
  if (points < 2) throw std::invalid_argument("sweep: require points >= 2");
  if (!(f_start > 0.0) || !(f_start < f_stop))
    throw std::invalid_argument("sweep: require 0 < f_start < f_stop");
  std::vector<SParameters> out;
  out.reserve(static_cast<std::size_t>(points));
  const double step = (f_stop - f_start) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) {
    const double f = (i == points - 1) ? f_stop : f_start + step * static_cast<double>(i);
    out.push_back(s_parameters(stack, f));
  }
  return out;
}

}  // namespace metasurf
