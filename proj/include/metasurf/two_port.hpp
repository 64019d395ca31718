// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <stdexcept>

#include "metasurf/errors.hpp"
#include "metasurf/resonator.hpp"

namespace metasurf {

// 2x2 ABCD (chain) matrix of a two-port. Reciprocal networks have det = 1;
// cascading preserves the determinant product.
struct AbcdMatrix {
  std::complex<double> a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static AbcdMatrix identity() { return AbcdMatrix{}; }

  std::complex<double> determinant() const { return a * d - b * c; }
};

// Chain product: the left factor is the section nearest port 1 (incidence side).
inline AbcdMatrix operator*(const AbcdMatrix& l, const AbcdMatrix& r) {
  return AbcdMatrix{l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                    l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

// Cascade in array order, first element on the incidence side.
inline AbcdMatrix cascade(std::span<const AbcdMatrix> sections) {
  if (sections.empty()) throw std::invalid_argument("cascade: empty section list");
  AbcdMatrix m = sections[0];
  for (std::size_t i = 1; i < sections.size(); ++i) m = m * sections[i];
  return m;
}

// Shunt element across the line: [[1, 0], [1/z, 1]]. A dead short is kept
// representable by clamping |z| < 1e-30 ohm to 1e-30 (real).
inline AbcdMatrix abcd_of_shunt(std::complex<double> z) {
  if (std::abs(z) < 1e-30) z = std::complex<double>(1e-30, 0.0);
  return AbcdMatrix{1.0, 0.0, 1.0 / z, 1.0};
}

// Open-flagged branches contribute nothing: identity section.
inline AbcdMatrix abcd_of_shunt(const ShuntImpedance& z) {
  if (z.is_open) return AbcdMatrix::identity();
  return abcd_of_shunt(z.value);
}

struct SParameters {
  double frequency;  // Hz
  std::complex<double> s11;
  std::complex<double> s21;
};

// ABCD to S-parameters at reference impedance z0:
//   den = a + b/z0 + c*z0 + d,  s11 = (a + b/z0 - c*z0 - d)/den,  s21 = 2/den.
inline SParameters s_parameters(const AbcdMatrix& m, double z0, double frequency) {
  if (!(z0 > 0.0)) throw std::invalid_argument("s_parameters: require z0 > 0");
  const std::complex<double> den = m.a + m.b / z0 + m.c * z0 + m.d;
  if (std::abs(den) < 1e-30) throw singular_network_error(frequency);
  return SParameters{frequency, (m.a + m.b / z0 - m.c * z0 - m.d) / den, 2.0 / den};
}

}  // namespace metasurf
