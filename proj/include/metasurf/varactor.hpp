// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

#include "metasurf/errors.hpp"

namespace metasurf {

// Reverse-biased varactor diode with an exponential capacitance curve:
//
//   C(v) = c_zero_bias * (c_min / c_zero_bias)^(|v| / v_max)
//
// so C(0) = c_zero_bias and C(v_max) = c_min, both exactly. The curve is
// strictly decreasing in |v| and has a closed-form inverse.
//
// Invariants: 0 < c_min < c_zero_bias, v_max > 0, r_series >= 0.
struct VaractorModel {
  double c_zero_bias;  // F
  double c_min;        // F
  double v_max;        // V
  double r_series;     // ohm, loss inserted in series with the junction

  VaractorModel(double c_zero_bias, double c_min, double v_max, double r_series = 0.5)
      : c_zero_bias(c_zero_bias), c_min(c_min), v_max(v_max), r_series(r_series) {
    if (!(c_min > 0.0) || !(c_min < c_zero_bias))
      throw std::invalid_argument("varactor: require 0 < c_min < c_zero_bias");
    if (!(v_max > 0.0)) throw std::invalid_argument("varactor: require v_max > 0");
    if (!(r_series >= 0.0)) throw std::invalid_argument("varactor: require r_series >= 0");
  }
};

// SMV2019-079LF datasheet corners: 2.31 pF at 0 V down to 0.24 pF at 19 V.
inline VaractorModel smv2019_079lf(double r_series = 0.5) {
  return VaractorModel(2.31e-12, 0.24e-12, 19.0, r_series);
}

// Junction capacitance at a reverse bias. Bias may be given as a negative
// number (reverse polarity); only the magnitude matters. The endpoints are
// returned exactly, not through the exponential.
inline double capacitance_at_bias(const VaractorModel& m, double reverse_bias) {
  const double v = std::abs(reverse_bias);
  if (v > m.v_max) throw bias_range_error(reverse_bias, m.v_max);
  if (v == 0.0) return m.c_zero_bias;
  if (v == m.v_max) return m.c_min;
  return m.c_zero_bias * std::pow(m.c_min / m.c_zero_bias, v / m.v_max);
}

// Closed-form inverse of capacitance_at_bias; returns the bias magnitude in
// [0, v_max]. Endpoint targets map to exactly 0 and v_max.
inline double bias_for_capacitance(const VaractorModel& m, double target) {
  if (!(target >= m.c_min) || !(target <= m.c_zero_bias))
    throw unreachable_capacitance_error(target, m.c_min, m.c_zero_bias);
  if (target == m.c_zero_bias) return 0.0;
  if (target == m.c_min) return m.v_max;
  return m.v_max * std::log(target / m.c_zero_bias) / std::log(m.c_min / m.c_zero_bias);
}

}  // namespace metasurf
