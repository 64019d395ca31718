// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace metasurf {

// Domain errors carry the quantities a caller needs to react (band edges,
// reachable capacitance range) in addition to the formatted message.
// Type-invariant violations use std::invalid_argument directly.

// Requested reverse bias falls outside [0, v_max].
class bias_range_error : public std::domain_error {
 public:
  bias_range_error(double bias, double v_max)
      : std::domain_error("reverse bias " + std::to_string(bias) +
                          " V outside [0, " + std::to_string(v_max) + "] V"),
        bias(bias),
        v_max(v_max) {}
  double bias;
  double v_max;
};

// Target capacitance falls outside the varactor's reachable [c_min, c_zero_bias].
class unreachable_capacitance_error : public std::domain_error {
 public:
  unreachable_capacitance_error(double target, double c_min, double c_max)
      : std::domain_error("target capacitance " + std::to_string(target * 1e12) +
                          " pF outside reachable [" + std::to_string(c_min * 1e12) +
                          ", " + std::to_string(c_max * 1e12) + "] pF"),
        target(target),
        c_min(c_min),
        c_max(c_max) {}
  double target;
  double c_min;
  double c_max;
};

// Target frequency falls outside the band reachable by the bias range.
class band_range_error : public std::domain_error {
 public:
  band_range_error(double target, double f_low, double f_high)
      : std::domain_error("target " + std::to_string(target / 1e9) +
                          " GHz outside achievable band [" + std::to_string(f_low / 1e9) +
                          ", " + std::to_string(f_high / 1e9) + "] GHz"),
        target(target),
        f_low(f_low),
        f_high(f_high) {}
  double target;
  double f_low;
  double f_high;
};

// ABCD-to-S conversion hit a numerically singular network (|a + b/z0 + c*z0 + d| < 1e-30).
class singular_network_error : public std::runtime_error {
 public:
  explicit singular_network_error(double frequency)
      : std::runtime_error("singular two-port at " + std::to_string(frequency / 1e9) + " GHz"),
        frequency(frequency) {}
  double frequency;
};

// Configuration file problem; message names the offending key path.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace metasurf
