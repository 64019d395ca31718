// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "metasurf/layer_stack.hpp"

namespace metasurf {

namespace detail {
inline void require_fraction(double v, const char* name) {
  if (!(v >= 0.0) || !(v <= 1.0))
    throw std::invalid_argument(std::string(name) + ": require value in [0, 1]");
}
inline void require_gain(double v, const char* name) {
  if (!(v >= 1.0)) throw std::invalid_argument(std::string(name) + ": require gain >= 1");
}
}  // namespace detail

// Conventional RIS: reflects everything, no transmission path. The residual
// fraction is the share of co-channel interference its phase control cannot
// cancel, consumed by the link layer.
struct PassiveRis {
  double residual_interference_fraction = 0.10;

  explicit PassiveRis(double residual_interference_fraction = 0.10)
      : residual_interference_fraction(residual_interference_fraction) {
    detail::require_fraction(residual_interference_fraction, "passive_ris.residual");
  }
};

// Reflect-amplifying RIS; per-unit amplifier power dominates its consumption.
struct ActiveRis {
  double amplification_power_gain = 2.0;
  double per_unit_milliwatts = 150.0;
  int unit_count = 64;
  double residual_interference_fraction = 0.02;

  ActiveRis(double amplification_power_gain = 2.0, double per_unit_milliwatts = 150.0,
            int unit_count = 64, double residual_interference_fraction = 0.02)
      : amplification_power_gain(amplification_power_gain),
        per_unit_milliwatts(per_unit_milliwatts),
        unit_count(unit_count),
        residual_interference_fraction(residual_interference_fraction) {
    detail::require_gain(amplification_power_gain, "active_ris.gain");
    if (!(per_unit_milliwatts >= 0.0))
      throw std::invalid_argument("active_ris: require per_unit_milliwatts >= 0");
    if (unit_count < 0) throw std::invalid_argument("active_ris: require unit_count >= 0");
    detail::require_fraction(residual_interference_fraction, "active_ris.residual");
  }
};

// Simultaneous-transmit-and-reflect RIS splitting incident power between the
// two sides. Invariant: reflect_fraction + transmit_fraction = 1 within 1e-9.
struct StarRis {
  double reflect_fraction = 0.5;
  double transmit_fraction = 0.5;
  double gain = 1.0;
  double residual_interference_fraction = 0.25;

  StarRis(double reflect_fraction = 0.5, double transmit_fraction = 0.5, double gain = 1.0,
          double residual_interference_fraction = 0.25)
      : reflect_fraction(reflect_fraction),
        transmit_fraction(transmit_fraction),
        gain(gain),
        residual_interference_fraction(residual_interference_fraction) {
    detail::require_fraction(reflect_fraction, "star_ris.reflect_fraction");
    detail::require_fraction(transmit_fraction, "star_ris.transmit_fraction");
    detail::require_gain(gain, "star_ris.gain");
    detail::require_fraction(residual_interference_fraction, "star_ris.residual");
    if (std::abs(reflect_fraction + transmit_fraction - 1.0) > 1e-9)
      throw std::invalid_argument("star_ris: require reflect + transmit fractions = 1");
  }
};

// Frequency-dependent absorption: in_band applies inside [f_low, f_high],
// out_band elsewhere.
struct AbsorberBandProfile {
  double f_low;   // Hz
  double f_high;  // Hz
  double in_band_absorption;
  double out_band_absorption;

  AbsorberBandProfile(double f_low, double f_high, double in_band_absorption,
                      double out_band_absorption)
      : f_low(f_low),
        f_high(f_high),
        in_band_absorption(in_band_absorption),
        out_band_absorption(out_band_absorption) {
    if (!(f_low > 0.0) || !(f_low < f_high))
      throw std::invalid_argument("absorber_profile: require 0 < f_low < f_high");
    detail::require_fraction(in_band_absorption, "absorber_profile.in_band");
    detail::require_fraction(out_band_absorption, "absorber_profile.out_band");
  }
};

// Reflect-mode filtering surface (bandstop front filter + back absorber).
// In its stopband the filter reflects the co-channel band back to the served
// link; out-of-band energy leaks through the filter and is mostly eaten by
// the absorber. The absorbed share of incident power is |s21|^2 * absorption.
struct FricsA {
  LayerStack filter;
  double absorber_absorption = 0.99;
  std::optional<AbsorberBandProfile> absorber_profile;
  double stopband_halfwidth = 1e9;  // Hz, used for interferer-in-stopband warnings

  explicit FricsA(LayerStack filter, double absorber_absorption = 0.99,
                  std::optional<AbsorberBandProfile> absorber_profile = std::nullopt,
                  double stopband_halfwidth = 1e9)
      : filter(std::move(filter)),
        absorber_absorption(absorber_absorption),
        absorber_profile(std::move(absorber_profile)),
        stopband_halfwidth(stopband_halfwidth) {
    detail::require_fraction(absorber_absorption, "frics_a.absorption");
    if (!(stopband_halfwidth > 0.0))
      throw std::invalid_argument("frics_a: require stopband_halfwidth > 0");
  }

  double absorption_at(double frequency) const {
    if (absorber_profile) {
      return (frequency >= absorber_profile->f_low && frequency <= absorber_profile->f_high)
                 ? absorber_profile->in_band_absorption
                 : absorber_profile->out_band_absorption;
    }
    return absorber_absorption;
  }
};

// Transmit-mode filtering surface (bandpass filter + computational gain on
// the refracted side). Passband energy crosses with gain; out-of-band energy
// is reflected by the filter.
struct FricsB {
  LayerStack filter;
  double computational_power_gain = 2.0;

  explicit FricsB(LayerStack filter, double computational_power_gain = 2.0)
      : filter(std::move(filter)), computational_power_gain(computational_power_gain) {
    detail::require_gain(computational_power_gain, "frics_b.gain");
  }
};

using SurfaceKind = std::variant<PassiveRis, ActiveRis, StarRis, FricsA, FricsB>;

// Power-domain scattering response at one frequency. Fractions of incident
// power; gains may exceed 1 only for amplifying kinds.
struct SurfaceResponse {
  double frequency;        // Hz
  double reflect_gain;     // reflected power / incident power
  double transmit_gain;    // transmitted power / incident power
  double absorbed_fraction;
};

inline SurfaceResponse surface_response(const SurfaceKind& kind, double frequency) {
  if (!(frequency > 0.0)) throw std::invalid_argument("surface: require frequency > 0");
  return std::visit(
      [frequency](const auto& s) -> SurfaceResponse {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PassiveRis>) {
          return SurfaceResponse{frequency, 1.0, 0.0, 0.0};
        } else if constexpr (std::is_same_v<T, ActiveRis>) {
          return SurfaceResponse{frequency, s.amplification_power_gain, 0.0, 0.0};
        } else if constexpr (std::is_same_v<T, StarRis>) {
          return SurfaceResponse{frequency, s.reflect_fraction * s.gain,
                                 s.transmit_fraction * s.gain, 0.0};
        } else if constexpr (std::is_same_v<T, FricsA>) {
          const SParameters sp = s_parameters(s.filter, frequency);
          const double t2 = std::norm(sp.s21);
          const double a = s.absorption_at(frequency);
          return SurfaceResponse{frequency, std::norm(sp.s11), t2 * (1.0 - a), t2 * a};
        } else {
          static_assert(std::is_same_v<T, FricsB>);
          const SParameters sp = s_parameters(s.filter, frequency);
          return SurfaceResponse{frequency, std::norm(sp.s11),
                                 std::norm(sp.s21) * s.computational_power_gain, 0.0};
        }
      },
      kind);
}

// Fraction of co-channel interferer power that still reaches the served
// receiver through/around the surface. For FricsA this is the filter leak
// surviving the absorber; an ideal absorber drives it to exactly zero.
inline double interference_coupling(const SurfaceKind& kind, double frequency) {
  return std::visit(
      [frequency](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FricsA> || std::is_same_v<T, FricsB>) {
          return surface_response(SurfaceKind(s), frequency).transmit_gain;
        } else {
          return s.residual_interference_fraction;
        }
      },
      kind);
}

// Control-plane power budget shared by all surfaces; per-unit amplifier
// figures apply to the active kind only.
struct PowerModel {
  double driver_generator_mw = 250.0;
  double bias_amplifier_mw = 180.0;
  double fpga_mw = 1500.0;
  double per_unit_mw = 150.0;
  int unit_count = 64;
};

// Milliwatt terms are summed before the single divide so integer-valued
// component figures produce exactly-representable watt totals.
inline double surface_power_consumption(const SurfaceKind& kind, const PowerModel& pm) {
  return std::visit(
      [&pm](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PassiveRis> || std::is_same_v<T, StarRis>) {
          return (pm.driver_generator_mw + pm.bias_amplifier_mw + pm.fpga_mw) / 1000.0;
        } else if constexpr (std::is_same_v<T, ActiveRis>) {
          return (pm.driver_generator_mw + pm.bias_amplifier_mw + pm.fpga_mw +
                  s.per_unit_milliwatts * static_cast<double>(s.unit_count)) /
                 1000.0;
        } else {
          // Filtering surfaces idle the driver generator.
          return (pm.bias_amplifier_mw + pm.fpga_mw) / 1000.0;
        }
      },
      kind);
}

inline std::string_view surface_type_name(const SurfaceKind& kind) {
  return std::visit(
      [](const auto& s) -> std::string_view {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PassiveRis>) return "passive_ris";
        if constexpr (std::is_same_v<T, ActiveRis>) return "active_ris";
        if constexpr (std::is_same_v<T, StarRis>) return "star_ris";
        if constexpr (std::is_same_v<T, FricsA>) return "frics_a";
        if constexpr (std::is_same_v<T, FricsB>) return "frics_b";
      },
      kind);
}

}  // namespace metasurf
