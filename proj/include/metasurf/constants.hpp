// SPDX-License-Identifier: Apache-2.0
#pragma once

// Physical constants used throughout the library. SI units everywhere:
// hertz, ohms, farads, henries, meters, kelvin, watts.

namespace metasurf {

inline constexpr double speed_of_light = 299792458.0;          // m/s
inline constexpr double boltzmann_constant = 1.380649e-23;     // J/K
inline constexpr double free_space_impedance = 376.730313668;  // ohm
inline constexpr double pi = 3.14159265358979323846;

}  // namespace metasurf
