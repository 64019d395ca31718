// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace metasurf {

// Power-ratio decibel helpers. to_db/from_db round-trip within 1e-12
// over at least [-200, 200] dB.

inline double to_db(double power_ratio) { return 10.0 * std::log10(power_ratio); }

inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

// 20*log10 of a field magnitude (|s11|, |s21|).
inline double magnitude_db(double magnitude) { return 20.0 * std::log10(magnitude); }

inline double dbm_to_watts(double dbm) { return 1e-3 * from_db(dbm); }

inline double watts_to_dbm(double watts) { return to_db(watts / 1e-3); }

}  // namespace metasurf
