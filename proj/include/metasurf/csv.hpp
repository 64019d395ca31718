// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "metasurf/decibel.hpp"
#include "metasurf/scenario.hpp"
#include "metasurf/two_port.hpp"

namespace metasurf {

// All numeric output goes through one formatter (9 significant digits) so
// identical runs produce byte-identical files on any libc.
inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::string(buf);
}

// dB columns never carry -inf: magnitudes below the floor clamp to -400 dB.
inline double floored_magnitude_db(double magnitude) {
  const double db = magnitude_db(magnitude);
  return db < -400.0 ? -400.0 : db;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SParameters>& sweep) {
  os << "freq_hz,s11_re,s11_im,s21_re,s21_im,s11_db,s21_db\n";
  for (const SParameters& p : sweep) {
    os << format_number(p.frequency) << ',' << format_number(p.s11.real()) << ','
       << format_number(p.s11.imag()) << ',' << format_number(p.s21.real()) << ','
       << format_number(p.s21.imag()) << ',' << format_number(floored_magnitude_db(std::abs(p.s11)))
       << ',' << format_number(floored_magnitude_db(std::abs(p.s21))) << '\n';
  }
}

inline void write_result_csv(std::ostream& os, const SweepResult& result) {
  os << "tx_power_dbm,surface,metric,value\n";
  for (const SweepRow& row : result.rows) {
    os << format_number(row.tx_power_dbm) << ',' << row.surface << ',' << row.metric << ','
       << (row.value ? format_number(*row.value) : std::string("no_path")) << '\n';
  }
}

}  // namespace metasurf
