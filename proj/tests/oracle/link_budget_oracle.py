#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Independent oracle for the numeric anchors frozen into the C++ tests.

Everything here is recomputed from first principles (free-space spreading
loss, kTB thermal noise, ABCD chain matrices) with no code shared with the
library, so agreement is evidence of correctness rather than of copying.

Run:  python3 tests/oracle/link_budget_oracle.py
Each line prints one anchor at full double precision; the C++ test suite
asserts these values (see test_link.cpp, test_layer_stack.cpp,
acceptance_test.cpp).
"""

import cmath
import math

SPEED_OF_LIGHT = 299792458.0          # m/s
BOLTZMANN = 1.380649e-23              # J/K
ETA0 = 376.730313668                  # ohm, free-space wave impedance


# --- circuit layer -----------------------------------------------------------

def series_lc_impedance(inductance, capacitance, resistance, frequency):
    w = 2.0 * math.pi * frequency
    return complex(resistance, w * inductance - 1.0 / (w * capacitance))


def parallel_lc_impedance(inductance, capacitance, resistance, frequency):
    w = 2.0 * math.pi * frequency
    return 1.0 / (1j * w * capacitance + 1.0 / complex(resistance, w * inductance))


def abcd_shunt(z):
    if abs(z) > 1e12:        # effectively open: contributes nothing
        return (1.0, 0.0, 0.0, 1.0)
    if abs(z) < 1e-30:       # dead short: keep representable
        z = 1e-30
    return (1.0, 0.0, 1.0 / z, 1.0)


def abcd_slab(rel_permittivity, thickness, frequency):
    n = math.sqrt(rel_permittivity)
    theta = 2.0 * math.pi * frequency * n * thickness / SPEED_OF_LIGHT
    zl = ETA0 / n
    return (cmath.cos(theta), 1j * zl * cmath.sin(theta),
            1j * cmath.sin(theta) / zl, cmath.cos(theta))


def cascade(*sections):
    a, b, c, d = (1.0, 0.0, 0.0, 1.0)
    for (a2, b2, c2, d2) in sections:
        a, b, c, d = (a * a2 + b * c2, a * b2 + b * d2,
                      c * a2 + d * c2, c * b2 + d * d2)
    return (a, b, c, d)


def s_parameters(m, z0):
    a, b, c, d = m
    den = a + b / z0 + c * z0 + d
    return ((a + b / z0 - c * z0 - d) / den, 2.0 / den)


def design_a_stack(frequency, resistance=0.5):
    """Bandstop: series-LC shunt (0.365 nH, 0.24 pF) + FR-4 slab (4.3, 0.38 mm)."""
    return s_parameters(cascade(
        abcd_shunt(series_lc_impedance(0.365e-9, 0.24e-12, resistance, frequency)),
        abcd_slab(4.3, 0.38e-3, frequency)), ETA0)


def design_b_stack(frequency, resistance=0.5):
    """Bandpass: parallel-LC shunt (0.33 nH, 0.236 pF) + the same slab."""
    return s_parameters(cascade(
        abcd_shunt(parallel_lc_impedance(0.33e-9, 0.236e-12, resistance, frequency)),
        abcd_slab(4.3, 0.38e-3, frequency)), ETA0)


# --- link layer --------------------------------------------------------------

def path_loss_db(frequency, distance, exponent=2.0):
    return (20.0 * math.log10(4.0 * math.pi * frequency / SPEED_OF_LIGHT)
            + 10.0 * exponent * math.log10(distance))


def noise_power_dbm(temperature, bandwidth, noise_figure_db):
    return 10.0 * math.log10(BOLTZMANN * temperature * bandwidth * 1000.0) + noise_figure_db


def sinr_db(p_desired_dbm, p_interferer_dbm, f, d_desired, d_interferer, coupling,
            temperature=290.0, bandwidth=1e6):
    signal = p_desired_dbm - path_loss_db(f, d_desired)
    noise = noise_power_dbm(temperature, bandwidth, 0.0)
    if coupling == 0.0:
        return signal - noise
    interference = p_interferer_dbm - path_loss_db(f, d_interferer) + 10.0 * math.log10(coupling)
    total = 10.0 ** (interference / 10.0) + 10.0 ** (noise / 10.0)
    return signal - 10.0 * math.log10(total)


# --- anchors -----------------------------------------------------------------

def main():
    p = lambda label, value: print(f"{label} = {value!r}")

    # Resonances and tuning.
    f0 = lambda L, C: 1.0 / (2.0 * math.pi * math.sqrt(L * C))
    p("f0(0.5 nH, 0.2 pF) [Hz]", f0(0.5e-9, 0.2e-12))
    p("f0(0.365 nH, 0.24 pF) [Hz]", f0(0.365e-9, 0.24e-12))
    p("f0(0.365 nH, 2.31 pF) [Hz]", f0(0.365e-9, 2.31e-12))
    p("f0(0.33 nH, 0.236 pF) [Hz]", f0(0.33e-9, 0.236e-12))
    p("varactor C at 9.5 V [F]", 2.31e-12 * (0.24 / 2.31) ** (9.5 / 19.0))
    c_star = 1.0 / ((2.0 * math.pi * 17e9) ** 2 * 0.365e-9)
    p("C* for 17 GHz, 0.365 nH [F]", c_star)
    p("bias for C* [V]", 19.0 * math.log(c_star / 2.31e-12) / math.log(0.24 / 2.31))

    # Filter responses at the scenario carriers (default loss 0.5 ohm).
    s11_a, s21_a = design_a_stack(14e9)
    p("design A |s21|^2 at 14 GHz", abs(s21_a) ** 2)
    p("design A leak coupling at 14 GHz (absorber 0.99)", abs(s21_a) ** 2 * 0.01)
    s11_b, s21_b = design_b_stack(18e9)
    p("design B |s21|^2 at 18 GHz", abs(s21_b) ** 2)
    p("design B transmit gain at 18 GHz (gain 2)", 2.0 * abs(s21_b) ** 2)
    s11_b15, _ = design_b_stack(15e9)
    p("design B |s11|^2 at 15 GHz", abs(s11_b15) ** 2)
    p("design B reflect penalty at 15 GHz [dB]", 10.0 * math.log10(abs(s11_b15) ** 2))

    # Sweep dips on the default 10-25 GHz, 1001-point grid.
    def grid_min(stack, which, r):
        best_f, best_v = None, float("inf")
        for i in range(1001):
            f = 10e9 + i * (25e9 - 10e9) / 1000.0
            s11, s21 = stack(f, r)
            v = abs(s11) if which == "s11" else abs(s21)
            if v < best_v:
                best_f, best_v = f, v
        return best_f, best_v

    for r in (0.5, 0.0):
        f, v = grid_min(design_a_stack, "s21", r)
        p(f"design A dip (R={r}) [Hz]", f)
        p(f"design A dip |s21| (R={r})", v)
        f, v = grid_min(design_b_stack, "s11", r)
        p(f"design B dip (R={r}) [Hz]", f)
        p(f"design B dip |s11| (R={r})", v)

    # Link-budget anchors.
    p("path loss (17 GHz, 10 m) [dB]", path_loss_db(17e9, 10.0))
    p("path loss (17 GHz, 20 m) [dB]", path_loss_db(17e9, 20.0))
    p("path loss (14 GHz, 10 m) [dB]", path_loss_db(14e9, 10.0))
    p("path loss (14 GHz, 20 m) [dB]", path_loss_db(14e9, 20.0))
    p("noise (290 K, 1 MHz, NF 0) [dBm]", noise_power_dbm(290.0, 1e6, 0.0))
    p("noise (290 K, 2 MHz, NF 0) [dBm]", noise_power_dbm(290.0, 2e6, 0.0))

    # SINR anchors for the interference-mitigation scenario at 14 GHz,
    # desired 10 m / interferer 20 m at 30 dBm.
    p("SINR, coupling 0, 23 dBm [dB]", sinr_db(23.0, 30.0, 14e9, 10.0, 20.0, 0.0))
    p("SINR, coupling 0.009, 23 dBm [dB]", sinr_db(23.0, 30.0, 14e9, 10.0, 20.0, 0.009))
    leak = abs(s21_a) ** 2 * 0.01
    for dbm in (15.0, 23.0, 39.0):
        p(f"SINR, design A leak, {dbm} dBm [dB]",
          sinr_db(dbm, 30.0, 14e9, 10.0, 20.0, leak))

    # Rate and power anchors.
    p("Shannon rate (1 MHz, 20 dB) [bit/s]", 1e6 * math.log2(1.0 + 100.0))
    p("power sum bias+fpga [W]", (180.0 + 1500.0) / 1000.0)
    p("power sum driver+bias+fpga [W]", (250.0 + 180.0 + 1500.0) / 1000.0)
    p("power sum driver+bias+fpga+64x150 [W]", (250.0 + 180.0 + 1500.0 + 64 * 150.0) / 1000.0)


if __name__ == "__main__":
    main()
