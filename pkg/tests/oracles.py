"""Independent reference implementations used only to check the library.

Everything here is written as literal summation, deliberately sharing no
code with the package's transform kernels.
"""

from __future__ import annotations

import cmath

import numpy as np


def brute_dft(x) -> np.ndarray:
    """Literal double-sum forward DFT, no scale."""
    x = list(x)
    n = len(x)
    out = np.zeros(n, dtype=complex)
    for l in range(n):
        acc = 0j
        for k in range(n):
            acc += x[k] * cmath.exp(-2j * cmath.pi * k * l / n)
        out[l] = acc
    return out


def brute_idft(x) -> np.ndarray:
    """Literal double-sum inverse DFT with 1/n scale."""
    x = list(x)
    n = len(x)
    out = np.zeros(n, dtype=complex)
    for p in range(n):
        acc = 0j
        for m in range(n):
            acc += x[m] * cmath.exp(2j * cmath.pi * m * p / n)
        out[p] = acc / n
    return out


def brute_2d(c) -> np.ndarray:
    """Row-wise brute DFT followed by column-wise brute IDFT."""
    c = np.asarray(c, dtype=complex)
    rows = np.stack([brute_dft(row) for row in c])
    cols = np.stack([brute_idft(col) for col in rows.T]).T
    return cols


def power_ratio_db(rcs1: float, r1: float, rcs2: float, r2: float) -> float:
    """Radar-equation power ratio target1/target2 in dB at fixed carrier.

    Only the sigma/R^4 dependence survives a ratio, so this is an
    independent check of the full received-power expression.
    """
    return 10.0 * np.log10(rcs1 / rcs2) + 40.0 * np.log10(r2 / r1)


def expected_range_bin(cfg, range_m: float) -> float:
    """Fractional range bin from first principles: 2*B*R/c of a full comb."""
    return 2.0 * cfg.n_subcarriers * cfg.subcarrier_spacing * range_m / cfg.speed_of_light


def expected_doppler_bin(cfg, velocity_mps: float) -> float:
    """Fractional Doppler bin: Doppler shift times the block's observed span."""
    doppler_hz = 2.0 * velocity_mps * cfg.carrier_freq / cfg.speed_of_light
    observed_span = (cfg.n_sensing_time * cfg.time_comb_spacing
                     * cfg.useful_symbol_duration)
    return doppler_hz * observed_span
