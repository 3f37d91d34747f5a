"""Range-Doppler estimation on the grid comb via the 2-D transform.

Pipeline: normalized symbol matrix -> row-wise DFT over symbols (Doppler)
-> column-wise IDFT over subcarriers (range) -> dB magnitude map -> 2-D
local-maxima detection -> bin-to-physical conversion. Peaks are read at
integer bins; no interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import transforms
from .channel import SymbolMatrix
from .config import OfdmConfig

# Cells below peak * 1e-15 are clamped so the dB map stays finite.
_MAG_FLOOR_REL = 1e-15


@dataclass(frozen=True)
class RangeDopplerMap:
    """dB-normalized magnitude of the 2-D transform; strongest cell is 0 dB.

    reference_level records 20*log10 of the strongest linear magnitude so
    absolute levels can be reconstructed.
    """

    magnitude_db: np.ndarray
    reference_level: float


@dataclass(frozen=True)
class GridDetection:
    range_bin: int
    doppler_bin: int
    magnitude_db: float
    range_m: float
    velocity_mps: float


def to_normalized_db(mag: np.ndarray) -> tuple[np.ndarray, float]:
    """dB magnitudes with the peak at 0 dB; returns (map, peak level in dB)."""
    peak = float(mag.max())
    if peak <= 0:
        raise ValueError("cannot normalize an all-zero magnitude array")
    clamped = np.maximum(mag, peak * _MAG_FLOOR_REL)
    return 20.0 * np.log10(clamped / peak), 20.0 * np.log10(peak)


def range_doppler_map(c: SymbolMatrix, method: str = "fast",
                      counter: transforms.MultiplyCounter | None = None) -> RangeDopplerMap:
    """2-D transform of the symbol matrix: DFT along rows, IDFT down columns.

    The Doppler DFT carries no scale; the range IDFT carries 1/N_f. With
    this convention total map energy equals (N_t/N_f) times input energy.
    """
    values = np.asarray(c.values, dtype=complex)
    spectrum = transforms.dft(values, axis=1, method=method, counter=counter)
    spectrum = transforms.idft(spectrum, axis=0, method=method, counter=counter)
    db, ref = to_normalized_db(np.abs(spectrum))
    return RangeDopplerMap(magnitude_db=db, reference_level=ref)


def detect_peaks_2d(rd_map: RangeDopplerMap, threshold_db: float,
                    guard: int = 2, cfg: OfdmConfig | None = None) -> list[GridDetection]:
    """Cells above threshold that strictly dominate their guard neighborhood.

    Neighborhoods wrap around (DFT bins are circular). Detections are sorted
    by magnitude, strongest first. Physical range/velocity are filled in when
    a config is supplied, else left at nan.
    """
    if threshold_db >= 0:
        raise ValueError("threshold_db must be negative (relative to peak)")
    if guard < 1:
        raise ValueError("guard must be >= 1")
    db = rd_map.magnitude_db
    n_f, n_t = db.shape
    found = []
    candidates = np.argwhere(db >= threshold_db)
    for p, q in candidates:
        val = db[p, q]
        is_max = True
        for dp in range(-guard, guard + 1):
            for dq in range(-guard, guard + 1):
                if dp == 0 and dq == 0:
                    continue
                if db[(p + dp) % n_f, (q + dq) % n_t] >= val:
                    is_max = False
                    break
            if not is_max:
                break
        if is_max:
            if cfg is not None:
                r, v = bins_to_estimate(cfg, int(p), int(q))
            else:
                r = v = float("nan")
            found.append(GridDetection(int(p), int(q), float(val), r, v))
    found.sort(key=lambda d: -d.magnitude_db)
    return found


def bins_to_estimate(cfg: OfdmConfig, p: int, q: int) -> tuple[float, float]:
    """Convert integer (range bin, doppler bin) to (range m, velocity m/s)."""
    if not 0 <= p < cfg.n_sensing_freq:
        raise ValueError(f"range bin {p} out of [0, {cfg.n_sensing_freq})")
    if not 0 <= q < cfg.n_sensing_time:
        raise ValueError(f"doppler bin {q} out of [0, {cfg.n_sensing_time})")
    c = cfg.speed_of_light
    r = c * p / (2.0 * cfg.freq_comb_spacing * cfg.subcarrier_spacing * cfg.n_sensing_freq)
    v = c * q / (2.0 * cfg.carrier_freq * cfg.time_comb_spacing
                 * cfg.useful_symbol_duration * cfg.n_sensing_time)
    return r, v
