"""Range-velocity estimation on the diagonal comb via one 1-D transform.

Pipeline: windowing -> length-N DFT -> dB radar image -> 1-D peak detection
-> amplitude-based peak pairing -> candidate (range, velocity) solutions per
pair. Each target produces two peaks; the mean and difference of a pair's
bin indices carry range and velocity, but which carries which is ambiguous
within a single frame (see tracking for the multi-frame resolution).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import transforms
from .channel import DiagonalVector
from .config import OfdmConfig
from .grid_estimator import to_normalized_db


class WindowKind(Enum):
    RECTANGULAR = "rect"
    HAMMING = "hamming"


# Detection floors used by the CLI when no explicit threshold is given.
# The rectangular floor must stay above the -13 dB first sidelobe with margin
# for multi-target skirt pileup; the Hamming floor sits between weak-target
# levels (~-33 dB in the highway scenes) and the ~-41 dB sidelobe floor.
DEFAULT_THRESHOLD_DB = {
    WindowKind.RECTANGULAR: -30.0,
    WindowKind.HAMMING: -36.0,
}
DEFAULT_MIN_SEPARATION = 3
# Rectangular mainlobe spans +-1 bin, Hamming +-2; halfwidths add one bin of
# straddle margin when measuring sidelobe levels.
MAINLOBE_HALFWIDTH = {
    WindowKind.RECTANGULAR: 2,
    WindowKind.HAMMING: 4,
}


@dataclass(frozen=True)
class RadarImage:
    """dB-normalized 1-D spectrum magnitude; the strongest bin is 0 dB."""

    magnitude_db: np.ndarray
    reference_level: float


@dataclass(frozen=True)
class Peak:
    bin: int
    magnitude_db: float


@dataclass(frozen=True)
class PeakPair:
    """Two peaks attributed to one target, lower bin first.

    l1 == l2 is the degenerate coincident-tone case (zero-velocity target).
    """

    l1: int
    l2: int
    magnitude_db: float  # mean of the members

    def __post_init__(self) -> None:
        if self.l1 > self.l2:
            raise ValueError("PeakPair requires l1 <= l2")

    @property
    def mean_bin(self) -> float:
        return 0.5 * (self.l1 + self.l2)

    @property
    def delta_bin(self) -> int:
        return self.l2 - self.l1


@dataclass(frozen=True)
class Solution:
    range_m: float
    velocity_mps: float


@dataclass(frozen=True)
class CandidatePair:
    """The two (range, velocity) readings consistent with one peak pair.

    sol_a assigns the pair mean to range and the half-difference to velocity;
    sol_b swaps the roles. Exactly one matches the true target.
    """

    sol_a: Solution
    sol_b: Solution


def window_coefficients(kind: WindowKind, n: int) -> np.ndarray:
    if n < 2:
        raise ValueError("window length must be >= 2")
    if kind is WindowKind.RECTANGULAR:
        return np.ones(n)
    if kind is WindowKind.HAMMING:
        k = np.arange(n)
        return 0.54 - 0.46 * np.cos(2.0 * np.pi * k / (n - 1))
    raise ValueError(f"unknown window kind: {kind!r}")


def apply_window(d: DiagonalVector, kind: WindowKind) -> DiagonalVector:
    """Element-wise taper; rectangular is the identity."""
    if kind is WindowKind.RECTANGULAR:
        return d
    return DiagonalVector(d.values * window_coefficients(kind, len(d.values)))


def diag_spectrum(d: DiagonalVector, method: str = "fast",
                  counter: transforms.MultiplyCounter | None = None) -> RadarImage:
    """Length-N DFT magnitude of the diagonal observation, dB-normalized."""
    spectrum = transforms.dft(np.asarray(d.values, dtype=complex),
                              method=method, counter=counter)
    db, ref = to_normalized_db(np.abs(spectrum))
    return RadarImage(magnitude_db=db, reference_level=ref)


def _circular_distance(a: int, b: int, n: int) -> int:
    d = abs(a - b) % n
    return min(d, n - d)


def _local_maxima(db: np.ndarray, threshold_db: float) -> list[int]:
    n = len(db)
    return [i for i in range(n)
            if db[i] >= threshold_db
            and db[i] > db[(i - 1) % n] and db[i] > db[(i + 1) % n]]


def detect_peaks_1d(img: RadarImage, threshold_db: float,
                    min_separation: int = DEFAULT_MIN_SEPARATION) -> list[Peak]:
    """Local maxima above threshold, thinned to the given separation.

    Bins are circular. Thinning is greedy strongest-first: a weaker local
    maximum closer than min_separation bins to an already kept peak is
    dropped. Result is sorted by magnitude descending.
    """
    if threshold_db >= 0:
        raise ValueError("threshold_db must be negative (relative to peak)")
    if min_separation < 1:
        raise ValueError("min_separation must be >= 1")
    db = img.magnitude_db
    n = len(db)
    kept: list[int] = []
    for i in sorted(_local_maxima(db, threshold_db), key=lambda i: -db[i]):
        if all(_circular_distance(i, j, n) >= min_separation for j in kept):
            kept.append(i)
    return [Peak(bin=i, magnitude_db=float(db[i])) for i in kept]


def psl(img: RadarImage, mainlobe_halfwidth: int = 4,
        peak_threshold_db: float = -6.0) -> float:
    """Peak-to-sidelobe level of a radar image, in dB (negative).

    Mainlobes are the bins within mainlobe_halfwidth of every local maximum
    stronger than peak_threshold_db (all near-equal target peaks count, weak
    sidelobe maxima do not). Returns the strongest magnitude outside those
    windows relative to the global peak.
    """
    if mainlobe_halfwidth < 1:
        raise ValueError("mainlobe_halfwidth must be >= 1")
    db = img.magnitude_db
    n = len(db)
    if np.count_nonzero(db == db.max()) != 1:
        raise ValueError("image must have a unique global maximum")
    peaks = _local_maxima(db, peak_threshold_db)
    if not peaks:
        peaks = [int(np.argmax(db))]
    mask = np.zeros(n, dtype=bool)
    for p in peaks:
        for d in range(-mainlobe_halfwidth, mainlobe_halfwidth + 1):
            mask[(p + d) % n] = True
    outside = db[~mask]
    if outside.size == 0:
        raise ValueError("mainlobe windows cover the whole image")
    return float(outside.max())


def pair_peaks(peaks: list[Peak], amp_tolerance_db: float = 3.0
               ) -> tuple[list[PeakPair], list[Peak]]:
    """Group peaks into equal-amplitude pairs.

    The two peaks one target produces have (near) equal amplitude, so
    matching repeatedly joins the two unpaired peaks with the smallest
    magnitude difference, as long as that difference stays within tolerance.
    Returns (pairs, orphans); an odd or unmatchable peak is reported as an
    orphan, never an error.
    """
    if amp_tolerance_db <= 0:
        raise ValueError("amp_tolerance_db must be positive")
    unpaired = sorted(peaks, key=lambda p: -p.magnitude_db)
    pairs: list[PeakPair] = []
    while len(unpaired) >= 2:
        best: tuple[float, int, int] | None = None
        for i in range(len(unpaired)):
            for j in range(i + 1, len(unpaired)):
                diff = abs(unpaired[i].magnitude_db - unpaired[j].magnitude_db)
                if best is None or diff < best[0]:
                    best = (diff, i, j)
        diff, i, j = best
        if diff > amp_tolerance_db:
            break
        a, b = unpaired[i], unpaired[j]
        lo, hi = sorted((a.bin, b.bin))
        pairs.append(PeakPair(l1=lo, l2=hi,
                              magnitude_db=0.5 * (a.magnitude_db + b.magnitude_db)))
        for k in sorted((i, j), reverse=True):
            unpaired.pop(k)
    return pairs, unpaired


def candidates(cfg: OfdmConfig, pair: PeakPair) -> CandidatePair:
    """The two (range, velocity) solutions a dual-peak pair admits.

    With mean bin m and difference d: sol_a reads range from m and velocity
    from d; sol_b reads range from d and velocity from m. The degenerate
    coincident pair (d = 0) yields sol_a = (R, 0) and sol_b = (0, v).
    """
    c = cfg.speed_of_light
    df = cfg.subcarrier_spacing
    fc = cfg.carrier_freq
    t_u = cfg.useful_symbol_duration
    n_c = cfg.n_subcarriers
    m, d = pair.mean_bin, pair.delta_bin
    sol_a = Solution(range_m=c * m / (2.0 * df * n_c),
                     velocity_mps=c * d / (4.0 * t_u * fc * n_c))
    sol_b = Solution(range_m=c * d / (4.0 * df * n_c),
                     velocity_mps=c * m / (2.0 * t_u * fc * n_c))
    return CandidatePair(sol_a=sol_a, sol_b=sol_b)
