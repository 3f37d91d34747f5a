"""Forward echo model in the modulation-symbol domain.

Synthesizes the normalized Rx/Tx symbol observations a set of point targets
produces on the grid and diagonal sensing combs, with radar-equation
amplitude scaling and optional additive white Gaussian noise. Time-domain
OFDM modulation, multipath, and clutter are out of scope; each target
contributes one complex amplitude and two linear phase ramps.

Sign conventions: range delay rotates the phase clockwise with subcarrier
index, recession (positive radial velocity) rotates it counterclockwise with
symbol index.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config import OfdmConfig, Target


class DiagonalModel(Enum):
    """Echo model on the diagonal comb.

    SINGLE_TONE is the literal product of the range and velocity phase ramps
    and yields one spectral peak; DUAL_TONE splits each target into the
    sum-and-difference tone pair that produces the operational dual-peak
    radar image. DUAL_TONE is the default everywhere.
    """

    SINGLE_TONE = "single-tone"
    DUAL_TONE = "dual-tone"


@dataclass(frozen=True)
class NoiseSpec:
    """Additive complex white Gaussian noise level.

    snr_db is measured against the strongest target's per-sample amplitude;
    None disables noise entirely.
    """

    snr_db: float | None = None
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.snr_db is not None and not np.isfinite(self.snr_db):
            raise ValueError("snr_db must be finite when present")


@dataclass(frozen=True)
class LinkBudget:
    """Transmit power [W] and linear antenna gains."""

    tx_power: float = 1.0
    tx_gain: float = 1.0
    rx_gain: float = 1.0

    def __post_init__(self) -> None:
        if min(self.tx_power, self.tx_gain, self.rx_gain) <= 0:
            raise ValueError("link budget terms must be positive")


@dataclass(frozen=True)
class SymbolMatrix:
    """Normalized Rx/Tx quotient on the grid comb, n_sensing_freq x n_sensing_time."""

    values: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.values)
        if v.ndim != 2:
            raise ValueError("SymbolMatrix values must be 2-D")
        if not np.isfinite(v).all():
            raise ValueError("SymbolMatrix values must be finite")


@dataclass(frozen=True)
class DiagonalVector:
    """Normalized Rx/Tx quotient along the diagonal comb, length n_diag."""

    values: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.values)
        if v.ndim != 1:
            raise ValueError("DiagonalVector values must be 1-D")
        if not np.isfinite(v).all():
            raise ValueError("DiagonalVector values must be finite")


def rx_power(budget: LinkBudget, cfg: OfdmConfig, target: Target) -> float:
    """Received echo power [W].

    Evaluates P_Tx*G_Tx*G_Rx*sigma*lambda^2 / ((4*pi)^3 * R^4 * f_c^2).
    The f_c^2 factor is kept as-is; only power ratios at fixed carrier are
    consumed downstream, where it cancels against lambda^2.
    """
    if target.range_m <= 0:
        raise ValueError("target range must be > 0 for the radar equation")
    lam = cfg.wavelength
    return (budget.tx_power * budget.tx_gain * budget.rx_gain
            * target.rcs_m2 * lam ** 2
            / ((4.0 * np.pi) ** 3 * target.range_m ** 4 * cfg.carrier_freq ** 2))


def target_amplitudes(cfg: OfdmConfig, budget: LinkBudget,
                      targets: list[Target], seed: int,
                      frame_index: int = 0) -> np.ndarray:
    """Per-target complex amplitudes for one measurement frame.

    Magnitudes follow sqrt(rx_power), normalized so the strongest target has
    unit amplitude (which is also the noise reference). Phases are uniform
    random per target, drawn deterministically from (seed, frame_index); the
    reflection phase carries no usable structure.
    """
    if not targets:
        raise ValueError("need at least one target")
    powers = np.array([rx_power(budget, cfg, t) for t in targets])
    mags = np.sqrt(powers / powers.max())
    rng = np.random.default_rng([seed, frame_index])
    phases = rng.uniform(0.0, 2.0 * np.pi, len(targets))
    return mags * np.exp(1j * phases)


def range_bin(cfg: OfdmConfig, range_m: float) -> float:
    """Fractional spectral bin contributed by the round-trip delay."""
    return 2.0 * cfg.subcarrier_spacing * range_m * cfg.n_subcarriers / cfg.speed_of_light


def doppler_bin(cfg: OfdmConfig, velocity_mps: float) -> float:
    """Fractional spectral bin contributed by the Doppler shift."""
    return (2.0 * cfg.carrier_freq * velocity_mps * cfg.time_comb_spacing
            * cfg.useful_symbol_duration * cfg.n_sensing_time / cfg.speed_of_light)


def grid_peak_bins(cfg: OfdmConfig, target: Target) -> tuple[float, float]:
    """Fractional (range bin, doppler bin) of a target on the grid comb."""
    return range_bin(cfg, target.range_m), doppler_bin(cfg, target.radial_velocity_mps)


def dual_peak_bins(cfg: OfdmConfig, target: Target) -> tuple[float, float]:
    """Fractional (low, high) spectral bins of a target's dual-peak profile.

    The diagonal comb superposes the range and Doppler ramps, so one target
    maps to the tone pair at |l_range - l_doppler| and l_range + l_doppler.
    """
    l_r = range_bin(cfg, target.range_m)
    l_d = doppler_bin(cfg, target.radial_velocity_mps)
    return abs(l_r - l_d), l_r + l_d


def _check_synth_inputs(targets: list[Target], amps: np.ndarray) -> np.ndarray:
    if not targets:
        raise ValueError("need at least one target")
    amps = np.asarray(amps, dtype=complex)
    if amps.shape != (len(targets),):
        raise ValueError("amps must have one entry per target")
    for t in targets:
        if t.range_m <= 0:
            raise ValueError("target range must be > 0 for synthesis")
    return amps


def add_awgn(values: np.ndarray, noise: NoiseSpec | None,
             reference_amplitude: float = 1.0) -> np.ndarray:
    """Add circular complex Gaussian noise at the configured SNR.

    Per-sample noise variance satisfies reference_amplitude^2 / variance =
    10^(snr_db/10). Absent spec or absent snr_db is the identity. Output is
    deterministic under the spec's rng_seed.
    """
    values = np.asarray(values, dtype=complex)
    if noise is None or noise.snr_db is None:
        return values
    variance = reference_amplitude ** 2 / 10.0 ** (noise.snr_db / 10.0)
    rng = np.random.default_rng(noise.rng_seed)
    scale = np.sqrt(variance / 2.0)
    w = rng.standard_normal(values.shape) + 1j * rng.standard_normal(values.shape)
    return values + scale * w


def synthesize_grid(cfg: OfdmConfig, targets: list[Target], amps: np.ndarray,
                    noise: NoiseSpec | None = None) -> SymbolMatrix:
    """Normalized grid-comb observation of the given targets.

    Entry (i, j) sums amp * exp(-j*4*pi*L_f*df*R*i/c) *
    exp(+j*4*pi*L_t*T_u*f_c*v*j/c) over targets; the comb spacings enter the
    ramps so that spectral peaks land on the full-bandwidth bin positions.
    """
    amps = _check_synth_inputs(targets, amps)
    i = np.arange(cfg.n_sensing_freq)[:, None]
    j = np.arange(cfg.n_sensing_time)[None, :]
    values = np.zeros((cfg.n_sensing_freq, cfg.n_sensing_time), dtype=complex)
    for target, amp in zip(targets, amps):
        p, q = grid_peak_bins(cfg, target)
        values += (amp
                   * np.exp(-2j * np.pi * p * i / cfg.n_sensing_freq)
                   * np.exp(+2j * np.pi * q * j / cfg.n_sensing_time))
    values = add_awgn(values, noise, reference_amplitude=float(np.abs(amps).max()))
    return SymbolMatrix(values)


def synthesize_diag(cfg: OfdmConfig, targets: list[Target], amps: np.ndarray,
                    noise: NoiseSpec | None = None,
                    model: DiagonalModel = DiagonalModel.DUAL_TONE) -> DiagonalVector:
    """Normalized diagonal-comb observation of the given targets."""
    cfg.validate_diagonal()
    amps = _check_synth_inputs(targets, amps)
    k = np.arange(cfg.n_diag)
    values = np.zeros(cfg.n_diag, dtype=complex)
    for target, amp in zip(targets, amps):
        l_r = range_bin(cfg, target.range_m)
        l_d = doppler_bin(cfg, target.radial_velocity_mps)
        if model is DiagonalModel.SINGLE_TONE:
            values += amp * np.exp(2j * np.pi * (l_d - l_r) * k / cfg.n_diag)
        elif model is DiagonalModel.DUAL_TONE:
            values += (amp / 2.0) * (
                np.exp(2j * np.pi * (l_r + l_d) * k / cfg.n_diag)
                + np.exp(2j * np.pi * abs(l_r - l_d) * k / cfg.n_diag))
        else:
            raise ValueError(f"unknown diagonal model: {model!r}")
    values = add_awgn(values, noise, reference_amplitude=float(np.abs(amps).max()))
    return DiagonalVector(values)
