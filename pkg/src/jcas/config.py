"""OFDM system configuration, physical constants, and derived sensing capabilities.

All other modules take an :class:`OfdmConfig` as their single source of truth
for physics constants and block geometry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

SPEED_OF_LIGHT = 3.0e8  # m/s; round value, configurable per config instance


@dataclass(frozen=True)
class OfdmConfig:
    """OFDM block geometry and RF constants.

    Attributes
    ----------
    carrier_freq : float
        Carrier frequency [Hz].
    subcarrier_spacing : float
        Subcarrier spacing [Hz].
    n_subcarriers : int
        Subcarriers across the total signal bandwidth.
    n_symbols : int
        OFDM symbols in one block.
    n_sensing_freq : int
        Sensing subcarriers across the bandwidth (frequency comb size).
    n_sensing_time : int
        Sensing symbols across the block (time comb size).
    n_diag : int
        Sensing signals on the block diagonal.
    block_duration : float
        Block duration [s]; bookkeeping only.
    symbol_duration_physical : float
        Per-symbol duration including cyclic prefix [s]; bookkeeping only.
    useful_symbol_duration : float
        Cyclic-prefix-free symbol duration [s]. Must equal
        1/subcarrier_spacing; this, not the physical duration, enters all
        phase and estimation arithmetic.
    speed_of_light : float
        Propagation speed [m/s].
    """

    carrier_freq: float
    subcarrier_spacing: float
    n_subcarriers: int
    n_symbols: int
    n_sensing_freq: int
    n_sensing_time: int
    n_diag: int
    block_duration: float
    symbol_duration_physical: float
    useful_symbol_duration: float = field(default=0.0)
    speed_of_light: float = SPEED_OF_LIGHT

    def __post_init__(self) -> None:
        for name in ("carrier_freq", "subcarrier_spacing", "block_duration",
                     "symbol_duration_physical", "speed_of_light"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        for name in ("n_subcarriers", "n_symbols", "n_sensing_freq",
                     "n_sensing_time", "n_diag"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer")
        if self.useful_symbol_duration == 0.0:
            object.__setattr__(self, "useful_symbol_duration",
                               1.0 / self.subcarrier_spacing)
        elif self.useful_symbol_duration != 1.0 / self.subcarrier_spacing:
            raise ValueError(
                "useful_symbol_duration must equal 1/subcarrier_spacing")
        if self.n_subcarriers % self.n_sensing_freq:
            raise ValueError(
                f"frequency comb spacing {self.n_subcarriers}/{self.n_sensing_freq} "
                "is not an integer")
        if self.n_symbols % self.n_sensing_time:
            raise ValueError(
                f"time comb spacing {self.n_symbols}/{self.n_sensing_time} "
                "is not an integer")

    @classmethod
    def table1(cls) -> "OfdmConfig":
        """28 GHz / 400 MHz traffic-monitoring configuration used throughout."""
        return cls(
            carrier_freq=28e9,
            subcarrier_spacing=120e3,
            n_subcarriers=3360,
            n_symbols=3360,
            n_sensing_freq=480,
            n_sensing_time=480,
            n_diag=480,
            block_duration=30e-3,
            symbol_duration_physical=8.92e-6,
        )

    @property
    def bandwidth(self) -> float:
        """Total occupied bandwidth [Hz] = N_c * subcarrier spacing."""
        return self.n_subcarriers * self.subcarrier_spacing

    @property
    def freq_comb_spacing(self) -> int:
        """Subcarriers between adjacent sensing subcarriers."""
        return self.n_subcarriers // self.n_sensing_freq

    @property
    def time_comb_spacing(self) -> int:
        """Symbols between adjacent sensing symbols."""
        return self.n_symbols // self.n_sensing_time

    @property
    def wavelength(self) -> float:
        return self.speed_of_light / self.carrier_freq

    def validate_diagonal(self) -> None:
        """Diagonal allocation needs equal comb sizes on both axes."""
        if not (self.n_diag == self.n_sensing_freq == self.n_sensing_time):
            raise ValueError(
                "diagonal scheme requires n_diag == n_sensing_freq == n_sensing_time, "
                f"got {self.n_diag}/{self.n_sensing_freq}/{self.n_sensing_time}")


@dataclass(frozen=True)
class SensingCapabilities:
    """Resolution and unambiguous-range limits of one configuration."""

    range_resolution: float        # m
    velocity_resolution: float     # m/s
    max_unambiguous_range: float   # m
    max_unambiguous_velocity: float  # m/s


def capabilities(cfg: OfdmConfig) -> SensingCapabilities:
    """Derive the four sensing-capability figures from the block geometry.

    Range resolution is set by the full occupied bandwidth, the unambiguous
    range by the frequency comb spacing; velocity resolution by the observed
    block span, the unambiguous velocity by the time comb spacing.
    """
    c = cfg.speed_of_light
    t_u = cfg.useful_symbol_duration
    l_f = cfg.freq_comb_spacing
    l_t = cfg.time_comb_spacing
    return SensingCapabilities(
        range_resolution=c / (2.0 * cfg.n_subcarriers * cfg.subcarrier_spacing),
        velocity_resolution=c / (2.0 * cfg.carrier_freq * cfg.n_sensing_time * l_t * t_u),
        max_unambiguous_range=c / (2.0 * l_f * cfg.subcarrier_spacing),
        max_unambiguous_velocity=c / (2.0 * cfg.carrier_freq * l_t * t_u),
    )


@dataclass(frozen=True)
class Target:
    """One point reflector.

    Positive radial velocity means the target recedes (range increasing).
    Range may be zero at construction but such targets are rejected by the
    channel model.
    """

    range_m: float
    radial_velocity_mps: float
    rcs_m2: float

    def __post_init__(self) -> None:
        if self.range_m < 0:
            raise ValueError(f"target range must be >= 0, got {self.range_m}")
        if self.rcs_m2 <= 0:
            raise ValueError(f"target RCS must be > 0, got {self.rcs_m2}")
