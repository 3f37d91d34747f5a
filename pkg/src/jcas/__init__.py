"""OFDM joint-communication-and-sensing radar simulator.

Grid-comb 2D-DFT and diagonal-comb 1D-DFT range-velocity estimation, a
modulation-symbol-domain channel model, highway scenes, multi-frame
ambiguity resolution, and a transform complexity benchmark.
"""

from .allocation import Allocation, AllocationKind, build_allocation, overhead
from .bench import BenchReport, OpCount, count_ops, run_bench
from .channel import (DiagonalModel, DiagonalVector, LinkBudget, NoiseSpec,
                      SymbolMatrix, add_awgn, doppler_bin, dual_peak_bins,
                      grid_peak_bins, range_bin, rx_power, synthesize_diag,
                      synthesize_grid, target_amplitudes)
from .config import OfdmConfig, SensingCapabilities, Target, capabilities
from .diag_estimator import (CandidatePair, Peak, PeakPair, RadarImage, Solution,
                             WindowKind, apply_window, candidates, detect_peaks_1d,
                             diag_spectrum, pair_peaks, psl)
from .grid_estimator import (GridDetection, RangeDopplerMap, bins_to_estimate,
                             detect_peaks_2d, range_doppler_map)
from .scenario import Scene, SceneFile, VehicleSpec, builtin_scene, load_scene, targets_at
from .tracking import Hypothesis, resolve_ambiguity

__all__ = [name for name in dir() if not name.startswith("_")]
