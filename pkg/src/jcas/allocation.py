"""Sensing-resource allocations over the subcarrier x symbol block.

Two layouts: a grid comb (one sensing signal every L_f subcarriers and every
L_t symbols) and a diagonal (one sensing signal per diagonal step
(k*L_f, k*L_t)). Entries are stored as index pairs, not a dense mask; the
diagonal occupies only N cells of an N_c x N_sym block, so a mask would be
almost entirely empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .config import OfdmConfig


class AllocationKind(Enum):
    GRID = "grid"
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class Allocation:
    """Ordered sensing-resource positions (subcarrier index, symbol index)."""

    kind: AllocationKind
    entries: tuple[tuple[int, int], ...]
    cfg: OfdmConfig


def build_allocation(cfg: OfdmConfig, kind: AllocationKind) -> Allocation:
    """Lay out sensing signals for the given scheme.

    Grid entries are row-major over (frequency step, time step); diagonal
    entries ascend along the block diagonal. Non-integral comb spacing is
    rejected by the config itself.
    """
    l_f = cfg.freq_comb_spacing
    l_t = cfg.time_comb_spacing
    if kind is AllocationKind.GRID:
        entries = tuple(
            (i * l_f, j * l_t)
            for i in range(cfg.n_sensing_freq)
            for j in range(cfg.n_sensing_time)
        )
    elif kind is AllocationKind.DIAGONAL:
        cfg.validate_diagonal()
        entries = tuple((k * l_f, k * l_t) for k in range(cfg.n_diag))
    else:
        raise ValueError(f"unknown allocation kind: {kind!r}")
    return Allocation(kind=kind, entries=entries, cfg=cfg)


def overhead(alloc: Allocation) -> float:
    """Fraction of the block's resource elements spent on sensing."""
    total = alloc.cfg.n_subcarriers * alloc.cfg.n_symbols
    return len(alloc.entries) / total
