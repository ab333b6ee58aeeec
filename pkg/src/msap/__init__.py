"""Exact enumeration and verified bounds for multiple self-avoiding polygons
confined to an m x n grid, in the mosaic-tile formulation."""

from .bounds import (
    BoundsReport,
    RatioTable,
    Verdict,
    limit_estimate,
    lemma4_bounds,
    ratio_table,
    theorem_bounds,
    verify_sandwich,
)
from .clingratios import (
    ClingType,
    CountMatrix,
    RatioPair,
    cling_catalog,
    cp_ratio,
    cp_ratio_pair,
    proof_matrices,
    ratio_interval,
)
from .enumeration import (
    GrowthRatioMatrix,
    ScanOrder,
    brute_force_count,
    count_polygon_mosaics,
    count_quasimosaics,
    growth_ratios,
    quasimosaic_counts,
    scan_order,
)
from .errors import BudgetExceeded, DomainError, GridParseError, MsapError, PatternLengthMismatch
from .kernels import BACKEND
from .tiles import (
    CpMask,
    MosaicGrid,
    MosaicTile,
    cp_mask,
    is_polygon_mosaic,
    is_suitably_connected,
    parse_grid,
    tiles_matching,
)

__version__ = "0.1.0"
