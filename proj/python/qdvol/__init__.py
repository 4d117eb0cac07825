"""Masur-Veech volumes of strata of meromorphic quadratic differentials."""

from _qdvol import (
    connected_series,
    count_covers,
    estimate_volume,
    genus0_volume,
    hyperelliptic_volume,
    invariants,
    validate_sums,
    verify_table,
    volume,
)

__all__ = [
    "connected_series",
    "count_covers",
    "estimate_volume",
    "genus0_volume",
    "hyperelliptic_volume",
    "invariants",
    "validate_sums",
    "verify_table",
    "volume",
]
