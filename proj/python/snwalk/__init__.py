"""Exact analysis of the random-transposition shuffle on S_n.

Thin wrapper over the compiled ``_core`` module: big integers come back as
``int`` and exact rationals as ``fractions.Fraction``.
"""

from fractions import Fraction

from . import _core
from ._core import (
    ResourceLimitError,
    TableUnavailableError,
    character,
    character_table,
    ds_bound,
    limiting_profile,
    partitions,
    poisson_tv,
    profile,
    simulate,
    steps_for,
    tv_curve,
    tv_to_uniform,
    ubl_bound,
    zone_sum,
)

__version__ = "0.1.0"


def _fraction(pair):
    num, den = pair
    return Fraction(int(num), int(den))


def partition_count(n):
    return int(_core.partition_count(n))


def dimension(shape):
    return int(_core.dimension(list(shape)))


def character_ratio(shape):
    return _fraction(_core.character_ratio(list(shape)))


def eigenvalue(shape):
    return _fraction(_core.eigenvalue(list(shape)))


def s_m_ratio(n, M):
    return _fraction(_core.s_m_ratio(n, M))


def class_masses(n, k):
    """Exact P^{*k}(C_mu) for every class, in ``partitions(n)`` order."""
    return [_fraction(p) for p in _core.class_masses(n, k)]


def spectrum(n):
    rows = _core.spectrum(n)
    for row in rows:
        row["dim"] = int(row["dim"])
        row["ratio"] = _fraction(row["ratio"])
        row["lambda"] = tuple(row["lambda"])
    return rows


__all__ = [
    "ResourceLimitError",
    "TableUnavailableError",
    "character",
    "character_ratio",
    "character_table",
    "class_masses",
    "dimension",
    "ds_bound",
    "eigenvalue",
    "limiting_profile",
    "partition_count",
    "partitions",
    "poisson_tv",
    "profile",
    "s_m_ratio",
    "simulate",
    "spectrum",
    "steps_for",
    "tv_curve",
    "tv_to_uniform",
    "ubl_bound",
    "zone_sum",
]
