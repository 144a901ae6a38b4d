import math
from fractions import Fraction

import pytest

import snwalk


def test_partitions_and_dimensions():
    parts = snwalk.partitions(5)
    assert parts[0] == [5] and parts[-1] == [1, 1, 1, 1, 1]
    assert len(parts) == snwalk.partition_count(5) == 7
    assert sum(snwalk.dimension(p) ** 2 for p in parts) == math.factorial(5)
    assert snwalk.partition_count(100) == 190569292


def test_exact_ratios():
    assert snwalk.character_ratio((3, 1)) == Fraction(1, 3)
    assert snwalk.character_ratio((2, 2)) == 0
    assert snwalk.eigenvalue((4,)) == 1
    assert snwalk.s_m_ratio(30, 3) == Fraction(7, 5604)


def test_character_table_matches_evaluator():
    table = snwalk.character_table(6)
    parts = snwalk.partitions(6)
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            assert table[i][j] == snwalk.character(lam, mu)


def test_walk_distribution():
    masses = snwalk.class_masses(4, 3)
    assert sum(masses) == 1
    curve = snwalk.tv_curve(6, 12)
    assert len(curve) == 13
    assert curve[0] == pytest.approx(1 - 1 / math.factorial(6))
    for k in range(1, 13):
        assert curve[k] <= math.sqrt(snwalk.ubl_bound(6, k)) + 1e-15


def test_spectrum_rows():
    rows = snwalk.spectrum(4)
    assert rows[0]["lambda"] == (4,) and rows[0]["s"] == 1.0
    assert {r["zone"] for r in rows} <= {"A1", "A2", "A3"}


def test_profile_and_simulation():
    rows = snwalk.profile(0.0, [8, 12], 4)
    assert [r["n"] for r in rows] == [8, 12]
    assert rows[0]["poisson_limit"] == pytest.approx(snwalk.limiting_profile(0.0))
    counts, generator = snwalk.simulate(5, 8, 1000, 7)
    assert sum(counts) == 1000
    assert snwalk.simulate(5, 8, 1000, 7) == (counts, generator)


def test_errors():
    with pytest.raises(ValueError):
        snwalk.partitions(-1)
    with pytest.raises(ValueError):
        snwalk.zone_sum(10, 1, "A4")
