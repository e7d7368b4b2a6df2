"""Ladder analysis of Apéry-table columns and the tangent cone built from it.

Each nonzero column of the table, read top-down, is a ladder. Its landings
(maximal runs of at least two equal values) give one free summand of the
tangent cone over the fiber cone, shifted by the end of the last landing,
and one torsion summand for every landing after the first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .table import HilbertSeries, apery_table, hilbert_function

__all__ = [
    "LadderProfile",
    "ConeDecomposition",
    "landings",
    "ladder_profile",
    "cone_decomposition",
    "is_tangent_cone_cm",
    "cone_hilbert_series",
    "nondecreasing_check",
]


def landings(values):
    """(start, end) index pairs of the maximal runs of >= 2 equal values."""
    out = []
    i, n = 0, len(values)
    while i < n:
        j = i
        while j + 1 < n and values[j + 1] == values[i]:
            j += 1
        if j > i:
            out.append((i, j))
        i = j + 1
    return out


@dataclass(frozen=True)
class LadderProfile:
    column: int
    values: tuple
    landings: tuple
    p: int
    d: int
    torsion: tuple  # (b_j, c_j) for j = 1..p

    def rebuild(self):
        """Reconstruct the ladder from its first value and landing structure."""
        if not self.values:
            return ()
        step = _step(self.values)
        runs = {s: e for s, e in self.landings}
        out = []
        k = 0
        v = self.values[0]
        while k < len(self.values):
            end = runs.get(k, k)
            out.extend([v] * (end - k + 1))
            k = end + 1
            v += step
        return tuple(out)


def _step(values):
    diffs = {b - a for a, b in zip(values, values[1:]) if b != a}
    return diffs.pop() if diffs else 0


def ladder_profile(table, i):
    """Landing data of column ``i`` (1 <= i < a1) of an Apéry table."""
    if not 1 <= i < table.multiplicity:
        raise IndexError(f"column {i} outside 1..{table.multiplicity - 1}")
    values = table.column(i)
    lands = landings(values)
    if not lands:
        # only possible with a single row, which needs a1 == 1
        return LadderProfile(i, values, (), 0, 0, ())
    p = len(lands) - 1
    d = lands[-1][1]
    torsion = tuple(
        (lands[j - 1][1], lands[j][0] - lands[j - 1][1]) for j in range(1, p + 1)
    )
    return LadderProfile(i, values, tuple(lands), p, d, torsion)


@dataclass(frozen=True)
class ConeDecomposition:
    """Free shifts (including 0 for the fiber cone itself) and torsion (shift, length)."""

    free_shifts: tuple
    torsion: tuple

    @property
    def rank(self):
        return len(self.free_shifts)

    @property
    def is_free(self):
        return not self.torsion


def cone_decomposition(s):
    t = apery_table(s)
    free = [0]
    torsion = []
    for i in range(1, t.multiplicity):
        prof = ladder_profile(t, i)
        free.append(prof.d)
        torsion.extend(prof.torsion)
    return ConeDecomposition(tuple(sorted(free)), tuple(sorted(torsion)))


def is_tangent_cone_cm(s):
    """CM verdict: the tangent cone is free over the fiber cone (no torsion)."""
    return cone_decomposition(s).is_free


def cone_hilbert_series(dec):
    """Hilbert series of the decomposition: sum x^d + (1-x) sum x^b (1 + ... + x^(c-1))."""
    top = max(list(dec.free_shifts) + [b + c for b, c in dec.torsion] + [0])
    coeffs = [0] * (top + 1)
    for d in dec.free_shifts:
        coeffs[d] += 1
    for b, c in dec.torsion:
        # (1 - x) x^b (1 + ... + x^(c-1)) = x^b - x^(b+c)
        coeffs[b] += 1
        coeffs[b + c] -= 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return HilbertSeries(tuple(coeffs))


def nondecreasing_check(s):
    """True iff the Hilbert function never drops (checked until it stabilizes)."""
    r = apery_table(s).reduction
    values = [hilbert_function(s, n) for n in range(r + 2)]
    return all(a <= b for a, b in zip(values, values[1:]))
