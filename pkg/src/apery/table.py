"""Apéry tables of the ideal powers nM and the Hilbert data they determine."""

from __future__ import annotations

from dataclasses import dataclass

from .semigroup import contains, frobenius

__all__ = [
    "AperyTable",
    "HilbertSeries",
    "ideal_power_member",
    "reduction_number",
    "apery_table",
    "hilbert_function",
    "hilbert_function_direct",
    "hilbert_series",
]


@dataclass(frozen=True)
class AperyTable:
    """Rows ``0..r`` of Ap(nM); column ``i`` holds the class of residue ``i`` mod a1.

    Row 0 is the Apéry set itself, row 1 replaces its 0 by a1, and each later
    row moves an entry up by a1 exactly when it has no room in the next power.
    """

    multiplicity: int
    reduction: int
    rows: tuple

    def column(self, i):
        return tuple(row[i] for row in self.rows)

    def row(self, n):
        """Row ``n``, extended past the reduction number by adding a1."""
        r = self.reduction
        if n <= r:
            return self.rows[n]
        shift = (n - r) * self.multiplicity
        return tuple(w + shift for w in self.rows[r])

    def permuted(self, columns):
        """Rows with columns reordered to list the given residues in order."""
        return tuple(tuple(row[c] for c in columns) for row in self.rows)


@dataclass(frozen=True)
class HilbertSeries:
    """Series ``numerator(t) / (1 - t)`` with integer numerator coefficients."""

    numerator: tuple

    def value(self, n):
        return sum(self.numerator[: n + 1])

    @classmethod
    def from_hilbert_function(cls, values):
        """Build from H(0..D), where H is constant from D on."""
        coeffs = [values[0]] + [values[k] - values[k - 1] for k in range(1, len(values))]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))


def ideal_power_member(s, x, n):
    """True iff ``x`` lies in nM (n >= 1), or in the semigroup when n == 0."""
    if not contains(s, x):
        return False
    if n == 0:
        return True
    if x == 0:
        return False
    return int(s.order_table(x + 1)[x]) >= n


def _build(s):
    a1 = s.multiplicity
    if a1 == 1:
        return AperyTable(1, 0, ((0,),))
    # the reduction number is at most a1 - 1, so no entry exceeds this
    s.order_table(max(s.apery_min) + a1 * a1 + 1)
    rows = [tuple(s.apery_min)]
    while True:
        n = len(rows) - 1
        cur = rows[-1]
        ords = s.order_table(max(cur) + 1)
        nxt = tuple(w if w and ords[w] >= n + 1 else w + a1 for w in cur)
        if all(b == w + a1 for w, b in zip(cur, nxt)):
            return AperyTable(a1, n, tuple(rows))
        rows.append(nxt)


def apery_table(s):
    """The Apéry table with respect to the multiplicity (cached per semigroup)."""
    cached = s.__dict__.get("_apery_table")
    if cached is None:
        cached = _build(s)
        object.__setattr__(s, "_apery_table", cached)
    return cached


def reduction_number(s):
    return apery_table(s).reduction


def hilbert_function(s, n):
    """Number of elements of order exactly ``n``, read off the table."""
    if n == 0:
        return 1
    t = apery_table(s)
    if n >= t.reduction:
        return t.multiplicity
    return sum(1 for w, v in zip(t.rows[n], t.rows[n + 1]) if w != v)


def hilbert_function_direct(s, n):
    """#(nM \\ (n+1)M) by scanning every integer up to F + (n+1)a1."""
    bound = frobenius(s) + (n + 1) * s.multiplicity
    ords = s.order_table(bound + 1)
    if n == 0:
        return 1
    return int((ords[1 : bound + 1] == n).sum())


def hilbert_series(s):
    t = apery_table(s)
    values = [hilbert_function(s, n) for n in range(t.reduction + 1)]
    return HilbertSeries.from_hilbert_function(values)
