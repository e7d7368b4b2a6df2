"""Numerical semigroups and their element-level invariants.

A semigroup is stored as its minimal generators plus the Apéry set with
respect to the multiplicity, indexed by residue. Membership, the Frobenius
number and symmetry are read off that array; orders and minimal lengths come
from a shared dynamic program that is extended on demand.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass, field
from functools import reduce
from math import gcd

import numpy as np

from .errors import GcdNotOne, NotAMember, NotMinimal

__all__ = [
    "Factorization",
    "ElementProfile",
    "NumericalSemigroup",
    "new_semigroup",
    "apery_set",
    "contains",
    "frobenius",
    "factorizations",
    "order",
    "length_set",
    "element_profile",
    "is_homogeneous",
    "is_symmetric",
]

# Largest integer the order tables will index; beyond this we refuse rather
# than allocate gigabytes.
MAX_DP_BOUND = 200_000_000


def _residue_shortest_paths(modulus, steps):
    """Least reachable value in each residue class mod ``modulus``.

    Dijkstra on Z/modulus with an edge of weight ``s`` for every step ``s``.
    Unreachable classes are ``None``.
    """
    dist = [None] * modulus
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        w, r = heapq.heappop(heap)
        if w != dist[r]:
            continue
        for s in steps:
            nw = w + s
            nr = nw % modulus
            if dist[nr] is None or nw < dist[nr]:
                dist[nr] = nw
                heapq.heappush(heap, (nw, nr))
    return dist


def _in_span(x, gens):
    """True iff ``x`` is a nonnegative integer combination of ``gens``."""
    if x == 0:
        return True
    if not gens:
        return False
    a = min(gens)
    dist = _residue_shortest_paths(a, [g for g in gens if g != a])
    w = dist[x % a]
    return w is not None and w <= x


@dataclass(frozen=True)
class Factorization:
    exponents: tuple
    value: int
    length: int


@dataclass(frozen=True)
class ElementProfile:
    element: int
    order: int
    length_set: tuple

    @property
    def homogeneous(self):
        return len(self.length_set) <= 1


class _OrderTables:
    """Max- and min-length tables for 0..bound-1, grown in blocks of a1.

    Every generator is >= a1, so a block of a1 consecutive integers depends
    only on values strictly before it and can be filled with vector ops.
    Non-members hold -1.
    """

    def __init__(self, generators):
        self.generators = generators
        self.a1 = generators[0]
        self.maxlen = np.zeros(1, dtype=np.int32)
        self.minlen = np.zeros(1, dtype=np.int32)
        self._lock = threading.Lock()

    @property
    def bound(self):
        return len(self.maxlen)

    def ensure(self, bound):
        if bound <= self.bound:
            return
        if bound > MAX_DP_BOUND:
            raise OverflowError(f"order table bound {bound} exceeds {MAX_DP_BOUND}")
        with self._lock:
            old = self.bound
            if bound <= old:
                return
            # grow geometrically so repeated small requests stay cheap
            new = max(bound, 2 * old)
            mx = np.full(new, -1, dtype=np.int32)
            mn = np.full(new, -1, dtype=np.int32)
            mx[:old] = self.maxlen
            mn[:old] = self.minlen
            a1 = self.a1
            big = np.iinfo(np.int32).max
            lo = old
            while lo < new:
                hi = min(lo + a1, new)
                best_mx = np.full(hi - lo, -1, dtype=np.int32)
                best_mn = np.full(hi - lo, big, dtype=np.int32)
                for g in self.generators:
                    s_lo, s_hi = lo - g, hi - g
                    if s_hi <= 0:
                        continue
                    off = max(0, -s_lo)
                    src_mx = mx[max(s_lo, 0):s_hi]
                    src_mn = mn[max(s_lo, 0):s_hi]
                    ok = src_mx >= 0
                    seg = slice(off, hi - lo)
                    best_mx[seg] = np.where(ok, np.maximum(best_mx[seg], src_mx + 1), best_mx[seg])
                    best_mn[seg] = np.where(ok, np.minimum(best_mn[seg], src_mn + 1), best_mn[seg])
                best_mn[best_mn == big] = -1
                mx[lo:hi] = best_mx
                mn[lo:hi] = best_mn
                lo = hi
            # publish min table first; readers check bound through maxlen
            self.minlen = mn
            self.maxlen = mx


@dataclass(frozen=True)
class NumericalSemigroup:
    """Semigroup minimally generated by ``generators`` (ascending).

    ``apery_min[i]`` is the least element congruent to ``i`` mod the
    multiplicity. Use :func:`new_semigroup` to construct.
    """

    generators: tuple
    apery_min: tuple
    _orders: _OrderTables = field(repr=False, compare=False, hash=False)

    @property
    def multiplicity(self):
        return self.generators[0]

    @property
    def embedding_dimension(self):
        return len(self.generators)

    def __contains__(self, x):
        return contains(self, x)

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"

    def order_table(self, bound):
        """Max-length array covering at least ``0..bound-1`` (-1 = not in semigroup)."""
        self._orders.ensure(bound)
        return self._orders.maxlen

    def min_length_table(self, bound):
        self._orders.ensure(bound)
        return self._orders.minlen


def new_semigroup(generators):
    """Validate ``generators`` and build the semigroup they minimally generate.

    Raises GcdNotOne or NotMinimal; the input order does not matter.
    """
    gens = tuple(sorted(int(g) for g in generators))
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError(f"generators must be positive, got {gens}")
    g = reduce(gcd, gens)
    if g != 1:
        raise GcdNotOne(gens, g)
    for idx, x in enumerate(gens):
        others = gens[:idx] + gens[idx + 1:]
        if _in_span(x, others):
            raise NotMinimal(gens, x)
    a1 = gens[0]
    dist = _residue_shortest_paths(a1, gens[1:])
    assert all(w is not None for w in dist)
    return NumericalSemigroup(gens, tuple(dist), _OrderTables(gens))


def contains(s, x):
    if x < 0:
        return False
    return x >= s.apery_min[x % s.multiplicity]


def apery_set(s, a=None):
    """Apéry set of ``s`` with respect to the nonzero element ``a``.

    Defaults to the multiplicity. Returned as a sorted tuple.
    """
    if a is None or a == s.multiplicity:
        return tuple(sorted(s.apery_min))
    if a <= 0 or not contains(s, a):
        raise NotAMember(a, s.generators)
    dist = _residue_shortest_paths(a, [g for g in s.generators if g != a])
    return tuple(sorted(dist))


def frobenius(s):
    return max(s.apery_min) - s.multiplicity


def _require_member(s, x):
    if not contains(s, x):
        raise NotAMember(x, s.generators)


def order(s, x):
    """Maximum factorization length of ``x``; ``order(s, 0) == 0``."""
    _require_member(s, x)
    return int(s.order_table(x + 1)[x])


def min_length(s, x):
    _require_member(s, x)
    return int(s.min_length_table(x + 1)[x])


def factorizations(s, x):
    """All factorizations of ``x``, lexicographic on exponent tuples."""
    if x < 0:
        return []
    gens = s.generators
    e = len(gens)
    out = []
    exps = [0] * e

    def rec(i, rest):
        if i == e - 1:
            if rest % gens[i] == 0:
                exps[i] = rest // gens[i]
                out.append(tuple(exps))
            return
        for c in range(rest // gens[i] + 1):
            exps[i] = c
            rec(i + 1, rest - c * gens[i])
        exps[i] = 0

    # ascending exponents in generator order: output is already lexicographic
    rec(0, x)
    return [Factorization(t, x, sum(t)) for t in out]


def length_set(s, x):
    _require_member(s, x)
    return tuple(sorted({f.length for f in factorizations(s, x)}))


def element_profile(s, x):
    return ElementProfile(x, order(s, x), length_set(s, x))


def is_homogeneous(s):
    """True iff every element of the Apéry set has a single factorization length."""
    ap = s.apery_min
    mx = s.order_table(max(ap) + 1)
    mn = s.min_length_table(max(ap) + 1)
    return all(mx[w] == mn[w] for w in ap)


def is_symmetric(s):
    f = frobenius(s)
    if f < 0:
        return True
    return all(contains(s, x) != contains(s, f - x) for x in range(f + 1))
