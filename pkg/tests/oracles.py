"""Slow, obviously-correct reference implementations used by the tests.

Nothing here touches the library's shortest-path or vectorized code paths.
"""

from functools import reduce
from itertools import groupby
from math import gcd


def members(gens, bound):
    """Boolean list: ``x`` in the semigroup for 0 <= x <= bound."""
    ok = [False] * (bound + 1)
    ok[0] = True
    for x in range(1, bound + 1):
        ok[x] = any(x >= g and ok[x - g] for g in gens)
    return ok


def frobenius_bound(gens):
    # Schur's bound on the Frobenius number: (a1 - 1)(an - 1) - 1
    return (min(gens) - 1) * (max(gens) - 1)


def apery(gens):
    a = min(gens)
    bound = frobenius_bound(gens) + a + 1
    ok = members(gens, bound)
    return sorted(x for x in range(bound + 1) if ok[x] and (x < a or not ok[x - a]))


def frobenius(gens):
    bound = frobenius_bound(gens) + 1
    ok = members(gens, bound)
    gaps = [x for x in range(bound + 1) if not ok[x]]
    return max(gaps) if gaps else -1


def minimal_generators(gens):
    """Minimal generating set of the semigroup spanned by ``gens``."""
    gens = sorted(set(gens))
    keep = []
    for g in gens:
        ok = members(keep, g) if keep else [True] + [False] * g
        if not ok[g]:
            keep.append(g)
    return keep


def is_numerical(gens):
    return reduce(gcd, gens) == 1


def all_factorizations(gens, x):
    out = []

    def rec(i, rest, acc):
        if i == len(gens):
            if rest == 0:
                out.append(tuple(acc))
            return
        for c in range(rest // gens[i] + 1):
            rec(i + 1, rest - c * gens[i], acc + [c])

    rec(0, x, [])
    return out


def order(gens, x):
    return max(sum(f) for f in all_factorizations(gens, x))


def power_levels(gens, bound, levels):
    """``[set(nM ∩ [0, bound]) for n in 0..levels]`` by iterated sumsets; level 0 is the semigroup."""
    ok = members(gens, bound)
    out = [{x for x in range(bound + 1) if ok[x]}]
    out.append({x for x in out[0] if x > 0})
    for _ in range(levels - 1):
        cur = {x + g for x in out[-1] for g in gens if x + g <= bound}
        out.append(cur)
    return out


def apery_table(gens):
    """(rows, r) with rows[n][i] = least element of nM congruent to i mod a1."""
    a = min(gens)
    ap = apery(gens)
    levels = a + 1
    bound = max(ap) + (levels + 1) * a
    sets = power_levels(gens, bound, levels)
    rows = []
    for n in range(levels + 1):
        best = [None] * a
        for x in sorted(sets[n]):
            if best[x % a] is None:
                best[x % a] = x
        rows.append(best)
    r = next(n for n in range(levels) if rows[n + 1] == [w + a for w in rows[n]])
    return rows[: r + 1], r


def hilbert(gens, n):
    """#(nM minus (n+1)M) by counting both ideals up to a safe bound."""
    if n == 0:
        return 1
    a = min(gens)
    bound = frobenius(gens) + (n + 2) * a + 1
    sets = power_levels(gens, bound, n + 1)
    return len(sets[n]) - len(sets[n + 1])


def decomposition(gens):
    """(free shifts, torsion) read off the brute-force table, landings by groupby."""
    rows, _ = apery_table(gens)
    a = min(gens)
    free, torsion = [0], []
    for i in range(1, a):
        col = [row[i] for row in rows]
        runs, pos = [], 0
        for _, grp in groupby(col):
            k = len(list(grp))
            if k >= 2:
                runs.append((pos, pos + k - 1))
            pos += k
        free.append(runs[-1][1])
        torsion.extend((runs[j - 1][1], runs[j][0] - runs[j - 1][1]) for j in range(1, len(runs)))
    return sorted(free), sorted(torsion)
