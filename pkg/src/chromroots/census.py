"""Counts of the small subgraphs that fix the top five chromatic coefficients.

Counting is direct enumeration over all 3-, 4- and 5-subsets of vertices.
Each subset's induced graph is encoded as an edge bit-code and classified
through a lookup table built once by brute-force isomorphism against the
pattern graphs.  Pair ``(i, j)``, ``i < j``, of a subset occupies bit
``j*(j-1)/2 + i``, so the 3-, 4- and 5-vertex codes extend one another as
vertices are appended.
"""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass, fields
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

import numba
import numpy as np

from .graph import Graph, complete, complete_bipartite, cycle, k23_plus_edge, wheel5

STATISTICS = ("m", "t", "k4", "k5", "ic4", "ic5", "ik23", "ih", "iw5")


@dataclass(frozen=True)
class SubgraphCounts:
    """Edges, triangles, K4 and K5 subgraphs, and induced C4, C5, K2,3, H and W5.

    H is K2,3 plus an edge inside its part of size three; see
    :func:`chromroots.graph.k23_plus_edge`.
    """

    m: int = 0
    t: int = 0
    k4: int = 0
    k5: int = 0
    ic4: int = 0
    ic5: int = 0
    ik23: int = 0
    ih: int = 0
    iw5: int = 0

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def as_tuple(self) -> tuple[int, ...]:
        return astuple(self)

    def deviations(self, expected: "ExpectedCounts") -> dict[str, float]:
        """Relative deviation ``observed / expected - 1`` per statistic (NaN where expected is 0)."""
        out = {}
        for name in STATISTICS:
            e = getattr(expected, name)
            out[name] = float(Fraction(getattr(self, name)) / e - 1) if e else math.nan
        return out


@dataclass(frozen=True)
class ExpectedCounts:
    """Expectations of the nine statistics in G(n, p), as exact rationals."""

    m: Fraction
    t: Fraction
    k4: Fraction
    k5: Fraction
    ic4: Fraction
    ic5: Fraction
    ik23: Fraction
    ih: Fraction
    iw5: Fraction

    def as_floats(self) -> dict[str, float]:
        return {f.name: float(getattr(self, f.name)) for f in fields(self)}


def expected_counts(n: int, p) -> ExpectedCounts:
    """Expected counts in G(n, p).  A float ``p`` is converted exactly to a Fraction."""
    p = Fraction(p)
    if not (0 <= p <= 1):
        raise ValueError(f"edge probability {p} outside [0, 1]")
    q = 1 - p
    c2, c3, c4, c5 = (math.comb(n, k) for k in (2, 3, 4, 5))
    return ExpectedCounts(
        m=p * c2,
        t=p**3 * c3,
        k4=p**6 * c4,
        k5=p**10 * c5,
        ic4=3 * p**4 * q**2 * c4,
        ic5=12 * p**5 * q**5 * c5,
        ik23=10 * p**6 * q**4 * c5,
        ih=30 * p**7 * q**3 * c5,
        iw5=15 * p**8 * q**2 * c5,
    )


# ---------------------------------------------------------------------------
# pattern tables


def _pair_bit(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _code(g: Graph) -> int:
    code = 0
    for u, v in g.edges():
        code |= 1 << _pair_bit(u, v)
    return code


def _graph_of_code(k: int, code: int) -> Graph:
    return Graph(k, [(i, j) for i, j in combinations(range(k), 2) if code >> _pair_bit(i, j) & 1])


def _relabel_code(k: int, code: int, perm: tuple[int, ...]) -> int:
    out = 0
    for i, j in combinations(range(k), 2):
        if code >> _pair_bit(i, j) & 1:
            out |= 1 << _pair_bit(perm[i], perm[j])
    return out


@lru_cache(maxsize=None)
def _class_tables() -> tuple[np.ndarray, np.ndarray]:
    """Lookup tables from 6-bit and 10-bit codes to pattern class ids.

    4-vertex classes: 1 = C4, 2 = K4.  5-vertex classes: 1 = C5, 2 = K2,3,
    3 = H, 4 = W5, 5 = K5.
    """
    tables = []
    for k, patterns in (
        (4, [cycle(4), complete(4)]),
        (5, [cycle(5), complete_bipartite(2, 3), k23_plus_edge(), wheel5(), complete(5)]),
    ):
        table = np.zeros(1 << (k * (k - 1) // 2), dtype=np.int8)
        for cls, pat in enumerate(patterns, 1):
            base = _code(pat)
            for perm in permutations(range(k)):
                table[_relabel_code(k, base, perm)] = cls
        tables.append(table)
    return tables[0], tables[1]


# ---------------------------------------------------------------------------
# counting kernel


@numba.njit(cache=True)
def _census_kernel(a, t4, t5):
    n = a.shape[0]
    out = np.zeros(9, dtype=np.int64)
    # out: m, t, k4, k5, ic4, ic5, ik23, ih, iw5
    for i in range(n):
        for j in range(i + 1, n):
            c1 = a[i, j]
            out[0] += c1
            for k in range(j + 1, n):
                c2 = c1 | (a[i, k] << 1) | (a[j, k] << 2)
                if c2 == 7:
                    out[1] += 1
                for l in range(k + 1, n):
                    c3 = c2 | (a[i, l] << 3) | (a[j, l] << 4) | (a[k, l] << 5)
                    cls4 = t4[c3]
                    if cls4 == 1:
                        out[4] += 1
                    elif cls4 == 2:
                        out[2] += 1
                    for r in range(l + 1, n):
                        c4 = c3 | (a[i, r] << 6) | (a[j, r] << 7) | (a[k, r] << 8) | (a[l, r] << 9)
                        cls5 = t5[c4]
                        if cls5 == 1:
                            out[5] += 1
                        elif cls5 == 2:
                            out[6] += 1
                        elif cls5 == 3:
                            out[7] += 1
                        elif cls5 == 4:
                            out[8] += 1
                        elif cls5 == 5:
                            out[3] += 1
    return out


def census(g: Graph) -> SubgraphCounts:
    """Exact values of the nine statistics for ``g``."""
    t4, t5 = _class_tables()
    a = g.to_numpy().astype(np.int64)
    out = _census_kernel(a, t4, t5)
    c = [int(x) for x in out]
    return SubgraphCounts(*c)


# ---------------------------------------------------------------------------
# brute-force oracle


def _count_maps(g: Graph, pattern: Graph, subset: tuple[int, ...], induced: bool) -> int:
    pe = pattern.edges()
    pe_set = set(pe)
    k = pattern.n
    count = 0
    for perm in permutations(subset):
        if all(g.adjacent(perm[u], perm[v]) for u, v in pe):
            if induced and any(
                g.adjacent(perm[u], perm[v]) for u, v in combinations(range(k), 2) if (u, v) not in pe_set
            ):
                continue
            count += 1
    return count


def automorphism_count(pattern: Graph) -> int:
    return _count_maps(pattern, pattern, tuple(range(pattern.n)), induced=True)


def count_pattern_bruteforce(g: Graph, pattern: Graph, induced: bool) -> int:
    """Occurrences of ``pattern`` in ``g``: labelled embeddings over all subsets, divided by |Aut|."""
    if pattern.n > 5:
        raise ValueError("brute-force pattern counting is limited to patterns of order <= 5")
    total = sum(_count_maps(g, pattern, s, induced) for s in combinations(range(g.n), pattern.n))
    aut = automorphism_count(pattern)
    assert total % aut == 0
    return total // aut


def census_bruteforce(g: Graph) -> SubgraphCounts:
    return SubgraphCounts(
        m=g.m,
        t=count_pattern_bruteforce(g, complete(3), False),
        k4=count_pattern_bruteforce(g, complete(4), False),
        k5=count_pattern_bruteforce(g, complete(5), False),
        ic4=count_pattern_bruteforce(g, cycle(4), True),
        ic5=count_pattern_bruteforce(g, cycle(5), True),
        ik23=count_pattern_bruteforce(g, complete_bipartite(2, 3), True),
        ih=count_pattern_bruteforce(g, k23_plus_edge(), True),
        iw5=count_pattern_bruteforce(g, wheel5(), True),
    )
