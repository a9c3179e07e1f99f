"""Exact chromatic polynomials.

The main engine is deletion-contraction on adjacency bitmasks, with these
reductions applied at every node of the recursion:

* disconnected graphs factor over their components;
* a simplicial vertex ``v`` of degree ``d`` contributes a factor ``x - d``;
* complete graphs are a base case, ``(x)_r``;
* graphs with edge density above 1/4 use the addition form
  ``P(G) = P(G + e) + P(G / e)`` on a non-edge, sparser graphs the deletion
  form ``P(G) = P(G - e) - P(G / e)``.

Results are memoised under a relabelling that sorts vertices by a degree
signature.  Equal keys mean identical relabelled adjacency, so a memo hit is
always sound (it is merely not complete as an isomorphism test).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .census import SubgraphCounts
from .graph import Graph
from .polynomial import Poly, binom

Adj = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """Raised when the recursion visits more nodes than the configured budget."""


# ---------------------------------------------------------------------------
# coefficient-list helpers (lowest degree first, plain ints)


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _mul_linear(a: list[int], r: int) -> list[int]:
    """Multiply by ``(x - r)``."""
    out = [0] * (len(a) + 1)
    for i, c in enumerate(a):
        out[i + 1] += c
        out[i] -= r * c
    return out


def _add(a: list[int], b: list[int], sign: int = 1) -> list[int]:
    if len(a) < len(b):
        a = a + [0] * (len(b) - len(a))
    out = list(a)
    for i, c in enumerate(b):
        out[i] += sign * c
    return out


def _falling(r: int) -> list[int]:
    out = [1]
    for i in range(r):
        out = _mul_linear(out, i)
    return out


# ---------------------------------------------------------------------------
# bitmask graph surgery


def _drop_bit(mask: int, v: int) -> int:
    return (mask & ((1 << v) - 1)) | ((mask >> (v + 1)) << v)


def _remove_vertex(adj: Adj, v: int) -> Adj:
    return tuple(_drop_bit(a, v) for i, a in enumerate(adj) if i != v)


def _contract(adj: Adj, u: int, v: int) -> Adj:
    """Identify ``v`` into ``u`` (edge or non-edge); parallel edges collapse."""
    merged = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    new = list(adj)
    new[u] = merged
    bu, bv = 1 << u, 1 << v
    for w in range(len(adj)):
        if w == u or w == v:
            continue
        if adj[w] & bv:
            new[w] = (adj[w] | bu) & ~bv
    return _remove_vertex(tuple(new), v)


def _components(adj: Adj) -> list[int]:
    seen = 0
    comps = []
    for v in range(len(adj)):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adj[low.bit_length() - 1] & ~comp
            comp |= nb
            frontier |= nb
        seen |= comp
        comps.append(comp)
    return comps


def _induced(adj: Adj, mask: int) -> Adj:
    vs = [v for v in range(len(adj)) if mask >> v & 1]
    out = []
    for v in vs:
        a = adj[v]
        na = 0
        for i, u in enumerate(vs):
            if a >> u & 1:
                na |= 1 << i
        out.append(na)
    return tuple(out)


def _canonical_key(adj: Adj) -> Adj:
    n = len(adj)
    deg = [a.bit_count() for a in adj]
    sig = []
    for v in range(n):
        a = adj[v]
        s = 0
        while a:
            low = a & -a
            s += deg[low.bit_length() - 1]
            a ^= low
        sig.append((deg[v], s, v))
    order = [t[2] for t in sorted(sig)]
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    key = []
    for v in order:
        a = adj[v]
        na = 0
        while a:
            low = a & -a
            na |= 1 << pos[low.bit_length() - 1]
            a ^= low
        key.append(na)
    return tuple(key)


# ---------------------------------------------------------------------------
# deletion-contraction


class _Engine:
    def __init__(self, memo: bool, budget: int | None):
        self.memo: dict[Adj, list[int]] | None = {} if memo else None
        self.budget = budget
        self.nodes = 0

    def run(self, adj: Adj) -> list[int]:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(f"deletion-contraction exceeded {self.budget} nodes")
        n = len(adj)
        if n == 0:
            return [1]

        # simplicial vertices peel off a linear factor each
        factors = []
        changed = True
        while changed and adj:
            changed = False
            for v in range(len(adj)):
                nb = adj[v]
                ok = True
                rest = nb
                while rest:
                    low = rest & -rest
                    u = low.bit_length() - 1
                    if (adj[u] | low) & nb != nb:
                        ok = False
                        break
                    rest ^= low
                if ok:
                    factors.append(nb.bit_count())
                    adj = _remove_vertex(adj, v)
                    changed = True
                    break
        if factors:
            out = self.run(adj) if adj else [1]
            for d in factors:
                out = _mul_linear(out, d)
            return out

        comps = _components(adj)
        if len(comps) > 1:
            out = [1]
            for c in comps:
                out = _mul(out, self.run(_induced(adj, c)))
            return out

        n = len(adj)
        m = sum(a.bit_count() for a in adj) // 2
        if m == n * (n - 1) // 2:
            return _falling(n)

        key = None
        if self.memo is not None:
            key = _canonical_key(adj)
            hit = self.memo.get(key)
            if hit is not None:
                return hit

        deg = [a.bit_count() for a in adj]
        full = (1 << n) - 1
        best = None
        if 4 * m > n * (n - 1) // 2:
            # above density 1/4 adding edges reaches cliques far sooner than
            # deleting them reaches forests: P(G) = P(G + e) + P(G / e)
            for u in range(n):
                non = full & ~adj[u] & ~((1 << (u + 1)) - 1)
                while non:
                    low = non & -non
                    v = low.bit_length() - 1
                    score = deg[u] + deg[v]
                    if best is None or score > best[0]:
                        best = (score, u, v)
                    non ^= low
            _, u, v = best
            added = list(adj)
            added[u] |= 1 << v
            added[v] |= 1 << u
            out = _add(self.run(tuple(added)), self.run(_contract(adj, u, v)), 1)
        else:
            for u in range(n):
                nb = adj[u] >> (u + 1)
                v = u + 1
                while nb:
                    if nb & 1:
                        score = deg[u] + deg[v]
                        if best is None or score > best[0]:
                            best = (score, u, v)
                    nb >>= 1
                    v += 1
            _, u, v = best
            deleted = list(adj)
            deleted[u] &= ~(1 << v)
            deleted[v] &= ~(1 << u)
            out = _add(self.run(tuple(deleted)), self.run(_contract(adj, u, v)), -1)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        if key is not None:
            self.memo[key] = out
        return out


@dataclass
class DCStats:
    nodes: int = 0
    memo_entries: int = 0


def chromatic_polynomial(
    g: Graph,
    *,
    memo: bool = True,
    budget: int | None = None,
    stats: DCStats | None = None,
) -> Poly:
    """Exact chromatic polynomial of ``g``.

    ``memo=False`` disables the isomorphism-signature cache for audit runs.
    ``budget`` caps the number of recursion nodes; exceeding it raises
    :class:`BudgetExceeded` rather than returning a partial answer.
    """
    if g.n < 1:
        raise ValueError("chromatic polynomial needs order >= 1")
    eng = _Engine(memo, budget)
    coeffs = eng.run(g.adj)
    if stats is not None:
        stats.nodes = eng.nodes
        stats.memo_entries = len(eng.memo) if eng.memo is not None else 0
    return Poly(coeffs)


def deletion(g: Graph, u: int, v: int) -> Graph:
    if not g.adjacent(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph.from_adjacency(adj)


def contraction(g: Graph, u: int, v: int) -> Graph:
    """Merge ``v`` into ``u``; vertices above ``v`` shift down by one."""
    return Graph.from_adjacency(_contract(g.adj, u, v))


# ---------------------------------------------------------------------------
# coefficient formula from subgraph counts


def top_coefficients(counts: SubgraphCounts, n: int) -> list[int]:
    """Coefficients of ``x^n, x^(n-1), ..., x^(n-4)`` with signs attached.

    The ``x^(n-4)`` coefficient is

        C(m,4) - C(m-2,2) t + C(t,2) - (m-3) ic4 + (2m-9) k4
               - ic5 + ik23 + 2 ih + 3 iw5 - 6 k5,

    checked exactly against deletion-contraction on every connected graph of
    order at most 8.  For ``n < 4`` only the first ``n + 1`` entries are
    returned.  Counts may be rational (expectations), in which case the
    binomials are the polynomial ones.
    """
    m, t = counts.m, counts.t
    c1 = m
    c2 = binom(m, 2) - t
    c3 = binom(m, 3) - (m - 2) * t - counts.ic4 + 2 * counts.k4
    c4 = (
        binom(m, 4)
        - binom(m - 2, 2) * t
        + binom(t, 2)
        - (m - 3) * counts.ic4
        + (2 * m - 9) * counts.k4
        - counts.ic5
        + counts.ik23
        + 2 * counts.ih
        + 3 * counts.iw5
        - 6 * counts.k5
    )
    full = [1, -c1, c2, -c3, c4]
    return full[: min(5, n + 1)]


# ---------------------------------------------------------------------------
# falling-factorial basis


def to_falling_factorial(p: Poly) -> list[int]:
    """Coefficients ``s_k`` with ``p(x) = sum_k s_k (x)_k``."""
    cs = list(p.coeffs)
    out = [0] * len(cs)
    for k in range(len(cs) - 1, -1, -1):
        s = cs[k]
        out[k] = s
        if s:
            ff = _falling(k)
            for i, c in enumerate(ff):
                cs[i] -= s * c
    return out


def from_falling_factorial(s: Sequence[int]) -> Poly:
    acc = [0]
    for k, sk in enumerate(s):
        if sk:
            acc = _add(acc, [sk * c for c in _falling(k)])
    return Poly(acc)


def partition_oracle(g: Graph, max_order: int = 10) -> list[int]:
    """Count partitions of the vertex set into ``k`` independent blocks, by enumeration."""
    if g.n > max_order:
        raise ValueError(f"partition oracle limited to order <= {max_order}, got {g.n}")
    counts = [0] * (g.n + 1)
    adj = g.adj
    blocks: list[int] = []

    def place(v: int) -> None:
        if v == g.n:
            counts[len(blocks)] += 1
            return
        for i, blk in enumerate(blocks):
            if not adj[v] & blk:
                blocks[i] = blk | (1 << v)
                place(v + 1)
                blocks[i] = blk
        blocks.append(1 << v)
        place(v + 1)
        blocks.pop()

    place(0)
    return counts


def count_colourings(g: Graph, k: int) -> int:
    """Number of proper colourings with ``k`` colours, by brute force."""
    if g.n == 0:
        return 1
    edges = g.edges()
    return sum(
        1 for col in product(range(k), repeat=g.n) if all(col[u] != col[v] for u, v in edges)
    )


def normalized_derivative(p: Poly, k: int) -> Poly:
    """``p^(k) / k!``, integral for integral ``p``."""
    return p.derivative(k) / math.factorial(k)
