"""Simple undirected graphs on vertices ``0..n-1`` with bitset adjacency."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np


class Graph:
    """Immutable simple graph.

    ``adj[v]`` is an integer bitmask of the neighbours of ``v``.  Instances
    are hashable and compare equal when their labelled edge sets agree.
    """

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("order must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj: tuple[int, ...] = tuple(adj)
        self._m = sum(a.bit_count() for a in adj) // 2

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        adj = tuple(adj)
        g = cls.__new__(cls)
        n = len(adj)
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if a & ~full:
                raise ValueError(f"neighbour out of range at vertex {v}")
            rest = a
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
                rest ^= low
        g.n = n
        g.adj = adj
        g._m = sum(a.bit_count() for a in adj) // 2
        return g

    @property
    def m(self) -> int:
        return self._m

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.adj[v] >> u & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def components(self) -> list[int]:
        """Vertex sets of connected components, as bitmasks."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                nb = self.adj[low.bit_length() - 1] & ~comp
                comp |= nb
                frontier |= nb
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        edges = [(index[u], index[v]) for u, v in combinations(vs, 2) if self.adj[u] >> v & 1]
        return Graph(len(vs), edges)

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def to_numpy(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# deterministic generators


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("order must be nonnegative")
    return Graph(n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise ValueError("part sizes must be >= 1")
    return Graph(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()])


def join_vertex(g: Graph) -> Graph:
    """``g`` plus a new vertex ``g.n`` adjacent to every vertex."""
    return Graph(g.n + 1, g.edges() + [(v, g.n) for v in range(g.n)])


def gem() -> Graph:
    """P4 plus a universal vertex (5 vertices, 7 edges)."""
    return join_vertex(path(4))


def k23_plus_edge() -> Graph:
    """K2,3 with one extra edge inside the part of size three (5 vertices, 7 edges).

    This is the graph H whose induced copies enter the coefficient of
    ``x^(n-4)`` with weight 2.  Its complement is P3 plus a disjoint K2 and it
    has 4 automorphisms.
    """
    return Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)])


def wheel5() -> Graph:
    """C4 plus a hub (5 vertices, 8 edges)."""
    return join_vertex(cycle(4))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# ring of cliques


@dataclass(frozen=True)
class RingParams:
    """Block sizes of the ring of four cliques, in cyclic order."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or v < 1:
                raise ValueError(f"block size {name}={v!r} must be an integer >= 1")

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.d

    @property
    def p(self) -> Fraction:
        return Fraction(self.b + self.c - self.a - self.d + 1, 2)

    @property
    def q(self) -> Fraction:
        return Fraction(self.c + self.d - self.a - self.b + 1, 2)

    @property
    def k(self) -> Fraction:
        return Fraction(self.b + self.d - self.a - self.c + 1, 2)

    @classmethod
    def from_apqk(cls, a: int, p, q, k) -> "RingParams":
        """Invert the half-integer parametrisation: recover ``b, c, d`` from ``a, p, q, k``."""
        p, q, k = Fraction(p), Fraction(q), Fraction(k)
        # b + c - d = 2p - 1 + a, c + d - b = 2q - 1 + a, b + d - c = 2k - 1 + a
        s1, s2, s3 = 2 * p - 1 + a, 2 * q - 1 + a, 2 * k - 1 + a
        c = (s1 + s2) / 2
        d = (s2 + s3) / 2
        b = (s1 + s3) / 2
        vals = []
        for v in (b, c, d):
            if v.denominator != 1:
                raise ValueError("p, q, k do not correspond to integral block sizes")
            vals.append(int(v))
        return cls(a, *vals)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


def ring_cliques(params: RingParams | tuple[int, int, int, int]) -> Graph:
    """Cycle C4 with its vertices replaced, in cyclic order, by cliques."""
    if not isinstance(params, RingParams):
        params = RingParams(*params)
    sizes = params.as_tuple()
    starts = [0]
    for s in sizes[:-1]:
        starts.append(starts[-1] + s)
    blocks = [range(st, st + s) for st, s in zip(starts, sizes)]
    edges = []
    for blk in blocks:
        edges.extend(combinations(blk, 2))
    for i in range(4):
        for u in blocks[i]:
            for v in blocks[(i + 1) % 4]:
                edges.append((u, v))
    return Graph(params.n, edges)


# ---------------------------------------------------------------------------
# seeded random graphs


@dataclass(frozen=True)
class RngSeed:
    """Master seed plus per-trial stream index.

    Streams are derived with :class:`numpy.random.SeedSequence` from the
    pair ``(seed, stream)`` and drive a PCG64 generator, so trial ``i`` of a
    sweep is reproducible regardless of which worker runs it.
    """

    seed: int
    stream: int = 0

    def __post_init__(self):
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.stream < 0:
            raise ValueError("stream index must be nonnegative")

    def generator(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence([self.seed, self.stream])))

    def spawn(self, i: int) -> "RngSeed":
        return RngSeed(self.seed, i)


def erdos_renyi(n: int, p: float, seed: RngSeed | int = 0) -> Graph:
    """Sample G(n, p); pairs are drawn in lexicographic order from one uniform vector."""
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"edge probability {p} outside [0, 1]")
    if n < 0:
        raise ValueError("order must be nonnegative")
    if not isinstance(seed, RngSeed):
        seed = RngSeed(int(seed))
    rng = seed.generator()
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def iter_trials(n: int, p: float, seed: int, trials: int) -> Iterator[tuple[int, Graph]]:
    for i in range(trials):
        yield i, erdos_renyi(n, p, RngSeed(seed, i))
