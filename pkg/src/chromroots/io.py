"""graph6 and edge-list readers/writers.

Only the short graph6 form (order at most 62) is supported.  Bits of the
upper triangle are taken column by column: (0,1), (0,2), (1,2), (0,3), ...
and packed six to a byte, each byte offset by 63.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterator, TextIO

from .graph import Graph

log = logging.getLogger(__name__)

HEADER = ">>graph6<<"
MAX_SHORT_ORDER = 62


class Graph6Error(ValueError):
    pass


def write_graph6(g: Graph) -> str:
    if g.n > MAX_SHORT_ORDER:
        raise Graph6Error(f"order {g.n} needs long-form graph6, which is not supported")
    bits = []
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    if s[0] == "~":
        raise Graph6Error("long-form graph6 (order > 62) is not supported")
    n = ord(s[0]) - 63
    if not (0 <= n <= MAX_SHORT_ORDER):
        raise Graph6Error(f"malformed header byte {s[0]!r}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit stream: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage after {nbytes} data bytes")
    vals = []
    for ch in body:
        v = ord(ch) - 63
        if not (0 <= v < 64):
            raise Graph6Error(f"invalid data byte {ch!r}")
        vals.append(v)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if vals[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    # padding bits must be zero
    if nbytes and vals[-1] & ((1 << (nbytes * 6 - nbits)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, edges)


def iter_graph6(stream: TextIO, *, strict: bool = False) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)``; blank lines and the header are skipped."""
    for lineno, line in enumerate(stream, 1):
        s = line.strip()
        if not s or s == HEADER:
            continue
        try:
            yield lineno, parse_graph6(s)
        except Graph6Error as exc:
            if strict:
                raise Graph6Error(f"line {lineno}: {exc}") from exc
            log.warning("line %d: %s", lineno, exc)
            yield lineno, exc


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return [g for _, g in iter_graph6(fh, strict=True)]


def write_graph6_file(path: str | Path, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(write_graph6(g) + "\n")


def parse_edgelist(text: str) -> Graph:
    """Edge-list text: first line ``n <count>``, then one ``u v`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError(f"expected header 'n <count>', got {lines[0]!r}")
    n = int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u > v:
            u, v = v, u
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise ValueError("parallel edges in edge list")
    return Graph(n, edges)


def write_edgelist(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Read a single graph, guessing the format from the content when ``fmt`` is None."""
    text = Path(path).read_text(encoding="ascii")
    if fmt is None:
        first = next((ln.split("#", 1)[0].strip() for ln in text.splitlines() if ln.split("#", 1)[0].strip()), "")
        fmt = "edgelist" if first.startswith("n ") else "graph6"
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        graphs = [ln for ln in text.splitlines() if ln.strip() and ln.strip() != HEADER]
        if len(graphs) != 1:
            raise ValueError(f"expected exactly one graph6 line, found {len(graphs)}")
        return parse_graph6(graphs[0])
    raise ValueError(f"unknown graph format {fmt!r}")
