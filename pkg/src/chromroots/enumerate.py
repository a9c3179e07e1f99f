"""Exhaustive isomorphism-class enumeration of small graphs.

This exists to build graph6 corpora when nauty's ``geng`` is not at hand.
Graphs of order ``n`` are obtained by attaching a new vertex, in every
possible way, to each class of order ``n - 1``; duplicates are removed with a
canonical form computed by colour refinement plus individualisation.  That is
practical up to order 8 or so.

    python -m chromroots.enumerate 8 --connected > connected8.g6
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .graph import Graph
from .io import write_graph6

Adj = tuple[int, ...]


def _refine(adj: Adj, colours: list[int]) -> list[int]:
    n = len(adj)
    while True:
        keys = []
        for v in range(n):
            nb = sorted(colours[u] for u in range(n) if adj[v] >> u & 1)
            keys.append((colours[v], tuple(nb)))
        ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [ranks[k] for k in keys]
        if len(set(new)) == len(set(colours)):
            return new
        colours = new


def _code(adj: Adj, colours: list[int]) -> tuple[int, ...]:
    # discrete colouring: colour is the new label
    n = len(adj)
    out = [0] * n
    for v in range(n):
        a = adj[v]
        m = 0
        for u in range(n):
            if a >> u & 1:
                m |= 1 << colours[u]
        out[colours[v]] = m
    return tuple(out)


def canonical_form(adj: Adj) -> tuple[int, ...]:
    """Label-independent adjacency code: equal for two graphs iff they are isomorphic."""
    best: list[tuple[int, ...] | None] = [None]

    def search(colours: list[int]) -> None:
        colours = _refine(adj, colours)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colours):
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            code = _code(adj, colours)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        for v in cells[target]:
            nc = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colours)]
            search(nc)

    search([0] * len(adj))
    return best[0]


def graphs_of_order(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs of order ``n``."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        return [Graph(0)]
    reps = {(): ()}
    for k in range(1, n + 1):
        nxt: dict[tuple[int, ...], Adj] = {}
        for adj in reps.values():
            for nb in range(1 << (k - 1)):
                new = tuple(a | ((nb >> v & 1) << (k - 1)) for v, a in enumerate(adj)) + (nb,)
                key = canonical_form(new)
                if key not in nxt:
                    nxt[key] = key
        reps = nxt
    return [Graph.from_adjacency(a) for a in sorted(reps.values())]


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in graphs_of_order(n) if g.is_connected()]


CORPUS_ENV = "CHROMROOTS_CORPUS_DIR"


def corpus_dir() -> Path:
    """Directory holding ``connected<n>.g6`` files: ``$CHROMROOTS_CORPUS_DIR`` or a user cache."""
    env = os.environ.get(CORPUS_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "chromroots" / "corpus"


def connected_corpus(n: int, generate: bool = True) -> Path:
    """Path of the connected order-``n`` graph6 corpus, generating and caching it if absent."""
    path = corpus_dir() / f"connected{n}.g6"
    if not path.exists():
        if not generate:
            raise FileNotFoundError(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".g6.tmp")
        tmp.write_text("".join(write_graph6(g) + "\n" for g in connected_graphs(n)), encoding="ascii")
        os.replace(tmp, path)
    return path


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="python -m chromroots.enumerate", description=__doc__.split("\n")[0])
    ap.add_argument("n", type=int)
    ap.add_argument("--connected", action="store_true", help="only connected graphs")
    args = ap.parse_args(argv)
    gs = connected_graphs(args.n) if args.connected else graphs_of_order(args.n)
    for g in gs:
        sys.stdout.write(write_graph6(g) + "\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
