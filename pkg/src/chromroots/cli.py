"""Command-line entry point: ``chromroots <command> ...``.

Every command writes machine-readable output (JSON carrying ``"schema": 1``,
or CSV) to stdout, or atomically to the file named by ``--json``/``--csv``.
Exit status is 0 on success, 1 on a usage error and 2 when a computation
fails (node budget exhausted, indeterminate roots, uncertified results).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import platform
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

import mpmath

from . import __version__
from .chrompoly import BudgetExceeded, chromatic_polynomial, to_falling_factorial
from .experiments import (
    JOBS_ENV,
    SCHEMA,
    ExperimentConfig,
    bipartite_scan,
    bipartite_scan_csv,
    corpus_all_real_census,
    default_jobs,
    extremal_imaginary_search,
    lc_numeric_fit,
    lc_root,
    quartic_lc,
    random_sweep,
    sweep_document,
)
from .graph import RingParams
from .io import Graph6Error, read_graph, write_graph6
from .ring import ring_root_report, ring_scan, ring_scan_csv
from .rootkit import certify_nonreal, find_roots, root_location_sanity

log = logging.getLogger("chromroots")

EXIT_OK, EXIT_USAGE, EXIT_FAILURE = 0, 1, 2


class UsageError(Exception):
    pass


class ComputationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


# ---------------------------------------------------------------------------
# output


def atomic_write(path: str | Path, text: str) -> None:
    """Write ``text`` to a temporary file beside ``path`` and rename it into place."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def emit(text: str, dest: str | None) -> None:
    if dest:
        atomic_write(dest, text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands


def cmd_chrom(args) -> int:
    g = read_graph(args.file, args.format)
    p = chromatic_polynomial(g, budget=args.budget)
    doc = {
        "schema": SCHEMA,
        "n": g.n,
        "m": g.m,
        "graph6": write_graph6(g) if g.n <= 62 else None,
        "coeffs": [str(c) for c in p.coeffs],
        "falling_factorial": [str(c) for c in to_falling_factorial(p)],
    }
    emit(dump_json(doc), args.json)
    return EXIT_OK


def cmd_roots(args) -> int:
    g = read_graph(args.file, args.format)
    p = chromatic_polynomial(g, budget=args.budget)
    rs = find_roots(p)
    doc = rs.to_json()
    certified, how = certify_nonreal(p)
    sanity = root_location_sanity(g, rs)
    doc.update(
        {
            "n": g.n,
            "m": g.m,
            "certified_nonreal": certified,
            "certificate": how,
            "sanity_violations": [[kind, [z.real, z.imag], excess] for kind, z, excess in sanity.violations],
        }
    )
    emit(dump_json(doc), args.json)
    if rs.indeterminate:
        raise ComputationError("root finding indeterminate (residual check failed)")
    return EXIT_OK


def cmd_ring(args) -> int:
    params = RingParams(args.a, args.b, args.c, args.d)
    report = ring_root_report(params)
    doc = report.to_json()
    if args.csv:
        # one row per distinct W root; imag_part is sqrt(-r) for the negative ones
        lines = ["index,w_root,imag_part"]
        for i, r in enumerate(report.w_roots):
            im = mpmath.nstr(mpmath.sqrt(-r), 25) if r < 0 else ""
            lines.append(f"{i},{mpmath.nstr(r, 25)},{im}")
        atomic_write(args.csv, "\n".join(lines) + "\n")
    emit(dump_json(doc), args.json)
    return EXIT_OK


def cmd_ring_scan(args) -> int:
    rows = ring_scan(args.amax, args.amin)
    emit(ring_scan_csv(rows), args.csv)
    if not all(r.certified for r in rows):
        raise ComputationError("some W_a could not be certified real-rooted")
    return EXIT_OK


def cmd_random(args) -> int:
    cfg = ExperimentConfig(
        n=args.n, p=args.p, trials=args.trials, seed=args.seed, jobs=args.jobs, exact=args.exact, output=args.json
    )
    results, summary = random_sweep(cfg)
    emit(dump_json(sweep_document(cfg, results, summary)), args.json)
    if summary["false_certificates"]:
        raise ComputationError(f"{summary['false_certificates']} certified trials are all-real")
    return EXIT_OK


def cmd_census(args) -> int:
    with open(args.file, encoding="ascii", errors="replace") as fh:
        res = corpus_all_real_census(fh, jobs=args.jobs)
    emit(dump_json(res.to_json()), args.json)
    if res.failures:
        raise ComputationError(f"{len(res.failures)} graphs exceeded the node budget")
    return EXIT_OK


def cmd_extremal(args) -> int:
    with open(args.file, encoding="ascii", errors="replace") as fh:
        res = extremal_imaginary_search(fh)
    if res.winner is None:
        raise ComputationError("no graph with determinate roots in the corpus")
    emit(dump_json(res.to_json()), args.json)
    return EXIT_OK


def cmd_bipartite_scan(args) -> int:
    emit(bipartite_scan_csv(bipartite_scan(args.nmax, args.nmin)), args.csv)
    return EXIT_OK


def cmd_lc(args) -> int:
    p = Fraction(args.p)
    value = quartic_lc(p)
    doc = {"schema": SCHEMA, "p": args.p, "lc": float(value), "lc_exact": str(value), "sign": (value > 0) - (value < 0)}
    if args.oracle:
        fit = lc_numeric_fit(p, coefficients=args.oracle)
        doc["oracle"] = {
            "coefficients": args.oracle,
            "value": fit.value,
            "two_point": fit.two_point,
            "unstable": fit.unstable,
            "samples": [[n, f] for n, f in fit.samples],
        }
    emit(dump_json(doc), args.json)
    return EXIT_OK


def cmd_lc_root(args) -> int:
    r = lc_root()
    emit(dump_json({"schema": SCHEMA, "root": float(r), "root_exact": str(r)}), args.json)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from .enumerate import connected_graphs, graphs_of_order

    gs = connected_graphs(args.n) if args.connected else graphs_of_order(args.n)
    emit("".join(write_graph6(g) + "\n" for g in gs), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _probability(s: str) -> float:
    v = float(s)
    if not (0.0 <= v <= 1.0):
        raise argparse.ArgumentTypeError(f"{s} is not a probability")
    return v


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"{s} must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="chromroots", description="Chromatic roots: exact polynomials, certificates and experiments.")
    ap.add_argument("--version", action="store_true", help="print version and build metadata")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    ap.add_argument("--config", help="JSON or TOML file of default flag values (flags given on the command line win)")
    sub = ap.add_subparsers(dest="command", metavar="command")

    def graph_input(sp):
        sp.add_argument("file", help="graph file (graph6 or edge list)")
        sp.add_argument("--format", choices=("graph6", "edgelist"), help="input format (default: detect)")
        sp.add_argument("--budget", type=_positive, help="deletion-contraction node budget")
        sp.add_argument("--json", metavar="OUT", help="write JSON here instead of stdout")

    sp = sub.add_parser("chrom", help="chromatic polynomial of one graph")
    graph_input(sp)
    sp.set_defaults(func=cmd_chrom)

    sp = sub.add_parser("roots", help="chromatic roots, realness and certificates of one graph")
    graph_input(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("ring", help="W-polynomial root report for a ring of four cliques")
    for name in "abcd":
        sp.add_argument(f"--{name}", type=_positive, required=True, help=f"block size {name}")
    sp.add_argument("--json", metavar="OUT", help="write JSON here instead of stdout")
    sp.add_argument("--csv", metavar="OUT", help="also write W roots and imaginary parts as CSV")
    sp.set_defaults(func=cmd_ring)

    sp = sub.add_parser("ring-scan", help="leftmost W_a root and its quadratic bound for a range of a")
    sp.add_argument("--amax", type=_positive, default=40, help="largest a (default: 40)")
    sp.add_argument("--amin", type=_positive, default=2, help="smallest a (default: 2)")
    sp.add_argument("--csv", metavar="OUT", help="write rows as CSV here instead of stdout")
    sp.set_defaults(func=cmd_ring_scan)

    sp = sub.add_parser("random", help="discriminant certificates on G(n, p) samples")
    sp.add_argument("--n", type=_positive, required=True, help="number of vertices (>= 5)")
    sp.add_argument("--p", type=_probability, required=True, help="edge probability in (0, 1)")
    sp.add_argument("--trials", type=_positive, required=True, help="number of sampled graphs")
    sp.add_argument("--seed", type=int, default=0, help="root seed; trial i uses stream i (default: 0)")
    sp.add_argument("--exact", action="store_true", help="also decide realness exactly (small n only)")
    sp.add_argument("--jobs", type=_positive, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")
    sp.add_argument("--json", metavar="OUT", help="write JSON here instead of stdout")
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("census", help="count all-real graphs in a graph6 corpus")
    sp.add_argument("file", help="graph6 file, one graph per line")
    sp.add_argument("--jobs", type=_positive, default=None, help="worker processes (default $CHROMROOTS_JOBS or 1)")
    sp.add_argument("--json", metavar="OUT", help="write JSON here instead of stdout")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("extremal", help="graph with the chromatic root of largest imaginary part")
    sp.add_argument("file", help="graph6 file, one graph per line")
    sp.add_argument("--json", metavar="OUT", help="write JSON here instead of stdout")
    sp.set_defaults(func=cmd_extremal)

    sp = sub.add_parser("bipartite-scan", help="max imaginary part / n for balanced complete bipartite graphs")
    sp.add_argument("--nmax", type=_positive, default=16, help="largest even order (default: 16)")
    sp.add_argument("--nmin", type=_positive, default=4, help="smallest even order (default: 4)")
    sp.add_argument("--csv", metavar="OUT", help="write rows as CSV here instead of stdout")
    sp.set_defaults(func=cmd_bipartite_scan)

    sp = sub.add_parser("lc", help="evaluate the quartic discriminant's leading coefficient at p")
    sp.add_argument("--p", type=_probability, required=True, help="edge probability in (0, 1)")
    sp.add_argument(
        "--oracle", choices=("verified", "printed"), help="also fit the n^30 coefficient numerically"
    )
    sp.add_argument("--json", metavar="OUT", help="write JSON here instead of stdout")
    sp.set_defaults(func=cmd_lc)

    sp = sub.add_parser("lc-root", help="largest root in (0, 1) of the leading coefficient, by bisection")
    sp.add_argument("--json", metavar="OUT", help="write JSON here instead of stdout")
    sp.set_defaults(func=cmd_lc_root)

    sp = sub.add_parser("enumerate", help="write all (connected) graphs of order n as graph6")
    sp.add_argument("n", type=int, help="order of the graphs")
    sp.add_argument("--connected", action="store_true", help="connected graphs only")
    sp.add_argument("--out", metavar="OUT", help="write graph6 here instead of stdout")
    sp.set_defaults(func=cmd_enumerate)
    return ap


def _load_config(path: str) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    if path.endswith(".toml"):
        if sys.version_info >= (3, 11):
            import tomllib
        else:
            import tomli as tomllib

        data = tomllib.loads(text)
    else:
        data = json.loads(text)
    if not isinstance(data, dict):
        raise UsageError(f"config {path} must hold a table of flag values")
    return {k.replace("-", "_"): v for k, v in data.items()}


def version_text() -> str:
    import numba
    import numpy

    return (
        f"chromroots {__version__} (python {platform.python_version()}, numpy {numpy.__version__}, "
        f"numba {numba.__version__})"
    )


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    """Make values from ``--config`` the defaults of the chosen subcommand."""
    pre = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    if not known.config:
        return
    conf = _load_config(known.config)
    command = next((a for a in rest if not a.startswith("-")), None)
    choices = parser._subparsers._group_actions[0].choices
    if command not in choices:
        return
    sub = choices[command]
    actions = {a.dest: a for a in sub._actions}
    unknown = sorted(set(conf) - set(actions) - {"help"})
    if unknown:
        raise UsageError(f"unknown keys in config {known.config}: {unknown}")
    for key, value in conf.items():
        actions[key].required = False
    sub.set_defaults(**conf)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        if not argv:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        _apply_config(parser, argv)
        args = parser.parse_args(argv)
        if args.version:
            print(version_text())
            return EXIT_OK
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        if getattr(args, "jobs", 0) is None:
            args.jobs = default_jobs()
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (OSError, Graph6Error, ValueError) as exc:
        print(f"chromroots: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, ArithmeticError, ComputationError) as exc:
        print(f"chromroots: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
