"""Experiment drivers: random-graph certificate sweeps, the quartic lc polynomial,
corpus statistics and extremal/scaling scans.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, TextIO

from .census import SubgraphCounts, census, expected_counts
from .chrompoly import BudgetExceeded, chromatic_polynomial
from .graph import Graph, RngSeed, complete_bipartite, erdos_renyi
from .io import Graph6Error, iter_graph6, write_graph6
from .polynomial import Poly, binom
from .rootkit import find_roots, quadratic_disc_test, quartic_disc_test, quartic_discriminant, quartic_from_counts
from .sturm import all_real

log = logging.getLogger(__name__)

SCHEMA = 1
JOBS_ENV = "CHROMROOTS_JOBS"


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# asymptotic discriminant expressions


def quad_disc_expectation(p, eps_m=0, eps_t=0):
    """Normalised limit of the quadratic certificate's discriminant when
    ``M = (1 + eps_m) p C(n,2)`` and ``T = (1 + eps_t) p^3 C(n,3)``.

    Exact for rational arguments; negative exactly when ``p < 3/4`` at zero deviations.
    """
    third, quarter = (1 / 3, 1 / 4) if isinstance(p, float) else (Fraction(1, 3), Fraction(1, 4))
    return p**2 * (third * (eps_t + 1) * p - quarter * (eps_m + 1) ** 2)


# leading coefficient (in n) of the quartic discriminant at zero deviations,
# as printed: (coefficient, power of p)
LC_TERMS: tuple[tuple[Fraction, int], ...] = (
    (Fraction(-1, 93312), 21),
    (Fraction(-1, 186624), 20),
    (Fraction(1, 124416), 19),
    (Fraction(-227, 80621568), 18),
    (Fraction(-1, 1119744), 17),
    (Fraction(5, 2985984), 16),
    (Fraction(-5, 2985984), 15),
    (Fraction(5, 5308416), 14),
    (Fraction(-1, 3538944), 13),
    (Fraction(1, 28311552), 12),
)


def lc_polynomial() -> Poly:
    cs = [Fraction(0)] * 22
    for c, e in LC_TERMS:
        cs[e] = c
    return Poly(cs)


def quartic_lc(p):
    """Evaluate the printed ten-term lc polynomial; exact for rational ``p``."""
    if isinstance(p, float):
        return float(lc_polynomial()(Fraction(p)))
    return lc_polynomial()(p)


def lc_root(lo=Fraction(1, 100), hi=Fraction(1), tol=Fraction(1, 10**12), grid: int = 1000) -> Fraction:
    """Largest root of ``quartic_lc`` in ``(lo, hi)``, by a downward grid scan then bisection."""
    lo, hi = Fraction(lo), Fraction(hi)
    step = (hi - lo) / grid
    right = hi
    s_right = _sgn(quartic_lc(right))
    left = right - step
    while left >= lo:
        s_left = _sgn(quartic_lc(left))
        if s_left == 0:
            return left
        if s_left != s_right:
            break
        right, s_right = left, s_left
        left = right - step
    else:
        raise ArithmeticError("no sign change of lc found in the search interval")
    a, b, sa = left, right, s_left
    while b - a > tol:
        mid = (a + b) / 2
        sm = _sgn(quartic_lc(mid))
        if sm == 0:
            return mid
        if sm == sa:
            a = mid
        else:
            b = mid
    return (a + b) / 2


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def printed_quartic(counts, n: int) -> tuple:
    """The quartic exactly as printed in the source expansion, for comparison only.

    It differs from :func:`chromroots.rootkit.quartic_from_counts` in the sign
    of the ``(2m - 9) k4`` term, which makes its constant term wrong for every
    graph containing a K4.
    """
    m, t = counts.m, counts.t
    c3 = binom(m, 3) - (m - 2) * t - counts.ic4 + 2 * counts.k4
    c4 = (
        binom(m, 4) - binom(m - 2, 2) * t + binom(t, 2) - (m - 3) * counts.ic4 - (2 * m - 9) * counts.k4
        - counts.ic5 + counts.ik23 + 2 * counts.ih + 3 * counts.iw5 - 6 * counts.k5
    )
    return (
        Fraction(binom(n, 4)),
        -Fraction(binom(n - 1, 3)) * m,
        Fraction(binom(n - 2, 2)) * (binom(m, 2) - t),
        -Fraction(n - 3) * c3,
        Fraction(c4),
    )


@dataclass(frozen=True)
class LcFit:
    p: float
    value: float
    two_point: float
    samples: tuple[tuple[int, float], ...]
    unstable: bool


def lc_numeric_fit(p, ns: tuple[int, ...] = (200, 400, 800), coefficients: str = "verified") -> LcFit:
    """Estimate the ``n^30`` coefficient of the quartic discriminant at expected counts.

    ``Disc(n) / n^30`` is computed exactly at each ``n`` and extrapolated to
    ``1/n -> 0`` through the sample points.  ``coefficients`` selects
    ``"verified"`` (the library's quartic, used by every certificate) or
    ``"printed"`` (:func:`printed_quartic`).
    """
    p = Fraction(p)
    if not (0 < p < 1):
        raise ValueError("p must lie in (0, 1)")
    quartic = {"verified": lambda c, n: quartic_from_counts(c, n, integral=False), "printed": printed_quartic}[
        coefficients
    ]
    hs, fs = [], []
    for n in ns:
        d = quartic_discriminant(*quartic(expected_counts(n, p), n)).value
        hs.append(Fraction(1, n))
        fs.append(Fraction(d) / Fraction(n) ** 30)

    def extrapolate(h, f):
        total = Fraction(0)
        for i in range(len(h)):
            w = Fraction(1)
            for j in range(len(h)):
                if j != i:
                    w *= (0 - h[j]) / (h[i] - h[j])
            total += w * f[i]
        return total

    full = extrapolate(hs, fs)
    two = extrapolate(hs[-2:], fs[-2:])
    unstable = abs(full - two) > abs(full) / 10 if full else True
    if unstable:
        log.warning("lc fit at p=%s unstable: %s vs %s", p, float(full), float(two))
    return LcFit(
        p=float(p),
        value=float(full),
        two_point=float(two),
        samples=tuple((n, float(f)) for n, f in zip(ns, fs)),
        unstable=unstable,
    )


def lc_numeric_oracle(p, coefficients: str = "verified") -> float:
    return lc_numeric_fit(p, coefficients=coefficients).value


# ---------------------------------------------------------------------------
# random sweeps


@dataclass
class ExperimentConfig:
    n: int
    p: float
    trials: int
    seed: int = 0
    jobs: int = 1
    exact: bool = False
    output: str | None = None
    schema: int = SCHEMA

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not (0 <= self.p <= 1):
            raise ValueError("p must lie in [0, 1]")
        if self.n < 5:
            raise ValueError("sweeps need n >= 5 for the quartic certificate")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.schema != SCHEMA:
            raise ValueError(f"unsupported schema {self.schema}")


@dataclass
class TrialResult:
    n: int
    p: float
    seed: int
    trial: int
    graph6: str
    counts: SubgraphCounts
    quad_disc_sign: int
    quartic_disc_sign: int
    certified_nonreal: bool
    exact_all_real: bool | None = None

    def to_json(self) -> dict:
        d = asdict(self)
        d["counts"] = self.counts.as_dict()
        return d


def run_trial(n: int, p: float, seed: int, trial: int, exact: bool = False) -> TrialResult:
    g = erdos_renyi(n, p, RngSeed(seed, trial))
    c = census(g)
    qs = quadratic_disc_test(n, c.m, c.t).sign
    rs = quartic_disc_test(c, n).sign
    exact_ar = None
    if exact:
        exact_ar = all_real(chromatic_polynomial(g))
    return TrialResult(
        n=n,
        p=p,
        seed=seed,
        trial=trial,
        graph6=write_graph6(g) if n <= 62 else "",
        counts=c,
        quad_disc_sign=qs,
        quartic_disc_sign=rs,
        certified_nonreal=qs < 0 or rs < 0,
        exact_all_real=exact_ar,
    )


def _run_trial_args(args):
    return run_trial(*args)


def random_sweep(cfg: ExperimentConfig) -> tuple[list[TrialResult], dict]:
    """Run ``cfg.trials`` independent G(n, p) trials; results are ordered by trial index."""
    tasks = [(cfg.n, cfg.p, cfg.seed, i, cfg.exact) for i in range(cfg.trials)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_trial_args, tasks, chunksize=max(1, len(tasks) // (4 * cfg.jobs))))
    else:
        results = [_run_trial_args(t) for t in tasks]
    results.sort(key=lambda r: r.trial)
    return results, summarize(cfg, results)


def summarize(cfg: ExperimentConfig, results: list[TrialResult]) -> dict:
    total = len(results)
    quad = sum(r.quad_disc_sign < 0 for r in results)
    quart = sum(r.quartic_disc_sign < 0 for r in results)
    cert = sum(r.certified_nonreal for r in results)
    checked = [r for r in results if r.exact_all_real is not None]
    false_cert = sum(1 for r in checked if r.certified_nonreal and r.exact_all_real)
    return {
        "trials": total,
        "quad_negative": quad,
        "quartic_negative": quart,
        "certified": cert,
        "quad_negative_fraction": quad / total,
        "quartic_negative_fraction": quart / total,
        "certified_fraction": cert / total,
        "exact_checked": len(checked),
        "exact_nonreal": sum(1 for r in checked if r.exact_all_real is False),
        "false_certificates": false_cert,
    }


def sweep_document(cfg: ExperimentConfig, results: list[TrialResult], summary: dict) -> dict:
    conf = asdict(cfg)
    # parallelism and destination do not affect results; keep them out of the document
    conf.pop("jobs")
    conf.pop("output")
    return {"schema": SCHEMA, "config": conf, "summary": summary, "trials": [r.to_json() for r in results]}


# ---------------------------------------------------------------------------
# corpus statistics


@dataclass
class CorpusCensus:
    all_real: int = 0
    total: int = 0
    errors: list[tuple[int, str]] = field(default_factory=list)
    failures: list[tuple[int, str]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "all_real": self.all_real,
            "total": self.total,
            "parse_errors": [{"line": ln, "error": e} for ln, e in self.errors],
            "failures": [{"line": ln, "error": e} for ln, e in self.failures],
        }


def _all_real_line(item):
    lineno, g = item
    try:
        return lineno, all_real(chromatic_polynomial(g)), None
    except BudgetExceeded as exc:
        return lineno, None, str(exc)


def corpus_all_real_census(stream: TextIO | Iterable[str], jobs: int = 1) -> CorpusCensus:
    """Count graphs in a graph6 stream whose chromatic polynomial has only real roots."""
    out = CorpusCensus()
    items = []
    for lineno, g in iter_graph6(stream):
        if isinstance(g, Graph6Error):
            out.errors.append((lineno, str(g)))
        else:
            items.append((lineno, g))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_all_real_line, items, chunksize=256))
    else:
        rows = [_all_real_line(it) for it in items]
    for lineno, ar, err in rows:
        if err is not None:
            out.failures.append((lineno, err))
            continue
        out.total += 1
        out.all_real += bool(ar)
    return out


# ---------------------------------------------------------------------------
# extremal imaginary parts


@dataclass
class ExtremalResult:
    winner: Graph | None
    max_imag: float
    line: int | None
    ties: list[str] = field(default_factory=list)
    excluded: int = 0
    total: int = 0

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "winner": None if self.winner is None else write_graph6(self.winner),
            "line": self.line,
            "max_imag": self.max_imag,
            "ties": self.ties,
            "excluded_indeterminate": self.excluded,
            "total": self.total,
        }


def max_imag_of(g: Graph) -> tuple[float, bool]:
    rs = find_roots(chromatic_polynomial(g))
    return rs.max_imag, rs.indeterminate


def extremal_imaginary_search(stream: TextIO | Iterable[str], tie_tol: float = 1e-9) -> ExtremalResult:
    """Graph of the corpus whose chromatic polynomial has a root of largest imaginary part."""
    best = ExtremalResult(winner=None, max_imag=-math.inf, line=None)
    for lineno, g in iter_graph6(stream):
        if isinstance(g, Graph6Error):
            continue
        best.total += 1
        mi, indeterminate = max_imag_of(g)
        if indeterminate:
            log.warning("line %d: root finding indeterminate, excluded", lineno)
            best.excluded += 1
            continue
        if mi > best.max_imag + tie_tol:
            best.winner, best.max_imag, best.line, best.ties = g, mi, lineno, []
        elif abs(mi - best.max_imag) <= tie_tol:
            best.ties.append(write_graph6(g))
    return best


# ---------------------------------------------------------------------------
# scaling scans


@dataclass(frozen=True)
class BipartiteRow:
    n: int
    max_imag: float
    ratio: float


def bipartite_scan(nmax: int = 16, nmin: int = 4) -> list[BipartiteRow]:
    """``max_imag(P(K_{n/2,n/2})) / n`` for even ``n``."""
    rows = []
    for n in range(nmin + nmin % 2, nmax + 1, 2):
        mi, _ = max_imag_of(complete_bipartite(n // 2, n // 2))
        rows.append(BipartiteRow(n=n, max_imag=mi, ratio=mi / n))
    return rows


def bipartite_scan_csv(rows: list[BipartiteRow]) -> str:
    lines = ["n,max_imag,ratio"]
    lines += [f"{r.n},{r.max_imag!r},{r.ratio!r}" for r in rows]
    return "\n".join(lines) + "\n"


def nondecreasing(values: Iterable[float], tol: float = 0.0) -> bool:
    vals = list(values)
    return all(b >= a - tol for a, b in zip(vals, vals[1:]))


def random_max_imag(n: int, p: float, trials: int, seed: int = 0) -> list[float]:
    """Largest imaginary part of a chromatic root for sampled G(n, p), small ``n`` only.

    Raw data for the open question of whether this grows linearly; no claim is
    attached to it.
    """
    return [max_imag_of(erdos_renyi(n, p, RngSeed(seed, i)))[0] for i in range(trials)]
