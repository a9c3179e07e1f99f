"""Acceptance suite: one check per published acceptance criterion.

Every test records a single ``PASS``/``FAIL`` line (printed in the pytest
terminal summary, or by running this file directly).  Tolerances are pinned
as module constants.  Order-7 and order-8 corpora are read from
``$CHROMROOTS_CORPUS_DIR`` or the user cache, and generated there on first use.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction
from itertools import product

import mpmath
import numpy as np
import pytest

from chromroots.census import census
from chromroots.chrompoly import chromatic_polynomial, top_coefficients
from chromroots.enumerate import canonical_form, connected_corpus
from chromroots.experiments import (
    ExperimentConfig,
    bipartite_scan,
    corpus_all_real_census,
    extremal_imaginary_search,
    lc_numeric_oracle,
    lc_root,
    nondecreasing,
    quartic_lc,
    random_sweep,
)
from chromroots.graph import RingParams, complete_bipartite, ring_cliques
from chromroots.io import read_graph6_file
from chromroots.polynomial import Poly
from chromroots.ring import (
    chain_w,
    f_from_q,
    leftmost_root_bound,
    q_polynomial,
    ring_scan,
    w_polynomial,
)
from chromroots.rootkit import find_roots, hull_containment, root_location_sanity

REAL_PART_TOL = 1e-9
LIMIT_TOL_AT_2000 = 0.01
GROWTH_FLOOR = 0.19
SWEEP_FRACTION = 0.99
SWEEP_SEED = 2024
LC_ROOT = 0.31564
LC_ROOT_TOL = 5e-5
LC_REL_TOL = 0.02
HULL_REL_TOL = 1e-8
GAUSS_LUCAS_SEED = 7

RESULTS: dict[str, tuple[bool, str]] = {}


def record(key: str, ok: bool, detail: str) -> None:
    RESULTS[key] = (ok, detail)
    assert ok, detail


def corpus(n: int):
    return read_graph6_file(connected_corpus(n))


def corpus_upto(n: int):
    return [g for k in range(1, n + 1) for g in corpus(k)]


# 1 ---------------------------------------------------------------------------


def test_criterion_01_order7_all_real_census():
    with open(connected_corpus(7)) as fh:
        res = corpus_all_real_census(fh)
    record(
        "01 order-7 corpus: 273 all-real of 833",
        (res.all_real, res.total) == (273, 833),
        f"observed {res.all_real} all-real of {res.total} connected graphs of order 7",
    )


# 2 ---------------------------------------------------------------------------


@pytest.mark.slow
def test_criterion_02_order8_all_real_census():
    with open(connected_corpus(8)) as fh:
        res = corpus_all_real_census(fh)
    record(
        "02 order-8 corpus: 1627 all-real of 11117",
        (res.all_real, res.total) == (1627, 11117),
        f"observed {res.all_real} of {res.total}",
    )


# 3 ---------------------------------------------------------------------------


def test_criterion_03_coefficient_oracle():
    graphs = corpus_upto(7)
    bad = 0
    for g in graphs:
        p = chromatic_polynomial(g)
        top = top_coefficients(census(g), g.n)
        bad += top != [p[g.n - i] for i in range(len(top))]
    record(
        "03 census-derived top five coefficients equal deletion-contraction, connected order <= 7",
        bad == 0 and len(graphs) == 996,
        f"{len(graphs) - bad}/{len(graphs)} graphs agree",
    )


# 4 ---------------------------------------------------------------------------


def test_criterion_04_ring_chain():
    failures = []
    worst = 0.0
    for t in product(range(1, 4), repeat=4):
        rp = RingParams(*t)
        pi = chromatic_polynomial(ring_cliques(rp))
        try:
            q = q_polynomial(rp, pi)
            f_from_q(rp, q)
        except ArithmeticError as exc:
            failures.append((t, str(exc)))
            continue
        if chain_w(rp, pi) != w_polynomial(rp.a, rp.p, rp.q, rp.k):
            failures.append((t, "chain W differs from recurrence W"))
        centre = (rp.n - 1) / 2
        for z in find_roots(pi).nonreal():
            worst = max(worst, abs(z.real - centre))
    record(
        "04 ring chain: exact division, even F, chain W = recurrence W, real parts (n-1)/2 (81 tuples)",
        not failures and worst <= REAL_PART_TOL,
        f"{81 - len(failures)}/81 tuples exact; max |Re z - (n-1)/2| = {worst:.2e}",
    )


# 5 ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def symmetric_scan():
    return ring_scan(40, 2)


def test_criterion_05_w_realness_and_bound(symmetric_scan):
    rows = symmetric_scan
    certified = all(r.certified for r in rows)
    below = all(r.leftmost <= r.r_plus for r in rows)
    gaps = []
    for a in list(range(2, 41)) + [100, 500, 2000]:
        _, r_plus = leftmost_root_bound(a)
        gaps.append(abs(r_plus / (16 * a * a) + mpmath.mpf(1) / 24))
    decreasing = all(b < a for a, b in zip(gaps, gaps[1:]))
    ok = certified and below and decreasing and gaps[-1] < LIMIT_TOL_AT_2000
    record(
        "05 W_a real and <= 0 (2..40), R_a <= r_plus, r_plus/(16a^2) -> -1/24",
        ok,
        f"certified={certified} R_a<=r_plus={below} gap decreasing={decreasing} "
        f"gap(2000)={float(gaps[-1]):.4g}",
    )


# 6 ---------------------------------------------------------------------------


def test_criterion_06_linear_growth(symmetric_scan):
    growth = {r.a: float(r.growth) for r in symmetric_scan if 20 <= r.a <= 40}
    worst = min(growth.values())
    record(
        "06 sqrt(-R_a)/(4a) >= 0.19 for 20 <= a <= 40",
        len(growth) == 21 and worst >= GROWTH_FLOOR,
        f"min over a=20..40 is {worst:.5f} (a={min(growth, key=growth.get)})",
    )


# 7 ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def sweeps():
    return {
        "half": random_sweep(ExperimentConfig(n=60, p=0.5, trials=500, seed=SWEEP_SEED))[1],
        "dense": random_sweep(ExperimentConfig(n=60, p=0.85, trials=500, seed=SWEEP_SEED))[1],
        "exact": random_sweep(ExperimentConfig(n=14, p=0.5, trials=100, seed=SWEEP_SEED, exact=True))[1],
    }


@pytest.mark.slow
def test_criterion_07a_quadratic_sweep(sweeps):
    frac = sweeps["half"]["quad_negative_fraction"]
    record("07a G(60, 0.5), 500 trials: >= 99% negative quadratic discriminants", frac >= SWEEP_FRACTION, f"{frac:.3f}")


@pytest.mark.slow
def test_criterion_07b_quartic_sweep(sweeps):
    frac = sweeps["dense"]["quartic_negative_fraction"]
    record("07b G(60, 0.85), 500 trials: >= 99% negative quartic discriminants", frac >= SWEEP_FRACTION, f"{frac:.3f}")


@pytest.mark.slow
def test_criterion_07c_no_false_certificates(sweeps):
    s = sweeps["exact"]
    record(
        "07c G(14, 0.5), 100 trials with exact check: zero false certificates",
        s["false_certificates"] == 0 and s["exact_checked"] == 100,
        f"{s['false_certificates']} false of {s['certified']} certified; {s['exact_nonreal']} exactly non-real",
    )


# 8 ---------------------------------------------------------------------------


def test_criterion_08a_lc_root():
    r = float(lc_root())
    record("08a largest root of lc in (0,1) is 0.31564 +/- 5e-5", abs(r - LC_ROOT) <= LC_ROOT_TOL, f"root {r:.8f}")


def test_criterion_08b_lc_oracle():
    details, ok = [], True
    for p in (0.2, 0.5, 0.9):
        fit = lc_numeric_oracle(p)
        lc = float(quartic_lc(Fraction(p)))
        same_sign = (fit > 0) == (lc > 0)
        ok &= same_sign
        details.append(f"p={p}: oracle {fit:.3e} vs lc {lc:.3e}")
    rel = abs(lc_numeric_oracle(0.5) / float(quartic_lc(Fraction(1, 2))) - 1)
    ok &= rel <= LC_REL_TOL
    record("08b lc oracle agrees in sign at 0.2/0.5/0.9 and within 2% at 0.5", ok, "; ".join(details) + f"; rel err at 0.5 {rel:.3g}")


# 9 ---------------------------------------------------------------------------


def test_criterion_09_gauss_lucas():
    rng = np.random.default_rng(GAUSS_LUCAS_SEED)
    worst_ratio, tested = 0.0, 0
    while tested < 1000:
        deg = int(rng.integers(2, 13))
        coeffs = [int(c) for c in rng.integers(-9, 10, size=deg + 1)]
        if coeffs[-1] == 0:
            continue
        p = Poly(coeffs)
        rep = hull_containment(find_roots(p), find_roots(p.derivative()))
        worst_ratio = max(worst_ratio, rep.max_violation / rep.tolerance * HULL_REL_TOL)
        tested += 1
    graph_fail = 0
    graphs = [g for g in corpus_upto(7) if g.n >= 2]
    for g in graphs:
        pi = chromatic_polynomial(g)
        graph_fail += not hull_containment(find_roots(pi), find_roots(pi.derivative())).contained
    record(
        "09 Gauss-Lucas: derivative roots in root hull (1000 random polynomials; corpus order <= 7)",
        worst_ratio < HULL_REL_TOL and graph_fail == 0,
        f"worst random violation {worst_ratio:.2e} x scale; {graph_fail}/{len(graphs)} corpus failures",
    )


# 10 --------------------------------------------------------------------------


def test_criterion_10_root_location():
    graphs = corpus_upto(7)
    bad = [g for g in graphs if not root_location_sanity(g, find_roots(chromatic_polynomial(g))).ok]
    record(
        "10 |z - 1| <= m - n + 1 on connected corpus graphs of order <= 7",
        not bad,
        f"{len(bad)} of {len(graphs)} graphs violate",
    )


# 11 --------------------------------------------------------------------------


@pytest.mark.slow
def test_criterion_11_extremal():
    winners = {}
    for n in (7, 8):
        with open(connected_corpus(n)) as fh:
            res = extremal_imaginary_search(fh)
        target = complete_bipartite(n // 2, n - n // 2)
        winners[n] = (canonical_form(res.winner.adj) == canonical_form(target.adj) and not res.ties, res.max_imag)
    rows = bipartite_scan(16)
    trend = nondecreasing(r.ratio for r in rows) and math.isclose(rows[0].ratio, math.sqrt(3) / 8, rel_tol=1e-12)
    record(
        "11 extremal: order-7 winner K3,4, order-8 winner K4,4; bipartite ratios nondecreasing",
        winners[7][0] and winners[8][0] and trend,
        f"order 7 K3,4={winners[7][0]} ({winners[7][1]:.6f}); order 8 K4,4={winners[8][0]} ({winners[8][1]:.6f}); "
        f"bipartite trend={trend} (n=16 ratio {rows[-1].ratio:.5f})",
    )


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
