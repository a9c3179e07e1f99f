import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromroots.census import census
from chromroots.chrompoly import chromatic_polynomial, normalized_derivative
from chromroots.graph import RngSeed, complete, complete_bipartite, cycle, erdos_renyi, path, petersen
from chromroots.polynomial import Poly
from chromroots.rootkit import (
    RootSet,
    certify_nonreal,
    convex_hull,
    find_roots,
    hull_containment,
    hull_distance,
    quadratic_disc_test,
    quartic_disc_test,
    quartic_discriminant,
    quartic_from_counts,
    root_location_sanity,
)
from chromroots.sturm import count_real_roots


def test_roots_of_c4():
    rs = find_roots(chromatic_polynomial(cycle(4)))
    expected = [0, 1, complex(1.5, -math.sqrt(3) / 2), complex(1.5, math.sqrt(3) / 2)]
    assert len(rs.roots) == 4 and not rs.all_real and not rs.indeterminate
    for z, e in zip(rs.roots, expected):
        assert abs(z - e) < 1e-12
    assert rs.max_imag == pytest.approx(math.sqrt(3) / 2, abs=1e-12)
    doc = rs.to_json()
    assert doc["schema"] == 1 and doc["all_real"] is False and len(doc["roots"]) == 4


def test_repeated_roots_stay_real():
    rs = find_roots(chromatic_polynomial(path(12)))
    assert rs.all_real and rs.max_imag == 0.0
    assert sum(1 for z in rs.roots if z == 1) == 11
    assert rs.nonreal() == []


def test_petersen_roots_residual():
    rs = find_roots(chromatic_polynomial(petersen()))
    assert rs.status == "ok" and rs.residual < 1e-10
    assert sum(1 for z in rs.roots if z.imag) % 2 == 0


def test_find_roots_rejects_constants():
    with pytest.raises(ValueError):
        find_roots(Poly([3]))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=3, max_size=10).filter(lambda c: c[-1] != 0))
def test_roots_conjugate_closed_and_count_exact(coeffs):
    p = Poly(coeffs)
    rs = find_roots(p)
    assert len(rs.roots) == p.degree
    up = sorted((z for z in rs.roots if z.imag > 0), key=lambda z: (z.real, z.imag))
    lo = sorted((z.conjugate() for z in rs.roots if z.imag < 0), key=lambda z: (z.real, z.imag))
    assert up == lo
    assert rs.all_real == (not up)


def test_quartic_discriminant_against_root_product():
    for roots in ([1, 2, 3, 4], [0, -1, 5, 7], [2, 2, 3, 9]):
        a = 3
        p = Poly.from_roots(roots) * a
        disc = quartic_discriminant(*(p[i] for i in (4, 3, 2, 1, 0))).value
        prod = 1
        for r, s in combinations(roots, 2):
            prod *= (r - s) ** 2
        assert disc == a**6 * prod
    with pytest.raises(ValueError):
        quartic_discriminant(0, 1, 1, 1, 1)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=5, max_size=5).filter(lambda c: c[0] != 0))
def test_negative_quartic_discriminant_means_two_nonreal_roots(c):
    rep = quartic_discriminant(*c)
    if rep.sign < 0:
        assert count_real_roots(Poly(list(reversed(c)))) == 2
        assert rep.certifies_nonreal


def _graphs():
    yield from (cycle(5), complete_bipartite(3, 3), petersen(), complete(6))
    for i in range(8):
        yield erdos_renyi(9, 0.5, RngSeed(i, 2))


def test_quadratic_is_the_normalised_derivative():
    for g in _graphs():
        q = normalized_derivative(chromatic_polynomial(g), g.n - 2)
        disc = q[1] ** 2 - 4 * q[2] * q[0]
        assert quadratic_disc_test(g.n, g.m, census(g).t).value == disc


def test_quartic_is_the_normalised_derivative():
    for g in _graphs():
        q = normalized_derivative(chromatic_polynomial(g), g.n - 4)
        assert quartic_from_counts(census(g), g.n, integral=False) == tuple(Fraction(q[i]) for i in (4, 3, 2, 1, 0))
        scaled = quartic_from_counts(census(g), g.n)
        assert all(isinstance(x, int) for x in scaled)
        assert quartic_disc_test(census(g), g.n).sign == quartic_discriminant(*(q[i] for i in (4, 3, 2, 1, 0))).sign
    with pytest.raises(ValueError):
        quartic_from_counts(census(cycle(4)), 4)


def test_certificates_are_sound_on_small_corpus(small_connected):
    fired = 0
    for g in small_connected:
        p = chromatic_polynomial(g)
        ok, how = certify_nonreal(p)
        if ok:
            fired += 1
            assert not find_roots(p).all_real, (g, how)
    assert fired > 0


def test_convex_hull_shapes():
    square = [0, 1, 1 + 1j, 1j, 0.5 + 0.5j, 0.5]
    hull = convex_hull(square)
    assert sorted(hull) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert convex_hull([0, 1, 2, 3]) == [(0.0, 0.0), (3.0, 0.0)]
    assert convex_hull([2j]) == [(0.0, 2.0)]
    assert hull_distance(hull, 0.5 + 0.5j) == 0
    assert hull_distance(hull, 2 + 0.5j) == pytest.approx(1.0)
    assert hull_distance([(0, 0), (3, 0)], 1 + 1j) == pytest.approx(1.0)
    assert hull_distance([(0, 0)], 3 + 4j) == pytest.approx(5.0)


def test_gauss_lucas_containment():
    p = chromatic_polynomial(petersen())
    assert hull_containment(find_roots(p), find_roots(p.derivative())).contained
    rep = hull_containment([0, 1, 1j], [2 + 2j])
    assert not rep.contained and rep.max_violation > 1


def test_root_location_sanity(small_connected):
    for g in small_connected:
        assert root_location_sanity(g, find_roots(chromatic_polynomial(g))).ok
    g = cycle(4)
    fake = RootSet(roots=[0, 1, 5 + 5j, 5 - 5j], residual=0.0, all_real=False)
    rep = root_location_sanity(g, fake)
    assert not rep.ok and rep.cyclomatic_bound == 1
    assert {kind for kind, _, _ in rep.violations} == {"cyclomatic"}
    rep = root_location_sanity(g, RootSet(roots=[20], residual=0.0, all_real=True))
    assert {kind for kind, _, _ in rep.violations} == {"cyclomatic", "max-degree"}
