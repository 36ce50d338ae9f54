from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nefcones import bundles as bm
from nefcones.bundles import (
    BundleError,
    MuMinUnavailable,
    decomposable,
    deg_restriction,
    discriminant,
    formal,
    mu_min_restriction,
    pullback_blowup,
    pullback_ruling,
    semistable_delta0,
    slope_restriction,
    twist,
)
from nefcones.surfaces import SITE_ON_SIGMA, SITE_POINT, blow_up, intersect, projective_plane, ruled_surface

P2 = projective_plane()
Y = ruled_surface(1, 0)


def O(*degs):
    return decomposable([P2.cls([d]) for d in degs])


def test_discriminant_examples():
    assert discriminant(formal(2, P2.zero(), 0)) == 0
    assert discriminant(pullback_ruling((2, 1), Y)) == 0
    E = O(1, 3)
    assert (E.c1, E.c2, discriminant(E)) == (P2.cls([4]), 3, -4)


def test_pullback_ruling():
    E = pullback_ruling((2, 1), Y)
    assert E.c1 == Y.basis_class("f") and E.kind == bm.SEMISTABLE_DELTA0
    assert pullback_ruling((3, 0), ruled_surface(0, 5)).c1.is_zero()
    assert discriminant(pullback_ruling((3, 2), ruled_surface(2, -1))) == 0


def test_restrictions_on_ruled():
    E = pullback_ruling((2, 1), Y)
    zeta, f = Y.basis_class("zeta"), Y.basis_class("f")
    assert deg_restriction(E, zeta) == 1 and deg_restriction(E, f) == 0
    assert slope_restriction(E, zeta) == Fraction(1, 2) and slope_restriction(E, f) == 0
    assert deg_restriction(E, Y.zero()) == 0
    assert mu_min_restriction(E, zeta) == Fraction(1, 2)


def test_mu_min_decomposable():
    assert mu_min_restriction(O(2, 4, 7), P2.basis_class("H")) == 2
    X = blow_up(P2, SITE_POINT)
    E = decomposable([X.cls([1, 0]), X.cls([0, 1])])
    assert mu_min_restriction(E, X.exceptional) == -1


def test_mu_min_formal_is_refused():
    with pytest.raises(MuMinUnavailable):
        mu_min_restriction(formal(2, P2.cls([1]), 0), P2.basis_class("H"))


def test_mu_min_outside_curve_cone_is_refused():
    X = blow_up(P2, SITE_POINT)
    with pytest.raises(BundleError):
        mu_min_restriction(decomposable([X.cls([1, 0]), X.cls([0, 1])]), X.cls([0, -1]))


def test_pullback_to_blow_up():
    X = blow_up(Y, SITE_ON_SIGMA)
    E = pullback_blowup(pullback_ruling((2, 1), Y), X)
    assert deg_restriction(E, X.cls([1, 0, -1])) == 1
    assert deg_restriction(E, X.exceptional) == 0
    assert discriminant(E) == 0


def test_twist_examples():
    L = Y.basis_class("f")
    E = twist(formal(2, Y.zero(), 0), L)
    assert (E.c1, E.c2, discriminant(E)) == (L * 2, 0, 0)
    F = O(0, 0)
    assert twist(F, P2.zero()) == F
    G = twist(F, P2.basis_class("H"))
    assert (G.c1, G.c2) == (P2.cls([2]), 1) and G == O(1, 1)


def test_validation():
    with pytest.raises(BundleError):
        semistable_delta0(2, P2.cls([1]), 0)
    with pytest.raises(BundleError):
        bm.BundleModel(2, P2.cls([3]), 5, bm.DECOMPOSABLE, (P2.cls([1]), P2.cls([2])))
    with pytest.raises(BundleError):
        formal(1, P2.zero(), 0)


deg = st.integers(min_value=-5, max_value=9)


@given(st.lists(deg, min_size=2, max_size=5))
def test_discriminant_from_summands(degs):
    E = O(*degs)
    r = len(degs)
    e2 = sum(degs[i] * degs[j] for i in range(r) for j in range(i + 1, r))
    assert discriminant(E) == 2 * r * e2 - (r - 1) * sum(degs) ** 2


@given(st.lists(st.tuples(deg, deg, deg), min_size=2, max_size=4), st.tuples(deg, deg, deg))
def test_mu_min_below_slope_and_twist_invariance(summands, L):
    X = blow_up(ruled_surface(1, -1), SITE_ON_SIGMA)
    E = decomposable([X.cls(s) for s in summands])
    for C in X.generator_classes:
        assert mu_min_restriction(E, C) <= slope_restriction(E, C)
    assert discriminant(twist(E, X.cls(L))) == discriminant(E)


@given(deg, deg, st.tuples(deg, deg), st.tuples(deg, deg))
def test_deg_is_linear(a, b, C, D):
    E = formal(3, Y.cls([2, -1]), 4)
    Cc, Dc = Y.cls(C), Y.cls(D)
    assert deg_restriction(E, Cc * a + Dc * b) == a * deg_restriction(E, Cc) + b * deg_restriction(E, Dc)


@given(st.integers(min_value=2, max_value=4), st.integers(min_value=-5, max_value=5))
def test_semistable_slope_equals_mu_min(r, d):
    E = pullback_ruling((r, d), Y)
    for C in Y.generator_classes:
        assert mu_min_restriction(E, C) == slope_restriction(E, C) == Fraction(d, r) * intersect(Y.basis_class("f"), C)
