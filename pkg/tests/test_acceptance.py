"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

The lines are collected into an "acceptance criteria" section of the
pytest terminal summary.  All comparisons are exact rational equality.
"""

import io
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from nefcones import gallery
from nefcones.bundles import discriminant, formal, pullback_blowup, pullback_ruling, slope_restriction, twist
from nefcones.cli import main
from nefcones.cones import ConeV, Ray, cones_equal, dual_of_rays, halfspaces_of_rays, rays_of_dual, remove_redundant
from nefcones.nefcone import nef_cone
from nefcones.seshadri import crosscheck, seshadri_p2, seshadri_ruled
from nefcones.surfaces import SITE_ON_SIGMA, SITE_POINT, blow_up, projective_plane, ruled_surface

import oracles
from conftest import ACCEPTANCE_LINES

F = Fraction
CASES = Path(__file__).resolve().parent.parent / "cases"
RULED = [(0, 0), (1, 0), (2, -1), (1, 2), (3, -2), (0, 1)]


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def row_set(result):
    return {h.normal for h in result.cone.halfspaces}


# ---------------------------------------------------------------- golden cones


def cone_1():
    return nef_cone(*gallery.ruled_pullback(1, 0, 2, 1))


def cone_2():
    return nef_cone(*gallery.ruled_pullback_blown_up(1, 0, 2, 1))


def cone_3():
    return nef_cone(*gallery.plane_blown_up_split())


def cones_4():
    return {p: nef_cone(*gallery.ruled_blown_up_split(*p)) for p in [(-1, 1, 2), (-2, -1, 3)]}


def test_criterion_1_ruled_pullback():
    got = row_set(cone_1())
    want = {(1, 0, 0), (0, 1, 0), (F(1, 2), 0, 1)}
    assert report(1, "ruled pullback nef cone rows", got == want)


def test_criterion_2_ruled_blow_up():
    got = row_set(cone_2())
    want = {(1, 0, 0, 0), (0, -1, 0, 1), (F(1, 2), 0, -1, 1), (0, 1, 1, -1)}
    assert report(2, "blown-up ruled pullback nef cone rows", got == want)


def test_criterion_3_plane_blow_up():
    r = cone_3()
    rows = [h.normal for h in r.raw.halfspaces]
    ok = set(rows) == {(1, 0, 0), (1, 0, 1), (-1, 1, -1), (0, 1, 0)}
    ok = ok and r.redundant[rows.index((0, 1, 0))] and sum(r.redundant) == 1
    minimized = remove_redundant(r.raw)
    ok = ok and (0, 1, 0) not in {h.normal for h in minimized.halfspaces} and cones_equal(r.raw, minimized)
    assert report(3, "split bundle on blown-up plane, last row redundant", ok)


def test_criterion_4_family():
    ok = True
    for (l, m, n), r in cones_4().items():
        want = {(1, 0, 0, 0), (m, -1, 0, 1), (m, 0, l - 1, 1), (-n, 1, 1, -1), (m, 0, l, 1)}
        ok = ok and row_set(r) == want
    assert report(4, "parametric family at (l,m,n) = (-1,1,2), (-2,-1,3)", ok)


# ---------------------------------------------------------------- Seshadri


def test_criterion_5_plane_closed_form():
    rng = random.Random(5)
    ok = True
    for _ in range(20):
        r = rng.randint(2, 5)
        degs = sorted(rng.randint(1, 9) for _ in range(r))
        V = gallery.plane_split(*degs)[1]
        closed = seshadri_p2(V)
        rep = crosscheck(V)
        ok = ok and closed.exact == degs[0] and rep.cone_lp.exact == degs[0] and rep.agree
    assert report(5, "20 random split ample bundles on P2: closed form = cone route = a1", ok)


def test_criterion_6_ruled_closed_form():
    rng = random.Random(6)
    ok = True
    count = 0
    while count < 20:
        g, d = rng.choice(RULED)
        Y = ruled_surface(g, d)
        r = rng.randint(2, 4)
        V = twist(pullback_ruling((r, rng.randint(-4, 4)), Y), Y.cls([rng.randint(-3, 4), rng.randint(-4, 6)]))
        mu_s = slope_restriction(V, Y.basis_class("zeta"))
        mu_f = slope_restriction(V, Y.basis_class("f"))
        if mu_s <= 0 or mu_f <= 0:
            continue
        count += 1
        closed = seshadri_ruled(V, SITE_ON_SIGMA)
        rep = crosscheck(V, SITE_ON_SIGMA)
        ok = ok and closed.exact == min(mu_s, mu_f) == rep.cone_lp.exact and rep.agree
    assert report(6, "20 random semistable bundles on ruled surfaces: closed form = cone route", ok)


# ---------------------------------------------------------------- duality


def test_criterion_7_duality():
    results = [cone_1(), cone_2(), cone_3(), *cones_4().values()]
    ok = all(cones_equal(dual_of_rays(r.generators), r.cone) for r in results)
    rng = random.Random(20261016)
    for k in range(200):
        dim = 2 + k % 4
        rays = oracles.random_pointed_cone(rng, dim)
        hs = halfspaces_of_rays(ConeV(dim, tuple(Ray(x) for x in rays)))
        fs = oracles.facets(rays, dim)
        ok = ok and hs.keys() == fs
        ok = ok and rays_of_dual(hs).keys() == oracles.extreme_among(rays, fs)
    assert report(7, "duality closure on criteria 1-4 and 200 random V->H->V round trips", ok)


# ---------------------------------------------------------------- discriminant


def test_criterion_8_discriminant_invariance():
    rng = random.Random(8)
    P2 = projective_plane()
    surfaces = [P2, blow_up(P2, SITE_POINT)]
    for g, d in RULED:
        Y = ruled_surface(g, d)
        surfaces += [Y, blow_up(Y, SITE_ON_SIGMA)]

    def rnd():
        return F(rng.randint(-30, 30), rng.randint(1, 6))

    ok = True
    for S in surfaces:
        target = None
        if not S.id.startswith("Bl"):
            target = blow_up(S, SITE_POINT if S.id == "P2" else SITE_ON_SIGMA)
        for _ in range(100):
            E = formal(rng.randint(2, 6), S.cls([rnd() for _ in range(S.rank)]), rnd())
            L = S.cls([rnd() for _ in range(S.rank)])
            ok = ok and discriminant(twist(E, L)) == discriminant(E)
            if target is not None:
                ok = ok and discriminant(pullback_blowup(E, target)) == discriminant(E)
    assert report(8, f"discriminant invariance, 100 random bundles on each of {len(surfaces)} surfaces", ok)


# ---------------------------------------------------------------- CLI


def test_criterion_9_cli_golden():
    cases = sorted(CASES.glob("*.json"))
    ok = bool(cases)
    for case in cases:
        out, err = io.StringIO(), io.StringIO()
        code = main(["run", str(case), "--format", "json"], out, err)
        ok = ok and code == 0 and out.getvalue() == (CASES / "expected" / case.name).read_text(encoding="utf-8")
    assert report(9, f"CLI golden files byte-for-byte ({len(cases)} cases)", ok)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
