"""
Seshadri constants
==================

Compute eps(V, x) by the closed forms and by the cone route (blow up,
pull back, build the nef cone, push xi - lambda E as far as it stays nef).
"""

from nefcones import gallery
from nefcones.cli import inequality
from nefcones.bundles import decomposable, pullback_ruling, semistable_delta0, twist
from nefcones.seshadri import crosscheck, seshadri_p2, seshadri_ruled
from nefcones.surfaces import projective_plane, ruled_surface

# Split bundles on P^2: the constant is the smallest summand degree.
for degs in [(1, 2), (3, 3, 7), (4, 6, 9, 9)]:
    V = gallery.plane_split(*degs)[1]
    rep = crosscheck(V)
    print(f"O{degs}: closed form {rep.closed_form.exact}, cone route {rep.cone_lp.exact}, agree {rep.agree}")

# Other bundles on P^2 only get bounds.
P2 = projective_plane()
r = seshadri_p2(semistable_delta0(2, P2.cls([2]), 1))
print("semistable, c1 = 2H: bounds", *map(str, r.bounds))

# Ruled surfaces at a point of sigma: min of the slopes on sigma and on f.
Y = ruled_surface(1, 0)
V = twist(pullback_ruling((2, 1), Y), Y.cls([2, 0]))
rep = crosscheck(V)
print("twisted rho^*V:", rep.closed_form.exact, "=", rep.cone_lp.exact, "binding rows:")
for h in rep.cone_lp.witness:
    print("   ", inequality(h, rep.nef.cone.coord_names), f"[{h.label}]")

# A split bundle on a ruled surface: bounds, with the cone value inside.
W = decomposable([Y.cls([1, 3]), Y.cls([2, 3])])
r = seshadri_ruled(W)
lam = crosscheck(W).cone_lp.exact
print("split on ruled: bounds", *map(str, r.bounds), "cone route", lam)
assert r.contains(lam)
