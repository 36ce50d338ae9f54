"""
Nef cones of projective bundles
===============================

Write down the inequalities cutting out Nef(P(E)) in coordinates over
xi and the pulled-back curve generators, check them against the dual of
the curve generators, and read off the extreme nef classes.
"""

from nefcones import gallery
from nefcones.cli import inequality
from nefcones.cones import cones_equal, dual_of_rays, extremal_rays
from nefcones.nefcone import DivisorClass, nef_cone, nef_cone_picard1, pair


def show(title, result):
    names = result.cone.coord_names
    print(title, f"[{result.provenance}]")
    print("  coordinates:", ", ".join(f"{n} -> {b}" for n, b in zip(names, result.basis_labels)))
    for h, red in zip(result.raw.halfspaces, result.redundant):
        print("  " + inequality(h, names) + ("   (redundant)" if red else ""))
    print("  dual of the curve generators agrees:", cones_equal(dual_of_rays(result.generators), result.cone))
    print("  extreme nef classes:", sorted(extremal_rays(result.cone).keys()))


# Semistable with vanishing discriminant on a ruled surface and on its blow-up.
show("ruled, rho^*V", nef_cone(*gallery.ruled_pullback()))
show("blown-up ruled, rho^*V", nef_cone(*gallery.ruled_pullback_blown_up()))

# A split bundle on the blown-up plane; one row is implied by the others.
show("blown-up P2, O(H)+O(E)", nef_cone(*gallery.plane_blown_up_split()))

# The two-parameter family O(mE)+O(nE) over a ruled surface with zeta^2 = l.
for l, m, n in [(-1, 1, 2), (-2, -1, 3)]:
    show(f"family l={l} m={m} n={n}", nef_cone(*gallery.ruled_blown_up_split(l, m, n)))

# Picard number one: the cone is spanned by xi - a1*pi^*H and pi^*H.
P, E = gallery.plane_split(2, 5)
print("P2, O(2)+O(5):", sorted(nef_cone_picard1(P, E).nef_generators().keys()))

# Pairing a divisor against every generating cycle tests nefness directly.
X, E = gallery.plane_blown_up_split()
r = nef_cone(X, E)
D = DivisorClass(1, (1, 0), E)
print("xi + pi^*(H-E) pairs to", [str(pair(D, Z)) for Z in r.cycles])
