"""
Exact polyhedral cones
======================

Convert between generators and inequalities, dualize, and strip
redundant rows, all in exact rational arithmetic.
"""

from fractions import Fraction

from nefcones.cones import (
    ConeH,
    ConeV,
    Halfspace,
    Ray,
    cones_equal,
    dual_of_rays,
    extremal_rays,
    halfspaces_of_rays,
    rays_of_dual,
    redundancy_certificates,
    remove_redundant,
)
from nefcones.rational import fmt


def vec(v):
    return "(" + ", ".join(fmt(x) for x in v) + ")"


# A cone given by three generating rays in Q^3.
V = ConeV(3, (Ray((0, 0, 1)), Ray((1, 0, -1)), Ray((0, 1, -1))))

# Its facets: the inequalities cutting out the same set.
H = halfspaces_of_rays(V)
print("facets of cone(V):", sorted(H.keys()))

# Back again: the extreme rays of that inequality system.
print("rays of the facets:", sorted(rays_of_dual(H).keys()))

# The dual cone {y : <y, r> >= 0 for every ray r}.  For a pointed cone its
# irredundant inequalities are the extreme input rays themselves.
print("dual cone normals:", [vec(h.normal) for h in dual_of_rays(V).halfspaces])

# A system with an implied row.  The certificate writes it as a
# nonnegative combination of the surviving rows.
system = ConeH(
    3,
    (Halfspace((1, 0, 0)), Halfspace((1, 0, 1)), Halfspace((-1, 1, -1)), Halfspace((0, 1, 0))),
    ("y0", "y1", "y2"),
)
for h, cert in zip(system.halfspaces, redundancy_certificates(system)):
    status = "kept" if cert is None else "implied: " + " + ".join(f"{fmt(c)}*row{j}" for j, c in cert.items())
    print(f"  {vec(h.normal)}: {status}")
minimal = remove_redundant(system)
print("minimal system:", [vec(h.normal) for h in minimal.halfspaces], "same cone:", cones_equal(system, minimal))

# Extreme rays of the minimal system; rationals never become floats.
print("extreme rays:", sorted(extremal_rays(minimal).keys()))
h = Halfspace((Fraction(1, 2), 0, 1))
print("a rational row:", vec(h.normal), "canonical form:", h.key())
