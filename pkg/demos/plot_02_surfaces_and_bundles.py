"""
Surfaces and numerical bundles
==============================

Build catalogue surfaces, look at their intersection forms and curve
cones, and compute the invariants of a few bundles.
"""

from nefcones.bundles import (
    decomposable,
    deg_restriction,
    discriminant,
    mu_min_restriction,
    pullback_blowup,
    pullback_ruling,
    slope_restriction,
    twist,
)
from nefcones.surfaces import SITE_ON_SIGMA, SITE_POINT, blow_up, intersect, projective_plane, ruled_surface

# A ruled surface over an elliptic curve with zeta^2 = 0, and its blow-up
# at a point of the section sigma.
Y = ruled_surface(1, 0)
X = blow_up(Y, SITE_ON_SIGMA)
print(X.id, "basis:", X.ns_basis, "signature:", X.form.signature())
gens = X.generator_classes
for label, C in X.ne_generators:
    print(f"  {label:7s}", [str(intersect(C, D)) for D in gens])

# rho^*V for V semistable of rank 2 and degree 1 on the base curve.
E = pullback_ruling((2, 1), Y)
print("Delta(rho^*V) =", discriminant(E))
for label, C in Y.ne_generators:
    print(f"  on {label}: deg {deg_restriction(E, C)}, slope {slope_restriction(E, C)}")

# Pulling back to the blow-up keeps the discriminant.
EX = pullback_blowup(E, X)
print("Delta after blow-up =", discriminant(EX))

# A split bundle on P^2 and on its blow-up.
P2 = projective_plane()
V = decomposable([P2.cls([1]), P2.cls([3])])
print("O(1)+O(3): c1 =", V.c1.coords[0], "* H, c2 =", V.c2, "Delta =", discriminant(V))
print("twisting by O(2) keeps Delta:", discriminant(twist(V, P2.cls([2]))))
B = blow_up(P2, SITE_POINT)
W = decomposable([B.basis_class("H"), B.exceptional])
for label, C in B.ne_generators:
    print(f"  mu_min on {label}: {mu_min_restriction(W, C)}")
