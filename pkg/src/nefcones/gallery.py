"""Worked setups used by the demos and the acceptance suite.

Each function returns ``(X, E)``: a catalogue surface and a bundle on it.
"""

from __future__ import annotations

from .bundles import BundleModel, decomposable, pullback_blowup, pullback_ruling
from .surfaces import SITE_ON_SIGMA, SITE_POINT, SurfaceModel, blow_up, projective_plane, ruled_surface


def ruled_pullback(genus: int = 1, degW: int = 0, rank: int = 2, degree: int = 1) -> tuple[SurfaceModel, BundleModel]:
    """``rho^* V`` on a ruled surface, V semistable of the given rank and degree."""
    Y = ruled_surface(genus, degW)
    return Y, pullback_ruling((rank, degree), Y)


def ruled_pullback_blown_up(genus: int = 1, degW: int = 0, rank: int = 2, degree: int = 1) -> tuple[SurfaceModel, BundleModel]:
    """The same bundle pulled back to the blow-up at a point of sigma."""
    Y, E = ruled_pullback(genus, degW, rank, degree)
    X = blow_up(Y, SITE_ON_SIGMA)
    return X, pullback_blowup(E, X)


def plane_blown_up_split() -> tuple[SurfaceModel, BundleModel]:
    """``O(H) + O(E)`` on P^2 blown up at a point."""
    X = blow_up(projective_plane(), SITE_POINT)
    return X, decomposable([X.basis_class("H"), X.exceptional])


def ruled_blown_up_split(l: int, m: int, n: int, genus: int = 2) -> tuple[SurfaceModel, BundleModel]:
    """``O(mE) + O(nE)`` on the blow-up of a ruled surface with ``zeta^2 = l``."""
    X = blow_up(ruled_surface(genus, l), SITE_ON_SIGMA)
    return X, decomposable([X.exceptional * m, X.exceptional * n])


def plane_split(*degrees: int) -> tuple[SurfaceModel, BundleModel]:
    """``O(a_1) + ... + O(a_r)`` on P^2."""
    P = projective_plane()
    return P, decomposable([P.cls([a]) for a in degrees])
