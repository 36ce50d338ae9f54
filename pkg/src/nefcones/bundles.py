"""Numerical vector bundles on catalogue surfaces.

A bundle is recorded by rank, ``c1`` and ``c2`` (a rational) plus what we
know about it structurally:

``decomposable``
    a direct sum of line bundles with the given classes;
``semistable_delta0``
    declared semistable with vanishing discriminant (checked at construction);
``formal``
    numbers only.

``mu_min`` of a restriction is available for the first two kinds only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .lp import nonnegative_combination
from .rational import to_fraction
from .surfaces import BlowUp, NSClass, Ruled, SurfaceModel, intersect

DECOMPOSABLE = "decomposable"
SEMISTABLE_DELTA0 = "semistable_delta0"
FORMAL = "formal"
KINDS = (DECOMPOSABLE, SEMISTABLE_DELTA0, FORMAL)


class BundleError(ValueError):
    pass


class MuMinUnavailable(BundleError):
    pass


@dataclass(frozen=True)
class BundleModel:
    rank: int
    c1: NSClass
    c2: Fraction
    kind: str
    summands: Optional[tuple[NSClass, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "c2", to_fraction(self.c2))
        if self.rank < 2:
            raise BundleError("rank must be at least 2")
        if self.kind not in KINDS:
            raise BundleError(f"unknown bundle kind {self.kind!r}")
        if self.kind == DECOMPOSABLE:
            if self.summands is None or len(self.summands) != self.rank:
                raise BundleError("a decomposable bundle needs exactly `rank` summands")
            if sum(self.summands[1:], self.summands[0]) != self.c1:
                raise BundleError("c1 must equal the sum of the summands")
            if _e2(self.summands) != self.c2:
                raise BundleError("c2 must equal the second symmetric function of the summands")
        elif self.summands is not None:
            raise BundleError("summands are only recorded for decomposable bundles")
        if self.kind == SEMISTABLE_DELTA0 and discriminant(self) != 0:
            raise BundleError(f"discriminant is {discriminant(self)}, not 0")

    @property
    def surface(self) -> SurfaceModel:
        return self.c1.surface


def _e2(classes: Sequence[NSClass]) -> Fraction:
    total = Fraction(0)
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            total += intersect(classes[i], classes[j])
    return total


def decomposable(summands: Sequence[NSClass]) -> BundleModel:
    summands = tuple(summands)
    if not summands:
        raise BundleError("no summands")
    c1 = sum(summands[1:], summands[0])
    return BundleModel(len(summands), c1, _e2(summands), DECOMPOSABLE, summands)


def semistable_delta0(rank: int, c1: NSClass, c2) -> BundleModel:
    return BundleModel(rank, c1, to_fraction(c2), SEMISTABLE_DELTA0)


def formal(rank: int, c1: NSClass, c2) -> BundleModel:
    return BundleModel(rank, c1, to_fraction(c2), FORMAL)


def discriminant(E: BundleModel) -> Fraction:
    """``2 r c2 - (r - 1) c1^2``."""
    r = E.rank
    return 2 * r * E.c2 - (r - 1) * intersect(E.c1, E.c1)


def deg_restriction(E: BundleModel, C: NSClass) -> Fraction:
    return intersect(E.c1, C)


def slope_restriction(E: BundleModel, C: NSClass) -> Fraction:
    return deg_restriction(E, C) / E.rank


def mu_min_restriction(E: BundleModel, C: NSClass) -> Fraction:
    """Minimal slope of the restriction to a curve class in the cone of curves.

    Decomposable: smallest summand degree on ``C``.  Semistable with
    vanishing discriminant: the restriction stays semistable, so the slope.
    """
    if E.kind == FORMAL:
        raise MuMinUnavailable("mu_min is not computable from numerical data for a formal bundle")
    surface = C.surface
    if nonnegative_combination([g.coords for g in surface.generator_classes], C.coords) is None:
        raise BundleError(f"{C} is not in the cone spanned by the catalogued curves")
    if E.kind == DECOMPOSABLE:
        return min(intersect(C, L) for L in E.summands)
    return slope_restriction(E, C)


def pullback_blowup(E: BundleModel, target: SurfaceModel) -> BundleModel:
    """Pull back along the blow-up ``target -> E.surface``; ``c2`` is unchanged."""
    if not isinstance(target.kind, BlowUp) or target.kind.parent.id != E.surface.id:
        raise BundleError(f"{target.id} is not a blow-up of {E.surface.id}")
    summands = None if E.summands is None else tuple(target.pullback(L) for L in E.summands)
    return BundleModel(E.rank, target.pullback(E.c1), E.c2, E.kind, summands)


def pullback_ruling(V_data: tuple[int, int], target: SurfaceModel) -> BundleModel:
    """``rho^* V`` for a semistable ``V`` of the given (rank, degree) on the base curve."""
    if not isinstance(target.kind, Ruled):
        raise BundleError(f"{target.id} is not a ruled surface")
    rank, degree = V_data
    c1 = target.basis_class("f") * degree
    return semistable_delta0(int(rank), c1, 0)


def twist(E: BundleModel, L: NSClass) -> BundleModel:
    """``E (x) L``."""
    r = E.rank
    c1 = E.c1 + L * r
    c2 = E.c2 + (r - 1) * intersect(E.c1, L) + Fraction(r * (r - 1), 2) * intersect(L, L)
    summands = None if E.summands is None else tuple(M + L for M in E.summands)
    return BundleModel(r, c1, c2, E.kind, summands)
