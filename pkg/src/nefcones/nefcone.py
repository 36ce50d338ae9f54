"""Nef cones and curve-cone generators of projective bundles over surfaces.

Divisors on P(E) are written ``y0 xi + sum_i y_i pi^*C_i`` where ``C_i``
are the catalogued curve generators of the base surface; the coordinate
vector is ``(y0, y1, ..., yn)``.  For every catalogued surface the
generators form a basis of N^1 of the base, so these coordinates are a
basis of N^1(P(E)); in general they are only a generating set and cone
equality is meant in these coordinates.

One-cycles are ``a xi^(r-2)F + xi^(r-1) pi^*beta`` with ``F`` a fibre of
P(E) -> X.  The pairing uses

    xi . xi^(r-2)F = 1,            pi^*D . xi^(r-2)F = 0,
    xi . xi^(r-1)pi^*C = deg(E|_C), pi^*D . xi^(r-1)pi^*C = D.C.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import bundles as bm
from .bundles import BundleModel, deg_restriction, discriminant, mu_min_restriction, slope_restriction
from .cones import ConeH, ConeV, Halfspace, Ray, extremal_rays, redundancy_flags, remove_redundant
from .rational import Vector, to_fraction, to_vector
from .surfaces import NSClass, SurfaceModel, intersect

SEMISTABLE = "semistable-delta0"
DECOMPOSABLE = "decomposable"
PICARD_ONE = "picard-one"


class NefConeError(ValueError):
    pass


class PreconditionError(NefConeError):
    pass


def coordinate_names(n: int) -> tuple[str, ...]:
    return tuple(f"y{i}" for i in range(n + 1))


@dataclass(frozen=True)
class DivisorClass:
    """``y0 xi + sum_i y[i] pi^*C_i`` on P(bundle)."""

    y0: Fraction
    y: Vector
    bundle: BundleModel

    def __post_init__(self):
        object.__setattr__(self, "y0", to_fraction(self.y0))
        object.__setattr__(self, "y", to_vector(self.y))
        n = len(self.bundle.surface.curves)
        if len(self.y) != n:
            raise NefConeError(f"{len(self.y)} pullback coefficients, surface has {n} curve generators")

    @property
    def coords(self) -> Vector:
        return (self.y0,) + self.y

    @classmethod
    def from_coords(cls, coords: Sequence, bundle: BundleModel) -> "DivisorClass":
        c = to_vector(coords)
        return cls(c[0], c[1:], bundle)

    @classmethod
    def xi(cls, bundle: BundleModel) -> "DivisorClass":
        n = len(bundle.surface.curves)
        return cls(1, (0,) * n, bundle)

    @classmethod
    def pullback_curve(cls, bundle: BundleModel, index: int, coeff=1) -> "DivisorClass":
        """``coeff * pi^*C_index`` (0-based index into the curve generators)."""
        n = len(bundle.surface.curves)
        return cls(0, tuple(coeff if i == index else 0 for i in range(n)), bundle)


@dataclass(frozen=True)
class CycleClass:
    """``a xi^(r-2)F + xi^(r-1) pi^*beta``."""

    a: Fraction
    beta: NSClass
    bundle: BundleModel
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "a", to_fraction(self.a))
        if self.beta.surface.id != self.bundle.surface.id:
            raise NefConeError("cycle and bundle live over different surfaces")


def fibre_class(bundle: BundleModel) -> CycleClass:
    """``xi^(r-2)F``."""
    return CycleClass(1, bundle.surface.zero(), bundle, "xi^(r-2)F")


def functional(Z: CycleClass) -> Vector:
    """Coefficient vector ``v`` with ``pair(D, Z) == <v, D.coords>``."""
    E = Z.bundle
    head = Z.a + deg_restriction(E, Z.beta)
    return (head,) + tuple(intersect(C, Z.beta) for C in E.surface.generator_classes)


def pair(D: DivisorClass, Z: CycleClass) -> Fraction:
    if D.bundle != Z.bundle:
        raise NefConeError("divisor and cycle live on different projective bundles")
    E = D.bundle
    total = D.y0 * Z.a + D.y0 * deg_restriction(E, Z.beta)
    for yi, C in zip(D.y, E.surface.generator_classes):
        total += yi * intersect(C, Z.beta)
    return total


@dataclass(frozen=True)
class NefConeResult:
    """Nef cone of P(E) together with the dual curve-cone generators.

    ``raw`` keeps every constructed inequality; ``cone`` is ``raw`` or its
    minimal form depending on how the result was requested.  ``redundant``
    flags the raw rows implied by the others.
    """

    cone: ConeH
    raw: ConeH
    redundant: tuple[bool, ...]
    generators: ConeV
    cycles: tuple[CycleClass, ...]
    provenance: str
    bundle: BundleModel
    basis_labels: tuple[str, ...]
    minimized: bool = False
    nef_rays: Optional[ConeV] = None

    def nef_generators(self) -> ConeV:
        return self.nef_rays if self.nef_rays is not None else extremal_rays(self.cone)


def _basis_labels(X: SurfaceModel, curve_labels: Sequence[str]) -> tuple[str, ...]:
    return ("xi",) + tuple(f"pi*({c})" for c in curve_labels)


def _finish(
    X: SurfaceModel,
    E: BundleModel,
    rows: list[Halfspace],
    cycles: list[CycleClass],
    provenance: str,
    minimize: bool,
    names: Optional[tuple[str, ...]] = None,
    basis: Optional[tuple[str, ...]] = None,
    nef_rays: Optional[ConeV] = None,
) -> NefConeResult:
    n = len(rows[0].normal) - 1
    names = names or coordinate_names(n)
    raw = ConeH(n + 1, tuple(rows), names)
    flags = redundancy_flags(raw)
    gens = ConeV(n + 1, tuple(Ray(functional(Z), Z.label) for Z in cycles if any(functional(Z))), names)
    return NefConeResult(
        cone=remove_redundant(raw) if minimize else raw,
        raw=raw,
        redundant=flags,
        generators=gens,
        cycles=tuple(cycles),
        provenance=provenance,
        bundle=E,
        basis_labels=basis or _basis_labels(X, X.generator_labels),
        minimized=minimize,
        nef_rays=nef_rays,
    )


def _check_surface(X: SurfaceModel, E: BundleModel) -> None:
    if E.surface.id != X.id:
        raise PreconditionError(f"bundle lives on {E.surface.id}, not on {X.id}")


def nef_cone_semistable(X: SurfaceModel, E: BundleModel, minimize: bool = False) -> NefConeResult:
    """Nef cone for E semistable with vanishing discriminant.

    Rows: ``y0 >= 0`` and ``y0 mu(E|C_j) + sum_i y_i C_i.C_j >= 0`` for
    each curve generator ``C_j``.
    """
    _check_surface(X, E)
    if E.kind != bm.SEMISTABLE_DELTA0:
        raise PreconditionError(
            f"bundle kind is {E.kind!r}; the semistable construction needs a declared semistable bundle with Δ = 0"
        )
    delta = discriminant(E)
    if delta != 0:
        raise NefConeError(f"Δ(E) = {delta} ≠ 0: semistable construction inapplicable")
    r = E.rank
    curves = X.generator_classes
    labels = X.generator_labels
    rows = [Halfspace((1,) + (0,) * len(curves), "xi^(r-2)F")]
    cycles = [fibre_class(E)]
    for Cj, label in zip(curves, labels):
        normal = (slope_restriction(E, Cj),) + tuple(intersect(Ci, Cj) for Ci in curves)
        rows.append(Halfspace(normal, label))
        a = -Fraction(r - 1, r) * deg_restriction(E, Cj)
        cycles.append(CycleClass(a, Cj, E, label))
    return _finish(X, E, rows, cycles, SEMISTABLE, minimize)


def nef_cone_decomposable(X: SurfaceModel, E: BundleModel, minimize: bool = False) -> NefConeResult:
    """Nef cone for a completely decomposable E = L_1 + ... + L_r.

    Rows: ``y0 >= 0``, one row per curve generator using ``mu_min``, and a
    last row for ``C' = C_1 + ... + C_n`` with

        l_C' = sum_i deg(E|C_i) - min_j sum_i C_i.L_j.
    """
    _check_surface(X, E)
    if E.kind != bm.DECOMPOSABLE:
        raise PreconditionError(f"bundle kind is {E.kind!r}; expected a completely decomposable bundle")
    curves = X.generator_classes
    labels = X.generator_labels
    rows = [Halfspace((1,) + (0,) * len(curves), "xi^(r-2)F")]
    cycles = [fibre_class(E)]
    for Cj, label in zip(curves, labels):
        mu = mu_min_restriction(E, Cj)
        rows.append(Halfspace((mu,) + tuple(intersect(Ci, Cj) for Ci in curves), label))
        l_c = deg_restriction(E, Cj) - mu
        cycles.append(CycleClass(-l_c, Cj, E, label))

    c_prime = sum(curves[1:], curves[0])
    l_prime = sum(deg_restriction(E, C) for C in curves) - min(
        sum(intersect(C, L) for C in curves) for L in E.summands
    )
    head = deg_restriction(E, c_prime) - l_prime
    rows.append(Halfspace((head,) + tuple(intersect(Ci, c_prime) for Ci in curves), "C'"))
    cycles.append(CycleClass(-l_prime, c_prime, E, "C'"))
    return _finish(X, E, rows, cycles, DECOMPOSABLE, minimize)


def nef_cone_picard1(X: SurfaceModel, E: BundleModel, m: int = 1, minimize: bool = False) -> NefConeResult:
    """Nef cone over a Picard-number-one surface, in coordinates over ``{xi, pi^*C_0}``.

    ``L_X`` is the ample generator of N^1(X), ``E = sum a_i L_X`` with
    ``a_1 <= ... <= a_r`` and ``C_0`` an irreducible curve in ``|m L_X|``
    (``m`` is supplied by the caller).  The cone is spanned by
    ``xi - (a_1/m) pi^*C_0`` and ``pi^*C_0``.
    """
    _check_surface(X, E)
    if X.rank != 1:
        raise PreconditionError(f"{X.id} has Picard number {X.rank}, not 1")
    if E.kind != bm.DECOMPOSABLE:
        raise PreconditionError(f"bundle kind is {E.kind!r}; expected a completely decomposable bundle")
    m = int(m)
    if m < 1:
        raise PreconditionError("m must be a positive integer")
    a = [L.coords[0] for L in E.summands]
    if len(a) != E.rank:
        raise PreconditionError("number of summands does not match the rank")
    if a != sorted(a):
        raise PreconditionError(f"summand degrees {a} are not sorted increasingly")
    L_X = X.basis_class(X.ns_basis[0])
    self_int = intersect(L_X, L_X)
    if self_int <= 0:
        raise PreconditionError("the generator of N^1 must be ample")
    C0 = L_X * m
    a1 = a[0]

    names = coordinate_names(1)
    rows = [
        Halfspace((1, 0), "xi^(r-2)F"),
        Halfspace((mu_min_restriction(E, C0), intersect(C0, C0)), "C0"),
    ]
    cycles = [fibre_class(E), CycleClass(-(deg_restriction(E, C0) - mu_min_restriction(E, C0)), C0, E, "C0")]
    nef = ConeV(2, (Ray((1, -a1 / m), "xi - (a1/m) pi*C0"), Ray((0, 1), "pi*C0")), names)

    raw = ConeH(2, tuple(rows), names)
    gens = ConeV(2, tuple(Ray(functional(Z), Z.label) for Z in cycles), names)
    return NefConeResult(
        cone=remove_redundant(raw) if minimize else raw,
        raw=raw,
        redundant=redundancy_flags(raw),
        generators=gens,
        cycles=tuple(cycles),
        provenance=PICARD_ONE,
        bundle=E,
        basis_labels=("xi", f"pi*({m}{X.ns_basis[0]})" if m != 1 else f"pi*({X.ns_basis[0]})"),
        minimized=minimize,
        nef_rays=nef,
    )


def nef_cone(X: SurfaceModel, E: BundleModel, minimize: bool = False) -> NefConeResult:
    """Dispatch on the bundle kind."""
    if E.kind == bm.SEMISTABLE_DELTA0:
        return nef_cone_semistable(X, E, minimize)
    if E.kind == bm.DECOMPOSABLE:
        return nef_cone_decomposable(X, E, minimize)
    raise PreconditionError(
        "no nef cone construction applies to a formal bundle (declare it decomposable or semistable with Δ = 0)"
    )
