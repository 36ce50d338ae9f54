"""Seshadri constants of ample bundles at catalogued points.

``eps(V, x) = sup{lam > 0 : xi~ - lam E~ nef}`` on P(rho_x^* V) over the
blow-up at ``x``.  Two routes are offered:

* closed forms on P^2 (decomposable V) and on ruled surfaces at points of
  sigma (semistable V with vanishing discriminant), with interval bounds
  for the other bundle kinds;
* :func:`seshadri_sup_lambda`, a direct ratio test of ``xi~ - lam E~``
  against the nef inequalities on the blow-up.

:func:`crosscheck` runs both and compares them exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import bundles as bm
from .bundles import BundleModel, deg_restriction, mu_min_restriction, pullback_blowup, slope_restriction
from .cones import ConeH, Halfspace
from .nefcone import DivisorClass, NefConeResult, nef_cone
from .rational import Vector, to_fraction, to_vector
from .surfaces import (
    SITE_ON_SIGMA,
    SITE_POINT,
    ProjectivePlane,
    Ruled,
    SurfaceModel,
    UncataloguedBlowUp,
    blow_up,
    intersect,
)

CLOSED_FORM = "closed_form"
CONE_LP = "cone_lp"


class SeshadriError(ValueError):
    pass


class UnboundedLambda(SeshadriError):
    pass


@dataclass(frozen=True)
class SeshadriResult:
    """Either an exact value or rational bounds ``lo <= eps <= hi``."""

    method: str
    exact: Optional[Fraction] = None
    bounds: Optional[tuple[Fraction, Fraction]] = None
    witness: tuple[Halfspace, ...] = ()
    note: str = ""

    def __post_init__(self):
        if (self.exact is None) == (self.bounds is None):
            raise SeshadriError("a result is either exact or a pair of bounds")
        if self.exact is not None:
            object.__setattr__(self, "exact", to_fraction(self.exact))
            if self.exact < 0:
                raise SeshadriError(f"negative Seshadri constant {self.exact}")
        else:
            lo, hi = map(to_fraction, self.bounds)
            if not 0 <= lo <= hi:
                raise SeshadriError(f"invalid bounds [{lo}, {hi}]")
            object.__setattr__(self, "bounds", (lo, hi))

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def contains(self, value) -> bool:
        q = to_fraction(value)
        if self.is_exact:
            return q == self.exact
        lo, hi = self.bounds
        return lo <= q <= hi


def _coords(d: Union[DivisorClass, Sequence], dim: int) -> Vector:
    v = d.coords if isinstance(d, DivisorClass) else to_vector(d)
    if len(v) != dim:
        raise SeshadriError(f"divisor has {len(v)} coordinates, the cone has {dim}")
    return v


def seshadri_sup_lambda(
    cone: Union[NefConeResult, ConeH],
    xi: Union[DivisorClass, Sequence],
    Etilde: Union[DivisorClass, Sequence],
) -> SeshadriResult:
    """``sup{lam >= 0 : xi - lam Etilde in cone}`` by a minimum-ratio test.

    Each row ``<h, xi> - lam <h, Etilde> >= 0`` bounds lam from above when
    ``<h, Etilde> > 0``; the answer is the smallest such ratio and the rows
    attaining it are returned as the witness.  If ``xi`` itself violates a
    row the value is 0 and the violated rows are the witness.
    """
    if isinstance(cone, NefConeResult):
        for d in (xi, Etilde):
            if isinstance(d, DivisorClass) and d.bundle != cone.bundle:
                raise SeshadriError("divisor belongs to a different projective bundle")
        cone = cone.cone
    x = _coords(xi, cone.dim)
    e = _coords(Etilde, cone.dim)

    violated = tuple(h for h in cone.halfspaces if h.evaluate(x) < 0)
    if violated:
        return SeshadriResult(CONE_LP, exact=Fraction(0), witness=violated, note="xi is not nef")

    best: Optional[Fraction] = None
    binding: list[Halfspace] = []
    for h in cone.halfspaces:
        slope = h.evaluate(e)
        if slope > 0:
            ratio = h.evaluate(x) / slope
            if best is None or ratio < best:
                best, binding = ratio, [h]
            elif ratio == best:
                binding.append(h)
    if best is None:
        raise UnboundedLambda(
            "no inequality bounds lambda from above: xi - lambda*Etilde stays nef for all lambda "
            "(the bundle is not ample or Etilde is degenerate)"
        )
    return SeshadriResult(CONE_LP, exact=best, witness=tuple(binding))


def _require_ample(V: BundleModel) -> None:
    for label, C in V.surface.ne_generators:
        if deg_restriction(V, C) <= 0:
            raise SeshadriError(f"V is not ample: deg(V|{label}) = {deg_restriction(V, C)} <= 0")


def seshadri_p2(V: BundleModel, point: str = SITE_POINT, require_ample: bool = True) -> SeshadriResult:
    """Seshadri constant at a point of P^2.

    Decomposable: the smallest summand degree.  Otherwise the bounds
    ``0 <= eps <= mu_min((phi^*V)|_{H-E})``.  ``require_ample=False`` skips
    the positivity check and evaluates the formulas as they stand.
    """
    if not isinstance(V.surface.kind, ProjectivePlane):
        raise SeshadriError(f"expected a bundle on P2, got one on {V.surface.id}")
    if point != SITE_POINT:
        raise UncataloguedBlowUp(f"unknown point type {point!r} on P2")
    if require_ample:
        _require_ample(V)
    H = V.surface.basis_class("H")
    if V.kind == bm.DECOMPOSABLE:
        degs = [intersect(L, H) for L in V.summands]
        value = min(degs)
        i = degs.index(value)
        return SeshadriResult(CLOSED_FORM, exact=value, note=f"min summand degree, attained by L{i + 1}")
    X = blow_up(V.surface, SITE_POINT)
    E = pullback_blowup(V, X)
    hi = mu_min_restriction(E, X.cls([1, -1]))
    if hi < 0:
        raise SeshadriError(f"mu_min on H-E is {hi} < 0; V cannot be ample")
    return SeshadriResult(CLOSED_FORM, bounds=(Fraction(0), hi), note="upper bound mu_min over H-E")


def seshadri_ruled(V: BundleModel, point: str = SITE_ON_SIGMA, require_ample: bool = True) -> SeshadriResult:
    """Seshadri constant at a point of the normalized section sigma.

    Semistable with vanishing discriminant: ``min(mu(V|sigma), mu(V|f))``.
    Otherwise bounds from ``mu_min`` of the pullback over ``zeta - E`` and
    ``f - E`` on the blow-up.
    """
    if not isinstance(V.surface.kind, Ruled):
        raise SeshadriError(f"expected a bundle on a ruled surface, got one on {V.surface.id}")
    if point != SITE_ON_SIGMA:
        raise UncataloguedBlowUp(
            f"blow-up site {point!r} is uncatalogued: only points of the section sigma are supported"
        )
    if require_ample:
        _require_ample(V)
    Y = V.surface
    if V.kind == bm.SEMISTABLE_DELTA0:
        on_sigma = slope_restriction(V, Y.basis_class("zeta"))
        on_f = slope_restriction(V, Y.basis_class("f"))
        which = "sigma" if on_sigma <= on_f else "f"
        return SeshadriResult(CLOSED_FORM, exact=min(on_sigma, on_f), note=f"min slope, attained on {which}")
    X = blow_up(Y, SITE_ON_SIGMA)
    E = pullback_blowup(V, X)
    hi = min(mu_min_restriction(E, X.cls([1, 0, -1])), mu_min_restriction(E, X.cls([0, 1, -1])))
    if hi < 0:
        raise SeshadriError(f"upper bound {hi} < 0; V cannot be ample")
    return SeshadriResult(CLOSED_FORM, bounds=(Fraction(0), hi), note="upper bound mu_min over zeta-E and f-E")


def seshadri(V: BundleModel, point: Optional[str] = None, require_ample: bool = True) -> SeshadriResult:
    kind = V.surface.kind
    if isinstance(kind, ProjectivePlane):
        return seshadri_p2(V, point or SITE_POINT, require_ample)
    if isinstance(kind, Ruled):
        return seshadri_ruled(V, point or SITE_ON_SIGMA, require_ample)
    raise SeshadriError(f"no Seshadri computation for bundles on {V.surface.id}")


@dataclass(frozen=True)
class CrosscheckReport:
    closed_form: SeshadriResult
    cone_lp: SeshadriResult
    nef: NefConeResult
    agree: bool


def cone_route(V: BundleModel, point: Optional[str] = None) -> tuple[SeshadriResult, NefConeResult]:
    """Blow up, pull back, build the nef cone and optimize lambda."""
    kind = V.surface.kind
    if isinstance(kind, ProjectivePlane):
        site = point or SITE_POINT
    elif isinstance(kind, Ruled):
        site = point or SITE_ON_SIGMA
    else:
        raise SeshadriError(f"no Seshadri computation for bundles on {V.surface.id}")
    X: SurfaceModel = blow_up(V.surface, site)
    E = pullback_blowup(V, X)
    result = nef_cone(X, E)
    exceptional = X.generator_labels.index("E")
    lam = seshadri_sup_lambda(result, DivisorClass.xi(E), DivisorClass.pullback_curve(E, exceptional))
    return lam, result


def crosscheck(V: BundleModel, point: Optional[str] = None) -> CrosscheckReport:
    """Closed form against the cone route; ampleness is not required here."""
    closed = seshadri(V, point, require_ample=False)
    lam, nef = cone_route(V, point)
    return CrosscheckReport(closed, lam, nef, closed.contains(lam.exact))
