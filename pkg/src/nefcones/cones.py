"""Exact polyhedral cones: halfspace/generator conversion, duality, redundancy.

A cone is stored either by generators (:class:`ConeV`) or by inward normals
(:class:`ConeH`, meaning ``{x : <h, x> >= 0}`` for every normal ``h``).
Conversions run the double description method on primitive integer vectors,
so nothing here ever touches floating point.

The four conversions, for a generator set ``V`` and a halfspace system ``H``:

* :func:`rays_of_dual` -- generators of the cone cut out by ``H``.
* :func:`halfspaces_of_rays` -- facet normals of ``cone(V)``.
* :func:`dual_of_rays` -- irredundant halfspaces of the dual cone
  ``{y : <y, r> >= 0 for r in V}``.
* :func:`extremal_rays` -- like :func:`rays_of_dual` but insists on a
  pointed cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .lp import nonnegative_combination
from .rational import Vector, dot, is_zero, primitive, rref, to_vector

FULL_SPACE_LABEL = "full space (dual of an empty ray set)"


class ConeError(ValueError):
    """Base class for cone-engine failures."""


class ShapeError(ConeError):
    """Vectors or cones living in ambient spaces of different shape."""


class NotPointedError(ConeError):
    """The cone contains a line; ``witness`` spans part of it."""

    def __init__(self, message: str, witness: Vector):
        super().__init__(message)
        self.witness = witness


def _key(coords: Sequence[Fraction]) -> tuple[int, ...]:
    return primitive(coords)


@dataclass(frozen=True)
class Ray:
    coords: Vector
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "coords", to_vector(self.coords))
        if is_zero(self.coords):
            raise ConeError("a ray cannot be the zero vector")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def canonical(self) -> "Ray":
        """Primitive integer representative (same direction, same label)."""
        return Ray(_key(self.coords), self.label)

    def key(self) -> tuple[int, ...]:
        return _key(self.coords)


@dataclass(frozen=True)
class Halfspace:
    """The constraint ``<normal, y> >= 0``."""

    normal: Vector
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "normal", to_vector(self.normal))
        if is_zero(self.normal):
            raise ConeError("a halfspace normal cannot be the zero vector")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def canonical(self) -> "Halfspace":
        return Halfspace(_key(self.normal), self.label)

    def key(self) -> tuple[int, ...]:
        return _key(self.normal)

    def evaluate(self, point: Sequence) -> Fraction:
        return dot(self.normal, to_vector(point))


def _default_names(dim: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(dim))


def _as_ray(r) -> Ray:
    return r if isinstance(r, Ray) else Ray(r)


def _as_halfspace(h) -> Halfspace:
    return h if isinstance(h, Halfspace) else Halfspace(h)


@dataclass(frozen=True)
class ConeV:
    """Cone generated by ``rays``; duplicate directions are dropped on entry."""

    dim: int
    rays: tuple[Ray, ...] = ()
    coord_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeError("cone dimension must be positive")
        seen = set()
        rays = []
        for r in map(_as_ray, self.rays):
            if r.dim != self.dim:
                raise ShapeError(f"ray {r.coords} has length {r.dim}, expected {self.dim}")
            if r.key() not in seen:
                seen.add(r.key())
                rays.append(r)
        object.__setattr__(self, "rays", tuple(rays))
        _set_names(self)

    def keys(self) -> set[tuple[int, ...]]:
        return {r.key() for r in self.rays}


@dataclass(frozen=True)
class ConeH:
    """Cone ``{x : <h, x> >= 0 for every halfspace h}``.

    Rows are kept exactly as given, duplicates included, so that a
    constructed inequality list can be reported verbatim;
    :func:`remove_redundant` produces the minimal form.
    """

    dim: int
    halfspaces: tuple[Halfspace, ...] = ()
    coord_names: tuple[str, ...] = ()
    label: Optional[str] = None

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeError("cone dimension must be positive")
        hs = tuple(map(_as_halfspace, self.halfspaces))
        for h in hs:
            if h.dim != self.dim:
                raise ShapeError(f"halfspace {h.normal} has length {h.dim}, expected {self.dim}")
        object.__setattr__(self, "halfspaces", hs)
        _set_names(self)

    @property
    def normals(self) -> list[Vector]:
        return [h.normal for h in self.halfspaces]

    def keys(self) -> set[tuple[int, ...]]:
        return {h.key() for h in self.halfspaces}


def _set_names(cone) -> None:
    names = tuple(cone.coord_names) or _default_names(cone.dim)
    if len(names) != cone.dim:
        raise ShapeError(f"{len(names)} coordinate names for a {cone.dim}-dimensional cone")
    object.__setattr__(cone, "coord_names", names)


def _check_same_space(a, b) -> None:
    if a.dim != b.dim:
        raise ShapeError(f"dimension mismatch: {a.dim} != {b.dim}")
    if a.coord_names != b.coord_names:
        raise ShapeError(f"coordinate mismatch: {a.coord_names} != {b.coord_names}")


# ---------------------------------------------------------------------------
# double description kernel


def _idot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _iprim(v: Sequence[int]) -> tuple[int, ...]:
    return primitive([Fraction(x) for x in v])


def double_description(
    constraints: Iterable[Sequence], dim: int
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Generators of ``{x : A x >= 0}``.

    Returns ``(rays, lineality)``: a basis of the lineality space and the
    extreme rays of the pointed part.  Constraints are inserted one at a
    time; the lineality space is split first, and otherwise new rays come
    from pairs of adjacent rays on opposite sides, adjacency being decided
    by the combinatorial zero-set test.
    """
    rows = []
    for a in constraints:
        a = to_vector(a)
        if len(a) != dim:
            raise ShapeError(f"constraint {a} has length {len(a)}, expected {dim}")
        if not is_zero(a):
            rows.append(_key(a))

    lin: list[tuple[int, ...]] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[tuple[tuple[int, ...], frozenset]] = []
    done: set[int] = set()

    for k, a in enumerate(rows):
        vals = [_idot(a, l) for l in lin]
        pick = next((i for i, v in enumerate(vals) if v != 0), None)
        if pick is not None:
            l0, s = lin[pick], vals[pick]
            if s < 0:
                l0, s = tuple(-x for x in l0), -s
            lin = [
                _iprim([s * x - v * y for x, y in zip(l, l0)])
                for i, (l, v) in enumerate(zip(lin, vals))
                if i != pick
            ]
            moved = []
            for r, z in rays:
                ar = _idot(a, r)
                moved.append((_iprim([s * x - ar * y for x, y in zip(r, l0)]), z | {k}))
            rays = moved + [(l0, frozenset(done))]
        else:
            pos, zero, neg = [], [], []
            for r, z in rays:
                v = _idot(a, r)
                (pos if v > 0 else neg if v < 0 else zero).append((r, z, v))
            new = [(r, z) for r, z, _ in pos] + [(r, z | {k}) for r, z, _ in zero]
            for p, zp, vp in pos:
                for n, zn, vn in neg:
                    common = zp & zn
                    if any(
                        common <= zr for r, zr in rays if r is not p and r is not n
                    ):
                        continue
                    combo = [vp * x - vn * y for x, y in zip(n, p)]
                    new.append((_iprim(combo), common | {k}))
            rays = new
        done.add(k)

    return [r for r, _ in rays], lin


def _canonical_generators(
    rays: list[tuple[int, ...]], lin: list[tuple[int, ...]]
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Normal form: RREF lineality basis, rays projected orthogonally to it."""
    if not lin:
        return sorted(set(rays)), []
    basis, _ = rref([[Fraction(x) for x in l] for l in lin])
    lin_out = [_iprim(b) for b in basis]
    gram = [[dot(u, v) for v in basis] for u in basis]
    out = set()
    for r in rays:
        rv = [Fraction(x) for x in r]
        rhs = [dot(u, rv) for u in basis]
        coeffs = _solve(gram, rhs)
        proj = [x - sum((c * u[i] for c, u in zip(coeffs, basis)), Fraction(0)) for i, x in enumerate(rv)]
        if not is_zero(proj):
            out.add(_key(proj))
    return sorted(out), lin_out


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    aug = [row + [rhs] for row, rhs in zip(a, b)]
    red, piv = rref(aug)
    x = [Fraction(0)] * len(a)
    for row, c in zip(red, piv):
        x[c] = row[-1]
    return x


def _generators(normals: Iterable[Sequence], dim: int):
    rays, lin = double_description(normals, dim)
    return _canonical_generators(rays, lin)


def _with_lines(rays, lin) -> list[tuple[int, ...]]:
    out = list(rays)
    for l in lin:
        out.append(l)
        out.append(tuple(-x for x in l))
    return out


# ---------------------------------------------------------------------------
# public operations


def rays_of_dual(cone: ConeH) -> ConeV:
    """Generators of ``{x : <h, x> >= 0 for all h}``.

    Lines in the cone appear as ``+v, -v`` pairs.
    """
    rays, lin = _generators(cone.normals, cone.dim)
    return ConeV(cone.dim, tuple(Ray(r) for r in _with_lines(rays, lin)), cone.coord_names)


def halfspaces_of_rays(cone: ConeV) -> ConeH:
    """Minimal halfspace description of the cone generated by ``cone.rays``."""
    rays, lin = _generators([r.coords for r in cone.rays], cone.dim)
    return ConeH(cone.dim, tuple(Halfspace(h) for h in _with_lines(rays, lin)), cone.coord_names)


def dual_of_rays(cone: ConeV) -> ConeH:
    """Irredundant halfspaces of the dual cone ``{y : <y, r> >= 0 for all r}``.

    The surviving normals are exactly the extreme rays of ``cone``.  When
    ``cone`` is pointed they are returned as the canonical forms of the
    input rays (input order, labels kept); otherwise lines of ``cone`` turn
    into ``+v, -v`` pairs of normals.
    """
    if not cone.rays:
        return ConeH(cone.dim, (), cone.coord_names, label=FULL_SPACE_LABEL)
    dual_rays, dual_lin = _generators([r.coords for r in cone.rays], cone.dim)
    ext, lin = _generators(_with_lines(dual_rays, dual_lin), cone.dim)
    if lin:
        hs = tuple(Halfspace(h) for h in _with_lines(ext, lin))
    else:
        keep = set(ext)
        hs = tuple(Halfspace(r.key(), r.label) for r in cone.rays if r.key() in keep)
    return ConeH(cone.dim, hs, cone.coord_names)


def is_member(cone: ConeH, point: Sequence) -> bool:
    p = to_vector(point)
    if len(p) != cone.dim:
        raise ShapeError(f"point of length {len(p)} in a {cone.dim}-dimensional cone")
    return all(h.evaluate(p) >= 0 for h in cone.halfspaces)


def redundancy_certificates(cone: ConeH) -> list[Optional[dict[int, Fraction]]]:
    """For each row, None if it is kept, else the combination of other rows implying it.

    Rows are scanned in order; a row is dropped when it is a nonnegative
    combination of the rows still present (kept earlier rows plus all later
    rows).  The certificate maps row indices to coefficients.
    """
    hs = cone.halfspaces
    alive = [True] * len(hs)
    certs: list[Optional[dict[int, Fraction]]] = [None] * len(hs)
    for i, h in enumerate(hs):
        others = [j for j in range(len(hs)) if j != i and alive[j]]
        coeffs = nonnegative_combination([hs[j].normal for j in others], h.normal)
        if coeffs is not None:
            alive[i] = False
            certs[i] = {j: c for j, c in zip(others, coeffs) if c != 0}
    return certs


def redundancy_flags(cone: ConeH) -> tuple[bool, ...]:
    return tuple(c is not None for c in redundancy_certificates(cone))


def remove_redundant(cone: ConeH) -> ConeH:
    """Drop every row implied by the remaining ones; survivors keep their order."""
    flags = redundancy_flags(cone)
    kept = tuple(h for h, red in zip(cone.halfspaces, flags) if not red)
    return ConeH(cone.dim, kept, cone.coord_names, cone.label)


def cones_equal(a: ConeH, b: ConeH) -> bool:
    """True iff both systems cut out the same set."""
    _check_same_space(a, b)
    for first, second in ((a, b), (b, a)):
        for r in rays_of_dual(first).rays:
            if not is_member(second, r.coords):
                return False
    return True


def extremal_rays(cone: ConeH) -> ConeV:
    """Canonical extreme rays of a pointed cone, sorted lexicographically.

    Raises NotPointedError carrying a direction of a line in the cone.
    """
    rays, lin = _generators(cone.normals, cone.dim)
    if lin:
        raise NotPointedError(
            f"cone is not pointed: it contains the line spanned by {lin[0]}",
            tuple(Fraction(x) for x in lin[0]),
        )
    return ConeV(cone.dim, tuple(Ray(r) for r in rays), cone.coord_names)


def contains_ray(cone: ConeV, point: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Coefficients writing ``point`` as a nonnegative combination of the rays, or None."""
    return nonnegative_combination([r.coords for r in cone.rays], point)
