"""Catalogue of surfaces with a polyhedral cone of curves.

Each :class:`SurfaceModel` fixes a Néron–Severi basis, its intersection
form and the curve classes generating the closed cone of curves.  The
generators are catalogue data, not computed: only the projective plane,
ruled surfaces over a curve with normalized ``W`` (``mu_min(W) = deg W``)
and single blow-ups at the catalogued sites are available.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .rational import Vector, to_fraction, to_vector

SITE_POINT = "point"
SITE_ON_SIGMA = "on_sigma"
SITES = (SITE_POINT, SITE_ON_SIGMA)


class SurfaceError(ValueError):
    pass


class UncataloguedBlowUp(SurfaceError):
    pass


@dataclass(frozen=True)
class ProjectivePlane:
    pass


@dataclass(frozen=True)
class Ruled:
    genus: int
    degW: int


@dataclass(frozen=True)
class BlowUp:
    parent: "SurfaceModel"
    site: str


SurfaceKind = Union[ProjectivePlane, Ruled, BlowUp]


@dataclass(frozen=True)
class IntersectionForm:
    matrix: tuple[Vector, ...]

    def __post_init__(self):
        m = tuple(to_vector(row) for row in self.matrix)
        n = len(m)
        if any(len(row) != n for row in m):
            raise SurfaceError("intersection form must be square")
        if any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
            raise SurfaceError("intersection form must be symmetric")
        object.__setattr__(self, "matrix", m)

    @property
    def size(self) -> int:
        return len(self.matrix)

    def __call__(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
        return sum(
            (a[i] * self.matrix[i][j] * b[j] for i in range(self.size) for j in range(self.size)),
            Fraction(0),
        )

    def signature(self) -> tuple[int, int]:
        """(positive, negative) eigenvalue counts, exactly.

        The characteristic polynomial of a symmetric matrix has only real
        roots, so Descartes' rule of signs counts them without error.
        """
        coeffs = _charpoly(self.matrix)
        n = len(coeffs) - 1
        zero = 0
        while zero < n and coeffs[n - zero] == 0:
            zero += 1
        trimmed = coeffs[: n + 1 - zero]
        pos = _sign_changes(trimmed)
        neg = _sign_changes([c * (-1) ** (len(trimmed) - 1 - k) for k, c in enumerate(trimmed)])
        return pos, neg


def _charpoly(m: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Coefficients of det(tI - M), leading first (Faddeev–LeVerrier)."""
    n = len(m)
    coeffs = [Fraction(1)]
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = M (M_{k-1} + c_{k-1} I)
        prev = [[mk[i][j] + coeffs[-1] * ident[i][j] for j in range(n)] for i in range(n)]
        mk = [[sum((m[i][t] * prev[t][j] for t in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
        trace = sum((mk[i][i] for i in range(n)), Fraction(0))
        coeffs.append(-trace / k)
    return coeffs


def _sign_changes(coeffs: Sequence[Fraction]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@dataclass(frozen=True)
class SurfaceModel:
    id: str
    kind: SurfaceKind
    ns_basis: tuple[str, ...]
    form: IntersectionForm
    # (label, coordinates in ns_basis) for each generator of the cone of curves
    curves: tuple[tuple[str, Vector], ...]

    def __post_init__(self):
        if len(self.ns_basis) != self.form.size:
            raise SurfaceError("basis labels do not match the intersection form")
        if not self.curves:
            raise SurfaceError("at least one curve generator is required")
        for label, v in self.curves:
            if len(v) != self.rank or all(x == 0 for x in v):
                raise SurfaceError(f"bad curve generator {label}: {v}")

    @property
    def rank(self) -> int:
        return self.form.size

    def cls(self, coords: Sequence) -> "NSClass":
        return NSClass(to_vector(coords), self)

    def basis_class(self, label: str) -> "NSClass":
        i = self.ns_basis.index(label)
        return self.cls([int(i == j) for j in range(self.rank)])

    def zero(self) -> "NSClass":
        return self.cls([0] * self.rank)

    @property
    def ne_generators(self) -> tuple[tuple[str, "NSClass"], ...]:
        return tuple((label, self.cls(v)) for label, v in self.curves)

    @property
    def generator_classes(self) -> tuple["NSClass", ...]:
        return tuple(self.cls(v) for _, v in self.curves)

    @property
    def generator_labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.curves)

    def intersect(self, a: "NSClass", b: "NSClass") -> Fraction:
        return intersect(a, b)

    def pullback(self, parent_class: "NSClass") -> "NSClass":
        """Pull a class back from the parent of a blow-up (exceptional coefficient 0)."""
        if not isinstance(self.kind, BlowUp):
            raise SurfaceError(f"{self.id} is not a blow-up")
        if parent_class.surface.id != self.kind.parent.id:
            raise SurfaceError(f"class lives on {parent_class.surface.id}, not on {self.kind.parent.id}")
        return self.cls(parent_class.coords + (Fraction(0),))

    @property
    def exceptional(self) -> "NSClass":
        if not isinstance(self.kind, BlowUp):
            raise SurfaceError(f"{self.id} is not a blow-up")
        return self.basis_class("E")


@dataclass(frozen=True, eq=False)
class NSClass:
    """A real Néron–Severi class, stored by coordinates in the surface basis."""

    coords: Vector
    surface: SurfaceModel

    def __post_init__(self):
        object.__setattr__(self, "coords", to_vector(self.coords))
        if len(self.coords) != self.surface.rank:
            raise SurfaceError(
                f"class {self.coords} has {len(self.coords)} coordinates; {self.surface.id} has rank {self.surface.rank}"
            )

    @property
    def surface_id(self) -> str:
        return self.surface.id

    def _same(self, other: "NSClass") -> None:
        if not isinstance(other, NSClass):
            raise TypeError(f"expected NSClass, got {type(other).__name__}")
        if other.surface.id != self.surface.id:
            raise SurfaceError(f"classes on different surfaces: {self.surface.id} vs {other.surface.id}")

    def __eq__(self, other):
        if not isinstance(other, NSClass):
            return NotImplemented
        return self.surface.id == other.surface.id and self.coords == other.coords

    def __hash__(self):
        return hash((self.surface.id, self.coords))

    def __add__(self, other: "NSClass") -> "NSClass":
        self._same(other)
        return NSClass(tuple(a + b for a, b in zip(self.coords, other.coords)), self.surface)

    def __sub__(self, other: "NSClass") -> "NSClass":
        self._same(other)
        return NSClass(tuple(a - b for a, b in zip(self.coords, other.coords)), self.surface)

    def __neg__(self) -> "NSClass":
        return NSClass(tuple(-a for a in self.coords), self.surface)

    def __mul__(self, scalar) -> "NSClass":
        q = to_fraction(scalar)
        return NSClass(tuple(q * a for a in self.coords), self.surface)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coords)
        return f"NSClass([{terms}] on {self.surface.id})"


def intersect(a: NSClass, b: NSClass) -> Fraction:
    """Intersection number ``a . b``."""
    a._same(b)
    return a.surface.form(a.coords, b.coords)


# ---------------------------------------------------------------------------
# catalogue


def projective_plane() -> SurfaceModel:
    return SurfaceModel(
        id="P2",
        kind=ProjectivePlane(),
        ns_basis=("H",),
        form=IntersectionForm(((1,),)),
        curves=(("H", to_vector([1])),),
    )


def ruled_surface(genus: int, degW: int) -> SurfaceModel:
    """Ruled surface P(W) over a genus-``genus`` curve.

    The caller asserts ``W`` is normalized with ``mu_min(W) = deg W``; only
    the numbers enter: ``zeta^2 = degW``, ``zeta.f = 1``, ``f^2 = 0``.
    """
    genus, degW = int(genus), int(degW)
    if genus < 0:
        raise SurfaceError("genus must be nonnegative")
    return SurfaceModel(
        id=f"Ruled(g={genus},degW={degW})",
        kind=Ruled(genus, degW),
        ns_basis=("zeta", "f"),
        form=IntersectionForm(((degW, 1), (1, 0))),
        curves=(("zeta", to_vector([1, 0])), ("f", to_vector([0, 1]))),
    )


def blow_up(parent: SurfaceModel, site: str = SITE_POINT) -> SurfaceModel:
    """One-point blow-up at a catalogued site.

    P^2 at any point: generators ``H - E, E``.  A ruled surface at a point of
    the normalized section sigma: generators ``f - E, zeta - E, E``.
    """
    kind = parent.kind
    if isinstance(kind, ProjectivePlane) and site == SITE_POINT:
        curves = (("H-E", (1, -1)), ("E", (0, 1)))
    elif isinstance(kind, Ruled) and site == SITE_ON_SIGMA:
        curves = (("f-E", (0, 1, -1)), ("zeta-E", (1, 0, -1)), ("E", (0, 0, 1)))
    else:
        raise UncataloguedBlowUp(
            f"cone of curves unknown for the blow-up of {parent.id} at site {site!r}"
        )
    n = parent.rank
    matrix = [list(row) + [Fraction(0)] for row in parent.form.matrix]
    matrix.append([Fraction(0)] * n + [Fraction(-1)])
    return SurfaceModel(
        id=f"Bl[{site}]({parent.id})",
        kind=BlowUp(parent, site),
        ns_basis=parent.ns_basis + ("E",),
        form=IntersectionForm(tuple(tuple(r) for r in matrix)),
        curves=tuple((label, to_vector(v)) for label, v in curves),
    )


def surface_from_descriptor(
    kind: str, genus: Optional[int] = None, degW: Optional[int] = None, site: Optional[str] = None
) -> SurfaceModel:
    """Build a catalogue surface from the flat descriptor used in problem files."""
    if kind == "p2":
        return projective_plane()
    if kind == "ruled":
        return ruled_surface(genus, degW)
    if kind == "blowup":
        if site == SITE_POINT:
            return blow_up(projective_plane(), SITE_POINT)
        if site == SITE_ON_SIGMA:
            return blow_up(ruled_surface(genus, degW), SITE_ON_SIGMA)
        raise UncataloguedBlowUp(f"unknown blow-up site {site!r}")
    raise SurfaceError(f"unknown surface kind {kind!r}")
