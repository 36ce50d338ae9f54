"""Command-line front end: problem files in, cone and Seshadri reports out.

Problem files are JSON::

    {
      "surface": {"kind": "ruled", "genus": 1, "degW": 0},
      "bundle": {"kind": "pullback_ruling", "rank": 2, "base_degree": 1},
      "query": "nefcone",
      "options": {"minimize": false, "format": "json"}
    }

Rationals are written as integers or ``"p/q"`` strings, never floats.
Exit status: 0 ok, 1 schema error, 2 computation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from . import bundles as bm
from .bundles import BundleModel, deg_restriction, discriminant, mu_min_restriction, slope_restriction
from .cones import ConeH, ConeError, Halfspace
from .nefcone import NefConeError, functional, nef_cone
from .rational import fmt, to_fraction
from .seshadri import SeshadriError, SeshadriResult, cone_route, seshadri
from .surfaces import SITE_ON_SIGMA, SITE_POINT, SurfaceError, SurfaceModel, surface_from_descriptor

QUERIES = ("nefcone", "negcone", "seshadri", "check")
FORMATS = ("text", "json")
SURFACE_KINDS = ("p2", "ruled", "blowup")
BUNDLE_KINDS = ("decomposable", "semistable_delta0", "pullback_ruling", "formal")
POINTS = (SITE_POINT, SITE_ON_SIGMA, "off_sigma")

EXIT_OK = 0
EXIT_SCHEMA = 1
EXIT_COMPUTE = 2


class SchemaError(ValueError):
    def __init__(self, errors: Sequence[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass(frozen=True)
class SurfaceSpec:
    kind: str
    genus: Optional[int] = None
    degW: Optional[int] = None
    site: Optional[str] = None


@dataclass(frozen=True)
class BundleSpec:
    kind: str
    rank: int
    summands: Optional[tuple[tuple[Fraction, ...], ...]] = None
    base_rank: Optional[int] = None
    base_degree: Optional[Fraction] = None
    c1: Optional[tuple[Fraction, ...]] = None
    c2: Optional[Fraction] = None
    twist: Optional[tuple[Fraction, ...]] = None


@dataclass(frozen=True)
class Options:
    minimize: bool = False
    format: str = "text"
    crosscheck: bool = False


@dataclass(frozen=True)
class ProblemSpec:
    surface: SurfaceSpec
    bundle: BundleSpec
    query: str
    options: Options = field(default_factory=Options)
    point: Optional[str] = None


# ---------------------------------------------------------------------------
# parsing


class _Collector:
    def __init__(self):
        self.errors: list[str] = []

    def add(self, path: str, msg: str) -> None:
        self.errors.append(f"{path}: {msg}")


def _unknown(obj: dict, allowed: Sequence[str], path: str, err: _Collector) -> None:
    for key in obj:
        if key not in allowed:
            err.add(f"{path}.{key}" if path else key, "unknown key")


def _int(obj: dict, key: str, path: str, err: _Collector, required: bool = True) -> Optional[int]:
    if key not in obj:
        if required:
            err.add(f"{path}.{key}", "missing required field")
        return None
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        err.add(f"{path}.{key}", f"expected an integer, got {v!r}")
        return None
    return v


def _rational(v: Any, path: str, err: _Collector) -> Optional[Fraction]:
    if isinstance(v, bool) or isinstance(v, float) or not isinstance(v, (int, str)):
        err.add(path, f"expected an integer or a 'p/q' string, got {v!r}")
        return None
    try:
        return to_fraction(v)
    except (ValueError, ZeroDivisionError):
        err.add(path, f"not a rational: {v!r}")
        return None


def _vector(v: Any, path: str, err: _Collector, length: Optional[int]) -> Optional[tuple[Fraction, ...]]:
    if not isinstance(v, list):
        err.add(path, f"expected an array of rationals, got {v!r}")
        return None
    out = [_rational(x, f"{path}[{i}]", err) for i, x in enumerate(v)]
    if length is not None and len(out) != length:
        err.add(path, f"expected {length} coordinates (Néron–Severi rank), got {len(out)}")
        return None
    if any(x is None for x in out):
        return None
    return tuple(out)


def _ns_rank(s: SurfaceSpec) -> Optional[int]:
    if s.kind == "p2":
        return 1
    if s.kind == "ruled":
        return 2
    if s.kind == "blowup":
        return {SITE_POINT: 2, SITE_ON_SIGMA: 3}.get(s.site)
    return None


def _parse_surface(obj: Any, err: _Collector) -> Optional[SurfaceSpec]:
    if not isinstance(obj, dict):
        err.add("surface", "missing or not an object")
        return None
    kind = obj.get("kind")
    if kind not in SURFACE_KINDS:
        err.add("surface.kind", f"expected one of {list(SURFACE_KINDS)}, got {kind!r}")
        return None
    if kind == "p2":
        _unknown(obj, ("kind",), "surface", err)
        return SurfaceSpec("p2")
    if kind == "ruled":
        _unknown(obj, ("kind", "genus", "degW"), "surface", err)
        genus, degW = _int(obj, "genus", "surface", err), _int(obj, "degW", "surface", err)
        if genus is not None and genus < 0:
            err.add("surface.genus", "must be nonnegative")
        return SurfaceSpec("ruled", genus, degW)
    site = obj.get("site")
    if site == SITE_POINT:
        _unknown(obj, ("kind", "site"), "surface", err)
        return SurfaceSpec("blowup", site=site)
    if site == SITE_ON_SIGMA:
        _unknown(obj, ("kind", "site", "genus", "degW"), "surface", err)
        genus, degW = _int(obj, "genus", "surface", err), _int(obj, "degW", "surface", err)
        if genus is not None and genus < 0:
            err.add("surface.genus", "must be nonnegative")
        return SurfaceSpec("blowup", genus, degW, site)
    err.add("surface.site", f"uncatalogued blow-up site {site!r}; expected 'point' (P2) or 'on_sigma' (ruled)")
    return None


def _parse_bundle(obj: Any, surface: Optional[SurfaceSpec], err: _Collector) -> Optional[BundleSpec]:
    if not isinstance(obj, dict):
        err.add("bundle", "missing or not an object")
        return None
    kind = obj.get("kind")
    if kind not in BUNDLE_KINDS:
        err.add("bundle.kind", f"expected one of {list(BUNDLE_KINDS)}, got {kind!r}")
        return None
    allowed = {
        "decomposable": ("kind", "rank", "summands", "twist"),
        "semistable_delta0": ("kind", "rank", "c1", "c2", "twist"),
        "formal": ("kind", "rank", "c1", "c2", "twist"),
        "pullback_ruling": ("kind", "rank", "base_rank", "base_degree", "twist"),
    }[kind]
    _unknown(obj, allowed, "bundle", err)
    rank = _int(obj, "rank", "bundle", err)
    if rank is not None and rank < 2:
        err.add("bundle.rank", "must be at least 2")
    n = _ns_rank(surface) if surface else None
    summands = base_rank = base_degree = c1 = c2 = twist = None
    if kind == "decomposable":
        raw = obj.get("summands")
        if not isinstance(raw, list):
            err.add("bundle.summands", "missing required array of summand classes")
        else:
            vecs = [_vector(v, f"bundle.summands[{i}]", err, n) for i, v in enumerate(raw)]
            if rank is not None and len(vecs) != rank:
                err.add("bundle.summands", f"{len(vecs)} summands for rank {rank}")
            if all(v is not None for v in vecs):
                summands = tuple(vecs)
    elif kind == "pullback_ruling":
        if surface is not None and (surface.kind == "p2" or surface.site == SITE_POINT):
            err.add("bundle.kind", "pullback_ruling needs a ruled surface (or its blow-up on sigma)")
        base_rank = _int(obj, "base_rank", "bundle", err, required=False)
        if base_rank is not None and rank is not None and base_rank != rank:
            err.add("bundle.base_rank", f"base_rank {base_rank} differs from rank {rank}")
        if "base_degree" not in obj:
            err.add("bundle.base_degree", "missing required field")
        else:
            base_degree = _rational(obj["base_degree"], "bundle.base_degree", err)
    else:
        if "c1" not in obj:
            err.add("bundle.c1", "missing required field")
        else:
            c1 = _vector(obj["c1"], "bundle.c1", err, n)
        if "c2" not in obj:
            err.add("bundle.c2", "missing required field")
        else:
            c2 = _rational(obj["c2"], "bundle.c2", err)
    if "twist" in obj:
        twist = _vector(obj["twist"], "bundle.twist", err, n)
    if rank is None:
        return None
    return BundleSpec(kind, rank, summands, base_rank, base_degree, c1, c2, twist)


def _parse_options(obj: Any, err: _Collector) -> Options:
    if obj is None:
        return Options()
    if not isinstance(obj, dict):
        err.add("options", "expected an object")
        return Options()
    _unknown(obj, ("minimize", "format", "crosscheck"), "options", err)
    minimize = obj.get("minimize", False)
    crosscheck = obj.get("crosscheck", False)
    form = obj.get("format", "text")
    for key, v in (("minimize", minimize), ("crosscheck", crosscheck)):
        if not isinstance(v, bool):
            err.add(f"options.{key}", f"expected true/false, got {v!r}")
    if form not in FORMATS:
        err.add("options.format", f"expected one of {list(FORMATS)}, got {form!r}")
    return Options(bool(minimize), form if form in FORMATS else "text", bool(crosscheck))


def parse(text: str) -> ProblemSpec:
    """Validate a problem document; raises SchemaError listing every problem found."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError([f"line {exc.lineno}, column {exc.colno}: malformed JSON ({exc.msg})"]) from None
    if not isinstance(doc, dict):
        raise SchemaError(["document: expected a JSON object"])
    err = _Collector()
    _unknown(doc, ("surface", "bundle", "query", "options", "point"), "", err)
    surface = _parse_surface(doc.get("surface"), err)
    bundle = _parse_bundle(doc.get("bundle"), surface, err)
    query = doc.get("query")
    if query not in QUERIES:
        err.add("query", f"expected one of {list(QUERIES)}, got {query!r}")
    options = _parse_options(doc.get("options"), err)
    point = doc.get("point")
    if point is not None and point not in POINTS:
        err.add("point", f"expected one of {list(POINTS)}, got {point!r}")
    if err.errors:
        raise SchemaError(err.errors)
    return ProblemSpec(surface, bundle, query, options, point)


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return fmt(value)
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    return value


def serialize(spec: ProblemSpec) -> str:
    """Inverse of :func:`parse`; omits unset optional fields."""

    def obj(dc) -> dict:
        return {f.name: _plain(getattr(dc, f.name)) for f in fields(dc) if getattr(dc, f.name) is not None}

    doc: dict[str, Any] = {"surface": obj(spec.surface), "bundle": obj(spec.bundle), "query": spec.query}
    if spec.point is not None:
        doc["point"] = spec.point
    doc["options"] = obj(spec.options)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# building and running


def build(spec: ProblemSpec) -> tuple[SurfaceModel, BundleModel]:
    s, b = spec.surface, spec.bundle
    X = surface_from_descriptor(s.kind, s.genus, s.degW, s.site)
    if b.kind == "pullback_ruling":
        if s.kind == "ruled":
            E = bm.pullback_ruling((b.rank, b.base_degree), X)
        elif s.kind == "blowup" and s.site == SITE_ON_SIGMA:
            base = bm.pullback_ruling((b.rank, b.base_degree), X.kind.parent)
            E = bm.pullback_blowup(base, X)
        else:
            raise bm.BundleError("pullback_ruling needs a ruled surface (or its blow-up on sigma)")
    elif b.kind == "decomposable":
        E = bm.decomposable([X.cls(v) for v in b.summands])
    elif b.kind == "semistable_delta0":
        E = bm.semistable_delta0(b.rank, X.cls(b.c1), b.c2)
    else:
        E = bm.formal(b.rank, X.cls(b.c1), b.c2)
    if b.twist is not None:
        E = bm.twist(E, X.cls(b.twist))
    if E.rank != b.rank:
        raise bm.BundleError(f"constructed bundle has rank {E.rank}, expected {b.rank}")
    return X, E


def _vec(v) -> list[str]:
    return [fmt(x) for x in v]


def _term(coeff: Fraction, name: str, first: bool) -> str:
    mag = abs(coeff)
    body = name if mag == 1 else f"{fmt(mag)}·{name}"
    if first:
        return body if coeff > 0 else f"-{body}"
    return f"+ {body}" if coeff > 0 else f"- {body}"


def inequality(h: Halfspace, names: Sequence[str]) -> str:
    """Render ``<h, y> >= 0`` as e.g. ``1/2·y0 + y2 ≥ 0``."""
    parts = []
    for c, name in zip(h.normal, names):
        if c != 0:
            parts.append(_term(c, name, not parts))
    return " ".join(parts) + " ≥ 0"


def _bundle_summary(E: BundleModel) -> dict:
    out = {
        "kind": E.kind,
        "rank": E.rank,
        "c1": _vec(E.c1.coords),
        "c2": fmt(E.c2),
        "discriminant": fmt(discriminant(E)),
    }
    if E.summands is not None:
        out["summands"] = [_vec(L.coords) for L in E.summands]
    return out


def _header(spec: ProblemSpec, X: SurfaceModel, E: BundleModel) -> dict:
    return {
        "query": spec.query,
        "surface": {"id": X.id, "basis": list(X.ns_basis), "curves": [
            {"label": label, "class": _vec(v)} for label, v in X.curves
        ]},
        "bundle": _bundle_summary(E),
    }


def _rows(cone: ConeH, flags: Optional[Sequence[bool]] = None) -> list[dict]:
    rows = []
    for i, h in enumerate(cone.halfspaces):
        row = {"label": h.label, "normal": _vec(h.normal), "inequality": inequality(h, cone.coord_names)}
        if flags is not None:
            row["redundant"] = bool(flags[i])
        rows.append(row)
    return rows


def _nefcone_report(spec, X, E) -> dict:
    res = nef_cone(X, E, minimize=spec.options.minimize)
    out = _header(spec, X, E)
    out["construction"] = res.provenance
    out["coordinates"] = list(res.cone.coord_names)
    out["basis"] = list(res.basis_labels)
    out["minimized"] = res.minimized
    flags = None if res.minimized else res.redundant
    out["rows"] = _rows(res.cone, flags)
    try:
        out["extremal_rays"] = [_vec(r.coords) for r in res.nef_generators().rays]
    except ConeError:
        out["extremal_rays"] = None
    return out


def _cycle_text(Z) -> str:
    if Z.beta.is_zero():
        return f"{fmt(Z.a)}·xi^(r-2)F" if Z.a != 1 else "xi^(r-2)F"
    head = f"xi^(r-1)·pi*({Z.label})"
    if Z.a == 0:
        return head
    return f"{head} {'+' if Z.a > 0 else '-'} {fmt(abs(Z.a))}·xi^(r-2)F"


def _negcone_report(spec, X, E) -> dict:
    res = nef_cone(X, E)
    out = _header(spec, X, E)
    out["construction"] = res.provenance
    out["coordinates"] = list(res.cone.coord_names)
    out["basis"] = list(res.basis_labels)
    out["generators"] = [
        {
            "label": Z.label,
            "cycle": _cycle_text(Z),
            "a": fmt(Z.a),
            "beta": _vec(Z.beta.coords),
            "functional": _vec(functional(Z)),
        }
        for Z in res.cycles
    ]
    return out


def _result(r: SeshadriResult) -> dict:
    if r.is_exact:
        return {"exact": fmt(r.exact)}
    return {"bounds": [fmt(r.bounds[0]), fmt(r.bounds[1])]}


def _seshadri_report(spec, X, E) -> dict:
    if spec.surface.kind == "blowup":
        raise SeshadriError("give the Seshadri query on the base surface; the blow-up is built internally")
    point = spec.point
    if point == "off_sigma":
        raise SeshadriError("blow-up site 'off_sigma' is uncatalogued: only points of the section sigma are supported")
    res = seshadri(E, point)
    out = _header(spec, X, E)
    out["point"] = point or (SITE_POINT if spec.surface.kind == "p2" else SITE_ON_SIGMA)
    out["method"] = res.method
    out["result"] = _result(res)
    out["note"] = res.note
    if spec.options.crosscheck:
        lam, nef = cone_route(E, point)
        out["crosscheck"] = {
            "method": lam.method,
            "construction": nef.provenance,
            "result": _result(lam),
            "witness": _rows(ConeH(nef.cone.dim, lam.witness, nef.cone.coord_names)),
            "agree": res.contains(lam.exact),
        }
    return out


def _check_report(spec, X, E) -> dict:
    out = _header(spec, X, E)
    table = []
    for label, C in X.ne_generators:
        try:
            mu = fmt(mu_min_restriction(E, C))
        except bm.MuMinUnavailable:
            mu = None
        table.append({
            "curve": label,
            "deg": fmt(deg_restriction(E, C)),
            "slope": fmt(slope_restriction(E, C)),
            "mu_min": mu,
        })
    out["restrictions"] = table
    return out


def run(spec: ProblemSpec) -> dict:
    """Compute the report for a validated problem."""
    X, E = build(spec)
    return {
        "nefcone": _nefcone_report,
        "negcone": _negcone_report,
        "seshadri": _seshadri_report,
        "check": _check_report,
    }[spec.query](spec, X, E)


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def render_text(report: dict) -> str:
    lines = [f"{report['query']} on {report['surface']['id']}"]
    b = report["bundle"]
    lines.append(f"bundle: {b['kind']}, rank {b['rank']}, c1 = ({', '.join(b['c1'])}), c2 = {b['c2']}, Δ = {b['discriminant']}")
    q = report["query"]
    if q == "nefcone":
        lines.append(f"construction: {report['construction']}")
        lines.append("coordinates: " + ", ".join(f"{y} -> {t}" for y, t in zip(report["coordinates"], report["basis"])))
        for row in report["rows"]:
            flag = "  (redundant)" if row.get("redundant") else ""
            lines.append(f"  {row['inequality']}{flag}")
        if report["extremal_rays"] is not None:
            lines.append("extremal rays: " + "; ".join("(" + ", ".join(r) + ")" for r in report["extremal_rays"]))
    elif q == "negcone":
        lines.append(f"construction: {report['construction']}")
        for g in report["generators"]:
            lines.append(f"  {g['cycle']}")
    elif q == "seshadri":
        res = report["result"]
        value = res["exact"] if "exact" in res else f"[{res['bounds'][0]}, {res['bounds'][1]}]"
        lines.append(f"epsilon at {report['point']}: {value}  ({report['method']}; {report['note']})")
        if "crosscheck" in report:
            cc = report["crosscheck"]
            lines.append(f"cone route: {cc['result'].get('exact')}  agree: {cc['agree']}")
            for row in cc["witness"]:
                lines.append(f"  binding: {row['inequality']}")
    else:
        for row in report["restrictions"]:
            lines.append(
                f"  {row['curve']}: deg {row['deg']}, slope {row['slope']}, mu_min {row['mu_min'] if row['mu_min'] is not None else 'n/a'}"
            )
    return "\n".join(lines) + "\n"


def _run_file(path: Path, query: Optional[str], args, out, errout) -> int:
    try:
        spec = parse(path.read_text(encoding="utf-8"))
    except SchemaError as exc:
        for e in exc.errors:
            print(f"{path}: schema error: {e}", file=errout)
        return EXIT_SCHEMA
    except OSError as exc:
        print(f"{path}: {exc}", file=errout)
        return EXIT_SCHEMA
    opts = spec.options
    spec = ProblemSpec(
        spec.surface,
        spec.bundle,
        query or spec.query,
        Options(
            minimize=opts.minimize or args.minimize,
            format=args.format or opts.format,
            crosscheck=opts.crosscheck or args.crosscheck,
        ),
        spec.point,
    )
    try:
        report = run(spec)
    except (ConeError, SurfaceError, bm.BundleError, NefConeError, SeshadriError) as exc:
        print(f"{path}: {exc}", file=errout)
        return EXIT_COMPUTE
    out.write(render_json(report) if spec.options.format == "json" else render_text(report))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, out=None, errout=None) -> int:
    out = out or sys.stdout
    errout = errout or sys.stderr
    parser = argparse.ArgumentParser(prog="nefcones", description="Nef cones and Seshadri constants of projective bundles over surfaces.")
    parser.add_argument("query", choices=QUERIES + ("run",), help="what to compute; 'run' uses the query stored in each file")
    parser.add_argument("files", nargs="*", type=Path, help="problem files (JSON)")
    parser.add_argument("--batch", type=Path, metavar="DIR", help="process every *.json file in DIR")
    parser.add_argument("--minimize", action="store_true", help="drop redundant inequalities")
    parser.add_argument("--format", choices=FORMATS, default=None)
    parser.add_argument("--crosscheck", action="store_true", help="seshadri: also run the cone route and compare")
    args = parser.parse_args(argv)

    files = list(args.files)
    if args.batch is not None:
        files += sorted(args.batch.glob("*.json"))
    if not files:
        parser.error("no problem files given")
    query = None if args.query == "run" else args.query
    status = EXIT_OK
    for path in files:
        status = max(status, _run_file(path, query, args, out, errout))
    return status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
