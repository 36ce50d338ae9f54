import io
import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nefcones.cli import (
    EXIT_COMPUTE,
    EXIT_OK,
    EXIT_SCHEMA,
    BundleSpec,
    Options,
    ProblemSpec,
    SchemaError,
    SurfaceSpec,
    main,
    parse,
    render_json,
    run,
    serialize,
)

ROOT = Path(__file__).resolve().parent.parent
CASES = ROOT / "cases"


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_ruled_case():
    spec = parse((CASES / "ex3_2.json").read_text())
    assert spec.surface == SurfaceSpec("ruled", 1, 0)
    assert (spec.bundle.kind, spec.bundle.rank, spec.bundle.base_degree) == ("pullback_ruling", 2, 1)
    assert spec.query == "nefcone"


def test_parse_family_case():
    spec = parse((CASES / "ex4_12.json").read_text())
    assert spec.surface == SurfaceSpec("blowup", 2, -1, "on_sigma")
    assert spec.bundle.summands == ((0, 0, 1), (0, 0, 2))


def test_missing_rank_names_field():
    doc = json.loads((CASES / "ex4_11.json").read_text())
    del doc["bundle"]["rank"]
    with pytest.raises(SchemaError) as info:
        parse(json.dumps(doc))
    assert any(e.startswith("bundle.rank") for e in info.value.errors)


def test_schema_errors_are_collected():
    doc = {
        "surface": {"kind": "ruled", "genus": -1},
        "bundle": {"kind": "decomposable", "rank": 2, "summands": [[1, 0.5]], "color": 1},
        "query": "volume",
    }
    with pytest.raises(SchemaError) as info:
        parse(json.dumps(doc))
    paths = {e.split(":")[0] for e in info.value.errors}
    assert {"surface.genus", "surface.degW", "bundle.summands[0][1]", "bundle.summands", "bundle.color", "query"} <= paths


def test_malformed_json_reports_position():
    with pytest.raises(SchemaError) as info:
        parse('{\n  "surface": ,\n}')
    assert info.value.errors[0].startswith("line 2")


def test_uncatalogued_site():
    with pytest.raises(SchemaError):
        parse(json.dumps({"surface": {"kind": "blowup", "site": "twice"}, "bundle": {"kind": "formal", "rank": 2, "c1": [0], "c2": 0}, "query": "check"}))


def test_pullback_ruling_on_plane_rejected():
    doc = {"surface": {"kind": "p2"}, "bundle": {"kind": "pullback_ruling", "rank": 2, "base_degree": 1}, "query": "check"}
    with pytest.raises(SchemaError):
        parse(json.dumps(doc))


def test_run_ruled_rows():
    report = run(parse((CASES / "ex3_2.json").read_text()))
    assert {r["inequality"] for r in report["rows"]} == {"y0 ≥ 0", "y1 ≥ 0", "1/2·y0 + y2 ≥ 0"}


def test_run_redundant_flag():
    report = run(parse((CASES / "ex4_11.json").read_text()))
    assert [r["redundant"] for r in report["rows"]] == [False, False, False, True]


def test_run_seshadri_exact():
    report = run(parse((CASES / "p2_seshadri.json").read_text()))
    assert report["result"] == {"exact": "1"}


def test_exit_codes(tmp_path):
    assert invoke("nefcone", CASES / "ex3_2.json", "--format", "json")[0] == EXIT_OK
    bad = tmp_path / "bad.json"
    bad.write_text('{"surface": {"kind": "p2"}}')
    code, _, err = invoke("nefcone", bad)
    assert code == EXIT_SCHEMA and "schema error" in err
    formal = tmp_path / "formal.json"
    formal.write_text(json.dumps({"surface": {"kind": "p2"}, "bundle": {"kind": "formal", "rank": 2, "c1": [3], "c2": 2}, "query": "nefcone"}))
    code, _, err = invoke("nefcone", formal)
    assert code == EXIT_COMPUTE and err


def test_off_sigma_is_compute_error(tmp_path):
    doc = json.loads((CASES / "ruled_seshadri.json").read_text())
    doc["point"] = "off_sigma"
    f = tmp_path / "off.json"
    f.write_text(json.dumps(doc))
    assert invoke("run", f)[0] == EXIT_COMPUTE


def test_query_override_and_minimize():
    code, out, _ = invoke("nefcone", CASES / "ex4_11_check.json", "--format", "json", "--minimize")
    report = json.loads(out)
    assert code == EXIT_OK and report["query"] == "nefcone" and len(report["rows"]) == 3


def test_text_output():
    code, out, _ = invoke("nefcone", CASES / "ex3_2.json")
    assert code == EXIT_OK and "1/2·y0 + y2 ≥ 0" in out


def test_batch():
    code, out, _ = invoke("run", "--batch", CASES, "--format", "json")
    assert code == EXIT_OK and out.count('"query"') == len(list(CASES.glob("*.json")))


def test_json_is_deterministic():
    spec = parse((CASES / "ex4_12.json").read_text())
    assert render_json(run(spec)) == render_json(run(spec))


@pytest.mark.parametrize("case", sorted(CASES.glob("*.json")), ids=lambda p: p.stem)
def test_golden(case):
    code, out, _ = invoke("run", case, "--format", "json")
    assert code == EXIT_OK
    assert out == (CASES / "expected" / case.name).read_text(encoding="utf-8")


# ---------------------------------------------------------------- round trip

q = st.fractions(min_value=-20, max_value=20, max_denominator=7)
vec2 = st.tuples(q, q)


@st.composite
def specs(draw):
    kind = draw(st.sampled_from(["decomposable", "semistable_delta0", "pullback_ruling", "formal"]))
    rank = draw(st.integers(min_value=2, max_value=4))
    surface = SurfaceSpec("ruled", draw(st.integers(0, 4)), draw(st.integers(-3, 3)))
    twist = draw(st.none() | vec2)
    if kind == "decomposable":
        bundle = BundleSpec(kind, rank, summands=tuple(draw(vec2) for _ in range(rank)), twist=twist)
    elif kind == "pullback_ruling":
        bundle = BundleSpec(kind, rank, base_rank=draw(st.none() | st.just(rank)), base_degree=draw(q), twist=twist)
    else:
        bundle = BundleSpec(kind, rank, c1=draw(vec2), c2=draw(q), twist=twist)
    options = Options(draw(st.booleans()), draw(st.sampled_from(["text", "json"])), draw(st.booleans()))
    query = draw(st.sampled_from(["nefcone", "negcone", "seshadri", "check"]))
    point = draw(st.none() | st.sampled_from(["on_sigma", "off_sigma"]))
    return ProblemSpec(surface, bundle, query, options, point)


@given(specs())
def test_parse_serialize_round_trip(spec):
    assert parse(serialize(spec)) == spec


def test_rationals_are_strings():
    report = run(parse((CASES / "ex3_2.json").read_text()))
    assert report["rows"][1]["normal"] == ["1/2", "0", "1"]
    assert all(isinstance(x, str) for r in report["rows"] for x in r["normal"])
    assert Fraction(report["rows"][1]["normal"][0]) == Fraction(1, 2)
