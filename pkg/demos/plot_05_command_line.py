"""
Problem files and the command line
==================================

Problem files are JSON documents.  The same reports are available from
the ``nefcones`` command and from :func:`nefcones.cli.main`.
"""

import io
import json
from pathlib import Path

from nefcones.cli import main, parse, run, serialize

CASES = Path(__file__).resolve().parent.parent / "cases"

# Parse a stored problem and look at the validated spec.
spec = parse((CASES / "ex3_2.json").read_text())
print(spec)

# Specs round-trip through their JSON form.
assert parse(serialize(spec)) == spec

# Run it and inspect the report as data.
report = run(spec)
for row in report["rows"]:
    print(" ", row["inequality"] + ("  (redundant)" if row["redundant"] else ""))

# The command line: same thing, as text.  Equivalent shell command:
#   nefcones nefcone cases/ex4_11.json --minimize --format text
out = io.StringIO()
main(["nefcone", str(CASES / "ex4_11.json"), "--minimize", "--format", "text"], out)
print(out.getvalue())

# Schema errors name the offending field and exit with status 1.
bad = {"surface": {"kind": "p2"}, "bundle": {"kind": "decomposable", "summands": [[1], [2]]}, "query": "nefcone"}
try:
    parse(json.dumps(bad))
except ValueError as exc:
    print("schema error:", exc)

# Seshadri with the cross-check, as JSON.
out = io.StringIO()
main(["seshadri", str(CASES / "ruled_seshadri.json"), "--format", "json", "--crosscheck"], out)
print(json.loads(out.getvalue())["result"])
