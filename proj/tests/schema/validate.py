"""Runs the CLI, validates every JSON document against schemas/, and checks
that a second run of each invocation is byte-identical.

usage: validate.py <coquasi binary> <schemas dir>
"""

import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

registry = Registry()
for path in SCHEMAS.glob("*.json"):
    resource = Resource.from_contents(json.loads(path.read_text()))
    registry = registry.with_resource(resource.id(), resource)
    registry = registry.with_resource(path.name, resource)


def validator(name):
    schema = json.loads((SCHEMAS / name).read_text())
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema, registry=registry)


failures = []


def run(args):
    return subprocess.run([BIN, *args], capture_output=True, check=False)


def check(args, schema, codes=(0,)):
    first, second = run(args), run(args)
    label = " ".join(args)
    if first.returncode not in codes:
        failures.append(f"{label}: exit {first.returncode}: {first.stderr.decode()}")
        return None
    if first.stdout != second.stdout or first.returncode != second.returncode:
        failures.append(f"{label}: output differs between runs")
    if "--format" in args and args[args.index("--format") + 1] == "csv":
        return None
    doc = json.loads(first.stdout)
    errors = sorted(validator(schema).iter_errors(doc), key=str)
    for e in errors[:3]:
        failures.append(f"{label}: {e.json_path}: {e.message}")
    return doc


tmp = pathlib.Path(tempfile.mkdtemp(prefix="coquasi_schema_"))

check(["quiver", "build", "--n", "4", "--ram", "1:1", "--max-len", "3"], "quiver.schema.json")
check(["quiver", "build", "--group", "2,2", "--ram", "1,0:1;0,1:2"], "quiver.schema.json")
check(["quiver", "build", "--n", "4", "--ram", "2:1", "--strict"], "quiver.schema.json", codes=(1,))
check(["cocycle", "check", "--n", "3", "--s", "1"], "cocycle_check.schema.json")
check(["cocycle", "check", "--n", "4", "--s", "2", "--ram", "1:1"], "cocycle_check.schema.json")
check(["cocycle", "check", "--group", "2,4", "--s", "1,3"], "cocycle_check.schema.json")
check(["cocycle", "coboundary", "--n", "2", "--s", "1"], "cocycle_coboundary.schema.json")
cob = check(["cocycle", "coboundary", "--n", "3", "--s", "0"], "cocycle_coboundary.schema.json")
if cob and cob["mu"] is not None:
    errors = list(validator("table.schema.json").iter_errors(cob["mu"]))
    if errors:
        failures.append(f"coboundary mu is not a valid table: {errors[0].message}")

forms = check(["rform", "enumerate", "--n", "4"], "rform_enumerate.schema.json")
check(["rform", "enumerate", "--group", "2,2", "--limit", "8"], "rform_enumerate.schema.json")
check(["rform", "enumerate", "--n", "3", "--s", "2"], "rform_enumerate.schema.json")
if forms:
    for i, table in enumerate(forms["rforms"]):
        for e in validator("table.schema.json").iter_errors(table):
            failures.append(f"rform {i}: {e.message}")
        rpath = tmp / f"r{i}.json"
        ppath = tmp / "phi.json"
        rpath.write_text(json.dumps(table))
        ppath.write_text(json.dumps(forms["phi"]))
        doc = check(["verify", "--phi", str(ppath), "--rform", str(rpath), "--ram", "1:1", "--strict"],
                    "verify.schema.json")
        if doc and not doc["ok"]:
            failures.append(f"enumerated rform {i} did not verify")

check(["verify", "--n", "2", "--ram", "1:1", "--s", "1"], "verify.schema.json")
check(["verify", "--n", "3", "--ram", "1:1", "--s", "1", "--strict"], "verify.schema.json", codes=(1,))
check(["classify", "zn", "--n", "6"], "classification.schema.json")
check(["classify", "zn", "--n", "4", "--jobs", "3", "--max-len", "2"], "classification.schema.json")
check(["classify", "zn", "--n", "3", "--format", "csv"], "classification.schema.json")
check(["classify", "abelian", "--group", "2,2", "--ram", "1,0:1;0,1:1"], "classification.schema.json")
check(["classify", "abelian", "--group", "2,2", "--ram", "1,0:1;0,1:1", "--s", "1,0"], "classification.schema.json")
for n in ("2", "4", "6"):
    check(["taft", "--n", n], "taft.schema.json")
for name in ("S3", "Q8", "D4", "Z6", "2,4"):
    check(["obstruct", name], "obstruction.schema.json")

table_path = tmp / "table.json"
s3_table = {
    "name": "S3",
    "elements": ["e", "r", "r2", "s", "sr", "sr2"],
    "table": [[0, 1, 2, 3, 4, 5], [1, 2, 0, 5, 3, 4], [2, 0, 1, 4, 5, 3],
              [3, 4, 5, 0, 1, 2], [4, 5, 3, 2, 0, 1], [5, 3, 4, 1, 2, 0]],
}
for e in validator("multiplication_table.schema.json").iter_errors(s3_table):
    failures.append(f"sample table: {e.message}")
table_path.write_text(json.dumps(s3_table))
check(["obstruct", str(table_path), "--strict"], "obstruction.schema.json", codes=(1,))

for args in (["taft", "--n", "3"], ["classify", "zn"], ["bogus"], ["verify", "--n", "2", "--ram", "7:1"],
             ["rform", "enumerate", "--group", "2,2", "--limit", "3"]):
    r = run(args)
    if r.returncode != 2:
        failures.append(f"{' '.join(args)}: expected exit 2, got {r.returncode}")
    if r.stdout:
        failures.append(f"{' '.join(args)}: usage error wrote to stdout")

out_path = tmp / "out.json"
r = run(["taft", "--n", "4", "--out", str(out_path)])
if r.returncode != 0 or r.stdout or out_path.read_bytes() != run(["taft", "--n", "4"]).stdout:
    failures.append("--out does not reproduce stdout")

shutil.rmtree(tmp, ignore_errors=True)

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
