"""Validates CLI JSON output against the shipped schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in (root / "docs" / "schemas").glob("*.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())


def run(*args, codes=(0,)):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode not in codes:
        sys.exit(f"{args}: exit {proc.returncode}\n{proc.stderr}")
    return json.loads(proc.stdout)


def check(schema, doc, label):
    validator = jsonschema.Draft202012Validator(schemas[schema], registry=registry)
    errors = list(validator.iter_errors(doc))
    if errors:
        sys.exit(f"{label}: {errors[0].message}")
    print(f"{label}: valid")


for entry in ("catalan", "two_three_trees", "diversity_index"):
    check("comparison_report.schema.json", run("corpus", "run", entry, "--format", "json", codes=(0, 2)), entry)
specs = root / "specs"
check("comparison_report.schema.json", run("compare", str(specs / "motzkin.acspec"), "--format", "json", "--n", "100,200"), "compare")
check("asymptotic_form.schema.json", run("asym", str(specs / "binary_trees.acspec")), "asym located")
check("asymptotic_form.schema.json", run("asym", str(specs / "compositions.acspec"), "--order", "200"), "asym estimated")
dist = run("dist", "pattern:aba", "--n", "50,100", "--format", "json")
check("distribution_report.schema.json", dist, "dist pattern")
check("ks_report.schema.json", dist["ks"], "ks report")
check("distribution_report.schema.json", run("dist", "height", "--n", "20", "--format", "json"), "dist height")
