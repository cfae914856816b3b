"""Run the CLI on a fixed set of commands and validate each JSON report against the checked-in schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("bounds_report", ["bounds", "--model", "full", "--r", "0.6"]),
    ("bounds_report", ["bounds", "--model", "full", "--theta", "0.1,0.2,0.3", "--weight", "diag:1,2,3"]),
    ("bounds_report", ["bounds", "--model", "submodel", "--r", "0.6", "--phi", "0.7854"]),
    ("bounds_report", ["bounds", "--model", "submodel", "--r", "0.6", "--phi", "1.2", "--solver", "numeric"]),
    ("bounds_report", ["bounds", "--model", "gaussian", "--nbar", "1"]),
    ("sim_report", ["simulate", "--n", "20", "--r", "0.5", "--trials", "2000"]),
    ("sim_report", ["simulate", "--n", "20", "--trials", "2000", "--risk", "bures"]),
    ("sim_report", ["gaussian", "--nbar", "1", "--n", "3", "--trials", "2000"]),
    ("table", ["limits", "--p", "0.5", "--j", "5,10", "--weight", "identity"]),
    ("table", ["sweep", "--command", "origin", "--n", "10,100"]),
    ("table", ["sweep", "--command", "bounds", "--r", "0:0.9:0.3"]),
    ("table", ["sweep", "--command", "radial", "--n", "100", "--r", "0.5"]),
    ("table", ["sweep", "--command", "covariant", "--n", "100", "--r", "0,0.6"]),
]


def main() -> int:
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())
    failures = 0
    for schema_name, args in CASES:
        proc = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        validator = jsonschema.Draft202012Validator(schemas[f"{schema_name}.schema.json"], registry=registry)
        errors = list(validator.iter_errors(doc))
        if doc.get("columns") is not None:
            for row in doc["rows"]:
                if list(row.keys()) != doc["columns"]:
                    errors.append("row keys differ from column order")
        if errors:
            failures += 1
            print(f"FAIL {' '.join(args)}: {errors[0]}")
        else:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
