#!/usr/bin/env python3
"""Run the disc binary on small instances and validate its JSON against docs/schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def load_registry(schema_dir):
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def leading_json(text):
    return json.loads(text[: text.rindex("}\n") + 2])


def main():
    disc, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    registry = load_registry(schema_dir)

    def check(schema, doc, label):
        validator = Draft202012Validator(registry.contents(schema), registry=registry)
        errors = sorted(validator.iter_errors(doc), key=str)
        for e in errors:
            print(f"{label}: {e.message}")
        return not errors

    def run(*args):
        return subprocess.run([disc, *args], check=True, capture_output=True, text=True).stdout

    ok = True
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        ok &= check("johnson.schema.json", leading_json(run("johnson", "--n", "6", "--k", "2", "--stats")), "johnson")
        run("lattice", "--n", "4", "--k", "2", "--seed", "7", "--out", str(tmp / "l.json"))
        ok &= check("lattice.schema.json", json.loads((tmp / "l.json").read_text()), "lattice")
        for args in (["--n", "3", "--k", "1", "--mode", "geometric", "--compare-seed", "2"], ["--N", "4"]):
            run("verify", *args, "--claims", "all", "--report", str(tmp / "r.json"))
            ok &= check("verify-report.schema.json", json.loads((tmp / "r.json").read_text()), "verify")
        ok &= check("geodesics.schema.json",
                    leading_json(run("geodesics", "--from", "000", "--to", "111", "--enumerate")), "geodesics")
        ok &= check("interval.schema.json", leading_json(run("interval", "--lower", "100", "--upper", "111")),
                    "interval")
    print("schemas ok" if ok else "schema violations")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
