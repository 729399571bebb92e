#!/usr/bin/env python3
"""Validates `wsys solve --json` against docs/solve.schema.json and compares
it with the text output of the same run."""
import json
import pathlib
import subprocess
import sys

import jsonschema


def parse_text(text):
    lines = text.splitlines()
    n = int(lines[0].split()[1])
    models = [lines[1 + k] for k in range(n)]
    k = int(lines[1 + n].split()[1])
    optimal = [lines[2 + n + j].split(" ")[0] for j in range(k)]
    return models, optimal


def braces(atoms):
    return "{" + ",".join(atoms) + "}"


def main():
    wsys, schema_path, *inputs = sys.argv[1:]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    failures = 0
    for path in inputs:
        doc = json.loads(subprocess.run([wsys, "solve", "--json", path], capture_output=True, check=True, text=True).stdout)
        text = subprocess.run([wsys, "solve", path], capture_output=True, check=True, text=True).stdout
        try:
            jsonschema.validate(doc, schema)
        except jsonschema.ValidationError as e:
            print(f"FAIL {path}: {e.message}")
            failures += 1
            continue
        models, optimal = parse_text(text)
        if models != [braces(m) for m in doc["models"]] or optimal != [braces(o["model"]) for o in doc["optimal"]]:
            print(f"FAIL {path}: text and json outputs differ")
            failures += 1
            continue
        print(f"PASS {path}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
