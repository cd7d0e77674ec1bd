"""Validate the CLI's JSON documents against schemas/*.schema.json."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    ("sequence", ["max", "--rule", "half", "--n", "40", "--format", "json"]),
    ("sequence", ["max", "--rule", "pow2", "--n", "40", "--method", "closed", "--format", "json"]),
    ("sequence", ["min", "--rule", "sqrt", "--n", "40", "--format", "json"]),
    ("triangle", ["triangle", "emit", "--rule", "half", "--dim", "6", "--format", "json"]),
    ("arrays", ["arrays", "--rule", "half", "--rows", "4", "--cols", "5", "--format", "json"]),
    ("verify", ["verify", "fractal", "--rule", "sqrt", "--n", "512", "--json"]),
    ("verify", ["verify", "serial-oracle", "--max-heaps", "3", "--max-size", "4", "--json"]),
    ("bench", ["bench", "--rule", "half", "--sizes", "2000,4000", "--format", "json"]),
]


def main(binary, schema_dir):
    failures = 0
    for schema_name, args in CASES:
        schema = json.loads((Path(schema_dir) / f"{schema_name}.schema.json").read_text())
        run = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        label = " ".join(args)
        try:
            if run.returncode != 0:
                raise RuntimeError(f"exit {run.returncode}: {run.stderr.strip()}")
            jsonschema.validate(json.loads(run.stdout), schema)
            print(f"ok    {schema_name:9} {label}")
        except (RuntimeError, ValueError, jsonschema.ValidationError) as error:
            failures += 1
            print(f"FAIL  {schema_name:9} {label}: {error}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
