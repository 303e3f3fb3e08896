"""Runs representative CLI commands and validates their JSON against the schema."""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["star", "--m", "1", "--f", "x", "--g", "p"],
    ["star", "--m", "2", "--f", "x1*x2 + p1", "--g", "p2^2/(2*l)"],
    ["quantize", "--n", "3"],
    ["quantize", "--m", "1", "--ideal", "x^2", "--degree", "4"],
    ["structure", "--n", "2", "--lambda", "1/2"],
    ["matrix", "--n", "3", "--lambda", "-2"],
    ["verify", "--n", "2", "--seed", "3", "--checks", "20"],
    ["explore", "--m", "2", "--ideal", "x1*x2,x2^2", "--degree", "4"],
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failed = False
    for args in COMMANDS:
        proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
        errors = []
        if proc.returncode != 0:
            errors.append(f"exit code {proc.returncode}: {proc.stderr.strip()}")
        else:
            errors = [e.message for e in validator.iter_errors(json.loads(proc.stdout))]
        print(" ".join(args), "->", "ok" if not errors else "; ".join(errors))
        failed |= bool(errors)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
