#!/usr/bin/env python3
"""Validate cremona-sieve JSON output against docs/report.schema.json."""
import json
import sys

import jsonschema


def main(argv):
    if len(argv) < 3:
        print("usage: validate_report.py SCHEMA FILE...", file=sys.stderr)
        return 2
    with open(argv[1]) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    bad = 0
    for path in argv[2:]:
        with open(path) as fh:
            doc = json.load(fh)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for err in errors[:5]:
            print(f"{path}: {list(err.path)}: {err.message[:200]}")
        bad += bool(errors)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
