#!/usr/bin/env python3
"""Validates every JSON document the CLI emits against the published schema.

Usage: validate_cli_json.py <path-to-cli-binary> <path-to-schema>

Also checks determinism: each command is run twice and must produce
byte-identical output.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

COMMANDS = [
    ["rootsys", "show", "--type", "B", "--rank", "3"],
    ["chevalley", "verify", "--type", "G", "--rank", "2", "--exhaustive"],
    ["rep", "build", "--type", "A", "--rank", "2", "--weight", "1,1"],
    [
        "rationality", "check", "--type", "A", "--rank", "3",
        "--weight", "0,1,0", "--form", "standard",
    ],
    [
        "rationality", "check", "--type", "A", "--rank", "3",
        "--weight", "0,1,0", "--form", "twisted:2",
    ],
    ["classify", "table", "--max-rank", "4"],
    ["quat", "ramify", "--a", "-1", "--b", "-1"],
    ["quat", "ramify", "--a", "3", "--b", "3"],
    ["demo", "badgq"],
]


def run(cli, args):
    proc = subprocess.run(
        [cli] + args, capture_output=True, text=True, timeout=600
    )
    if proc.returncode != 0:
        raise SystemExit(
            f"command {args} exited {proc.returncode}: {proc.stderr}"
        )
    return proc.stdout


def main():
    if len(sys.argv) != 3:
        raise SystemExit(__doc__)
    cli, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args in COMMANDS:
        first = run(cli, args)
        second = run(cli, args)
        if first != second:
            print(f"NOT DETERMINISTIC: {' '.join(args)}")
            failures += 1
            continue
        doc = json.loads(first)
        errors = list(validator.iter_errors(doc))
        if errors:
            print(f"SCHEMA VIOLATION for {' '.join(args)}:")
            for e in errors[:3]:
                print(f"  {e.message}")
            failures += 1
        else:
            print(f"ok: {' '.join(args)}")

    # The emitted matrices file validates too.
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "matrices.json"
        run(cli, [
            "rep", "build", "--type", "A", "--rank", "1", "--weight", "3",
            "--emit", str(out),
        ])
        doc = json.loads(out.read_text())
        errors = list(validator.iter_errors(doc))
        if errors:
            print("SCHEMA VIOLATION for emitted matrices file:")
            for e in errors[:3]:
                print(f"  {e.message}")
            failures += 1
        else:
            print("ok: emitted matrices file")

    # Exit-code contract: cap refusal is 2, usage errors are 1.
    proc = subprocess.run(
        [cli, "rep", "build", "--type", "E", "--rank", "8",
         "--weight", "1,0,0,0,0,0,0,0"],
        capture_output=True, text=True,
    )
    if proc.returncode != 2 or proc.stdout:
        print(f"cap refusal: expected exit 2 with empty stdout, "
              f"got {proc.returncode}")
        failures += 1
    else:
        print("ok: cap refusal exits 2, diagnostics on stderr only")

    proc = subprocess.run(
        [cli, "rationality", "check", "--type", "A", "--rank", "3",
         "--weight", "1,0,0", "--form", "standard"],
        capture_output=True, text=True,
    )
    if proc.returncode != 1:
        print(f"non-self-dual input: expected exit 1, got {proc.returncode}")
        failures += 1
    else:
        print("ok: violated hypothesis exits 1")

    if failures:
        raise SystemExit(f"{failures} failure(s)")
    print("all CLI JSON documents validate; outputs deterministic")


if __name__ == "__main__":
    main()
