"""Runs the forcelab binary and compares its output with checked-in files.

usage: cli_golden.py <forcelab binary> <golden dir>
"""

import json
import subprocess
import sys
from pathlib import Path


def drop_timing(text):
    data = json.loads(text)
    data.pop("elapsed_ms", None)
    return json.dumps(data, indent=2) + "\n"


CASES = [
    (["solve", "--family", "hypercube", "--d", "3", "--leaks", "1", "--output", "json"],
     "solve_q3_l1.json", 0, drop_timing),
    (["check", "--family", "gp", "--n", "3", "--k", "1", "--set", "3,4,5", "--leaks", "1"],
     "check_gp3_l1.txt", 0, None),
    (["check", "--family", "gp", "--n", "3", "--k", "1", "--set", "3,4,5", "--leaks", "2"],
     "check_gp3_l2.json", 0, None),
    (["verify-paper", "--suite", "cubes"], "verify_cubes.txt", 0, None),
    (["verify-paper", "--suite", "all"], "verify_all.txt", 1, None),
    (["verify-paper", "--suite", "all", "--output", "json"], "verify_all.json", 1, None),
    (["verify-paper", "--suite", "all", "--output", "json", "--workers", "3"],
     "verify_all.json", 1, None),
]

USAGE_ERRORS = [
    ["solve"],
    ["solve", "--family", "gp", "--n", "3"],
    ["check", "--family", "path", "--n", "3", "--set", "0,9"],
    ["verify-paper", "--suite", "unknown"],
]


def main():
    binary, golden_dir = sys.argv[1], Path(sys.argv[2])
    failures = 0
    for args, name, code, transform in CASES:
        proc = subprocess.run([binary, *args], capture_output=True, text=True)
        out = transform(proc.stdout) if transform else proc.stdout
        expected = (golden_dir / name).read_text()
        label = " ".join(args)
        if proc.returncode != code:
            print(f"FAIL exit {proc.returncode} != {code}: {label}")
            failures += 1
        elif out != expected:
            print(f"FAIL output differs from {name}: {label}")
            failures += 1
        else:
            print(f"ok   {label}")
    for args in USAGE_ERRORS:
        proc = subprocess.run([binary, *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 2 or not proc.stderr:
            print(f"FAIL expected usage error (exit 2): {label}")
            failures += 1
        else:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
