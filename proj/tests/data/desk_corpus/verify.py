#!/usr/bin/env python3
"""Run the Python solutions of the desk corpus against each problem's cases.

Correct solutions must pass every case; incorrect ones must fail at least one.
"""

import json
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent / "problems"


def passes(program, cases):
    for case in cases:
        run = subprocess.run([sys.executable, str(program)], input=case["input"], capture_output=True, text=True, timeout=20)
        if run.returncode != 0 or run.stdout.split() != case["output"].split():
            return False
    return True


def main():
    failures = []
    for problem in sorted(p for p in ROOT.iterdir() if p.is_dir()):
        cases = json.loads((problem / "cases.json").read_text())
        for program in sorted(problem.glob("*.py")):
            expected = program.name.startswith("correct")
            if passes(program, cases) != expected:
                failures.append(f"{problem.name}/{program.name}: expected {'pass' if expected else 'fail'}")
    for f in failures:
        print(f)
    print(f"{'FAIL' if failures else 'OK'}: {len(failures)} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
