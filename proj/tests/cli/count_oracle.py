#!/usr/bin/env python3
"""Compares `idealforge count` with the independent formula evaluation."""
import os
import subprocess
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "oracles"))
from count_formula import count  # noqa: E402

cli = sys.argv[1]
failures = 0
for n, d in [(2, 2), (2, 3), (3, 2), (4, 2), (3, 3), (4, 3), (5, 2)]:
    out = subprocess.run([cli, "count", "--n", str(n), "--d", str(d)], capture_output=True, text=True, check=True).stdout
    line = next(l for l in out.splitlines() if l.startswith("formula: "))
    got = int(line.split(": ", 1)[1])
    want = 21 + d if n == 2 else count(n, d)
    status = "ok" if got == want else "MISMATCH"
    failures += got != want
    print(f"({n},{d}) formula {got} oracle {want} {status}")
sys.exit(1 if failures else 0)
