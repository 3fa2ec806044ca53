#!/usr/bin/env python3
"""Two json runs of the same suite differ only in elapsed_ms; text and json statuses agree."""
import json
import subprocess
import sys

cli, n, d = sys.argv[1], sys.argv[2], sys.argv[3]
args = [cli, "verify", "all", "--n", n, "--d", d]


def run(extra):
    p = subprocess.run(args + extra, capture_output=True, text=True)
    if p.returncode not in (0, 1):
        sys.exit(f"exit {p.returncode}: {p.stderr}")
    return p


first = json.loads(run(["--format", "json"]).stdout)
second = json.loads(run(["--format", "json"]).stdout)
for r in first + second:
    r.pop("elapsed_ms")
if first != second:
    sys.exit("json runs differ outside timing fields")
text = run([]).stdout
for r in first:
    head = f"{r['check_id']} (n={r['params']['n']}, d={r['params']['d']}, {r['params']['field']}): {r['status']}"
    if head not in text:
        sys.exit(f"text output lacks '{head}'")
print(f"{len(first)} reports stable; text and json statuses agree")
