#!/usr/bin/env python3
"""Runs polaris check on a few modules and validates each report against the schema.

Also checks exit codes and that reruns differ at most in timing_ms.
"""
import json
import subprocess
import sys

import jsonschema

polaris, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

cases = [
    (["A1: R1+R1", "--k", "2", "--backend", "exact"], 0, "fails_at"),
    (["B2: phi1", "--k", "5", "--max-degree", "6"], 0, "fails_at"),
    (["A4: phi1 * 2", "--k", "2", "--max-degree", "6"], 0, "holds_up_to"),
    (["A1: R3", "--k", "2"], 0, "fails_at"),
    (["A1: R4", "--k", "2", "--backend", "bound"], 0, "fails_at"),
    (["torus(1): [1,-1]", "--k", "2"], 0, "fails_at"),
    (["finite(weyl(B,2)): phi1", "--k", "2", "--max-degree", "6"], 0, "holds_up_to"),
    (["G2: phi1", "--k", "2", "--max-degree", "4", "--no-catalog", "--backend", "bound"], 2, "inconclusive"),
]

failed = 0


def run(args):
    return subprocess.run([polaris, "check", *args], capture_output=True, text=True)


for args, code, status in cases:
    first, second = run(args), run(args)
    problems = []
    if first.returncode != code:
        problems.append(f"exit {first.returncode}, expected {code}: {first.stderr.strip()}")
    else:
        report = json.loads(first.stdout)
        errors = sorted(validator.iter_errors(report), key=str)
        problems += [e.message for e in errors]
        if report["verdict"]["status"] != status:
            problems.append(f"status {report['verdict']['status']}, expected {status}")
        again = json.loads(second.stdout)
        report.pop("timing_ms")
        again.pop("timing_ms")
        if json.dumps(report) != json.dumps(again):
            problems.append("rerun differs")
        lines = [l for l in first.stdout.splitlines() if '"timing_ms"' not in l]
        if lines != [l for l in second.stdout.splitlines() if '"timing_ms"' not in l]:
            problems.append("rerun is not byte-identical outside timing_ms")
    print(("ok    " if not problems else "FAIL  ") + " ".join(args))
    for p in problems:
        print("      " + p)
    failed += bool(problems)

for args, code in [(["A1 R1", "--k", "2"], 1), (["A1: R1", "--k", "2", "--backend", "fast"], 1)]:
    r = run(args)
    ok = r.returncode == code and r.stdout == "" and r.stderr.startswith("error:")
    print(("ok    " if ok else "FAIL  ") + "error case " + " ".join(args))
    failed += not ok

sys.exit(1 if failed else 0)
