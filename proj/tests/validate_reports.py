#!/usr/bin/env python3
# Copyright 2026 The strongirr Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the CLI with --json over a fixed command list and checks that every
report validates against the schema, that the reported exit code matches
the process exit code, and that output minus timing is byte-identical
across repeated runs."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    (["check-irred", "x1^2 - x2^2"], 1),
    (["check-irred", "x1 - x1^-1*x2^2", "--laurent"], 1),
    (["check-irred", "1 + x1 - x2"], 0),
    (["check-strong-irred", "1 + x1 - x2 + x3 - x4"], 0),
    (["check-strong-irred", "x1*x2 - 1"], 1),
    (["check-strong-irred", "x1*x2 - 2"], 2),
    (["check-strong-irred", "--family", "F2", "--k", "1,1,1"], 0),
    (["check-strong-irred", "1 + + x1"], 3),
    (["check-strong-irred", "x1^3 + x2^3 + x3^3 + x1*x2*x3 + 1", "--gb-steps", "0"], 4),
    (["check-coprime", "--p", "1 + x1 - x2", "--q", "x1 - 2"], 0),
    (["check-coprime", "--p", "1 + x1 - x2", "--q", "1 - x1 + x2"], 1),
    (["check-vector-coprime", "--p", "1 + x1 - x2; x1 + 3", "--q", "1 + x1 - x2; 1 + x1 - x2"], 0),
    (["gen-family", "--family", "F1", "--n", "2", "--limit", "5"], 0),
    (["gen-family", "--family", "F1", "--k", "1,2"], 3),
    (["slice-poly", "1 + x1 - x2"], 0),
    (["elementary-ideal", "--matrix", '{"vars":2,"matrix":[["1+x1-x2",0],[0,"x1*x2-3"]]}', "--k", "1"], 0),
    (["elementary-ideal", "--matrix", '{"vars":2,"matrix":[["x1"]]', "--k", "0"], 3),
    (["divisorial-hull", "--gens", "x1 - 1; x2 - 1"], 0),
    (["torsion-alex", "--braid", "s1 s1 s1", "--strands", "2"], 0),
    (["torsion-alex", "--matrix", '{"vars":1,"cols":1,"matrix":[]}'], 0),
    (["braid-alex", "--braid", "s1 s2^-1 s1 s2^-1", "--strands", "3"], 0),
    (["braid-alex", "--braid", "s3", "--strands", "3"], 3),
    (["verify-ribbon", "--family", "F1", "--k", "1,1,1,1"], 0),
    (["verify-ribbon", "x1 - 1"], 3),
    (["blanchfield-witness", "--p", "1 + x1 - x2", "--f", "1"], 0),
    (["blanchfield-witness", "--p", "1 + x1 - x2", "--f", "(1 + x1 - x2)*x2"], 3),
    (["reduce-ideal", "--p", "1 + x1 - x2", "--q", "x1*x2 - 3", "--gens", "1,3;2,1"], 0),
    (["genericity", "--vars", "3", "--degree", "2", "--trials", "40", "--seed", "7"], 0),
]


def run(cli, args):
    proc = subprocess.run([cli] + args + ["--json"], capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout


def strip_timing(text):
    doc = json.loads(text)
    doc.pop("timing", None)
    return json.dumps(doc, sort_keys=False)


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, expected in CASES:
        code, out = run(cli, args)
        label = " ".join(args)
        try:
            doc = json.loads(out)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: output is not JSON ({e})")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
            failures += 1
        if code != expected or doc.get("exit_code") != code:
            print(f"FAIL {label}: exit {code}, report says {doc.get('exit_code')}, expected {expected}")
            failures += 1
        code2, out2 = run(cli, args)
        if code2 != code or strip_timing(out2) != strip_timing(out):
            print(f"FAIL {label}: output differs between runs")
            failures += 1
    # Thread count must not change genericity output.
    base = ["genericity", "--vars", "3", "--degree", "2", "--trials", "60", "--seed", "3"]
    outs = {strip_timing(run(cli, base + ["--threads", str(t)])[1]) for t in (1, 2, 4)}
    if len(outs) != 1:
        print("FAIL genericity output depends on the thread count")
        failures += 1
    print(f"{len(CASES)} cases, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
