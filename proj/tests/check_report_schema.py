#!/usr/bin/env python3
# Copyright 2026 The ticodes Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs every subcommand with --json, validates the reports against the
schema and checks that reruns are byte-identical apart from timing."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    cli, data = sys.argv[1], Path(sys.argv[2])
    schema = json.loads((data / "schema" / "report.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(schema)
    fx = data / "fixtures"
    invocations = [
        ["check", fx / "decomposable.code"],
        ["check", fx / "haah.code"],
        ["classify", fx / "gross.code"],
        ["lift", fx / "three_variable.code"],
        ["compactify", fx / "hhb_a.code"],
        ["compactify", "--erratum", fx / "hhb_a.code"],
        ["instantiate", fx / "gross.code"],
        ["instantiate", fx / "ising.code"],
        ["params", fx / "toric.code"],
        ["params", fx / "newman_moore.code"],
        ["distance", "--exact-cap", "32", fx / "toric.code"],
        ["--seed", "3", "distance", "--method", "random", "--trials", "200", fx / "toric.code"],
        ["distance", fx / "ising.code"],
        ["barrier", "--emit-path", fx / "newman_moore.code"],
        ["bounds", "--n", "288", "--d", "12", fx / "gross.code"],
        ["reproduce-appendix", "--dir", fx],
    ]
    failures = 0
    for args in invocations:
        argv = [cli, "--json", "--no-cache"] + [str(a) for a in args]
        runs = []
        for _ in range(2):
            proc = subprocess.run(argv, capture_output=True, text=True)
            if proc.returncode != 0:
                print(f"FAIL {' '.join(map(str, args))}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                break
            runs.append(proc.stdout)
        if len(runs) != 2:
            continue
        errors = sorted(validator.iter_errors(json.loads(runs[0])), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL {' '.join(map(str, args))}: {'/'.join(map(str, e.path))}: {e.message}")
            failures += 1
        # Keys are sorted, so "timing" is the last member: compare everything before it.
        if runs[0].split('"timing"')[0] != runs[1].split('"timing"')[0]:
            print(f"FAIL {' '.join(map(str, args))}: reruns differ")
            failures += 1
        if not errors:
            print(f"ok   {' '.join(map(str, args))}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
