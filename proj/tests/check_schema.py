#!/usr/bin/env python3
"""Runs relog subcommands with --format json and validates each document."""
import json
import subprocess
import sys

import jsonschema

exe, schema_path, data = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    (["subalgebras"], 0),
    (["congruences", "--principal", "f,t", "--subuniverse", "bot,t,f,top"], 0),
    (["check", "--property", "cep", "--algebra", "belnap-m"], 1),
    (["check", "--property", "extensible"], 0),
    (["homs", "--target", "boolean2", "--kind", "embedding"], 1),
    (["autos"], 0),
    (["amalgamate", "--apex", "bot,top", "--left", "bot,a,top", "--right", "bot,b,top"], 0),
    (["entails", "--premises", "p", "--conclusion", "q"], 1),
    (["entails", "--premises", "p & q", "--conclusion", "p"], 0),
    (["entails", "--conclusion", "p &"], 2),
    (["interpolate", "--gamma", "p & q", "--alpha", "q | r"], 0),
    (["interpolate", "--problem", data + "/problem.json"], 0),
    (["interpolate", "--sigma", "p", "--gamma", "q", "--alpha", "p"], 2),
    (["vsp-scan", "--algebra", "boolean2"], 1),
    (["free-algebra", "--generators", "1"], 0),
    (["validate", "--algebra", data + "/crystal_negswap.alg"], 1),
    (["validate", "--algebra", "/nonexistent.alg"], 2),
    (["reproduce", "--instances", "20"], 0),
    (["reproduce", "--instances", "20", "--cap-elements", "1"], 1),
]

bad = 0
for args, code in runs:
    proc = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
    label = " ".join(args)
    try:
        doc = json.loads(proc.stdout)
        validator.validate(doc)
        if proc.returncode != code or doc["exit_code"] != code:
            raise ValueError(f"exit {proc.returncode}, reported {doc['exit_code']}, want {code}")
        print(f"ok    {label}")
    except Exception as e:  # noqa: BLE001
        bad += 1
        print(f"FAIL  {label}: {e}")
sys.exit(1 if bad else 0)
