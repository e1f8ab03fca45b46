"""Runs every strata subcommand and validates its JSON against the output schema."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema


def main():
    strata, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    relation = dict(schema, **{"$ref": "#/$defs/relation"})
    relation.pop("allOf")
    relation.pop("required")
    relation.pop("properties")
    relation_validator = jsonschema.Draft202012Validator(relation)

    # The schema must reject an output that lacks the command's fields.
    stub = {"report": {"command": "bounds", "inputs": {}, "certificates_used": [], "certificates_produced": [],
                       "seconds": 0}}
    if validator.is_valid(stub) or relation_validator.is_valid({"mu": [2, 2]}):
        print("FAIL schema accepts incomplete documents")
        return 1

    tmp = tempfile.mkdtemp()
    rel_file = os.path.join(tmp, "rel.json")
    runs = [
        (["bounds", "2,2"], 0),
        (["bounds", "3,2^4"], 0),
        (["classify", "3,2,2"], 0),
        (["classify", "5,3"], 0),
        (["classify", "2,1,1,1", "--configs", "2"], 0),
        (["examples"], 0),
        (["examples", "--run"], 0),
        (["orbit-rank", "2,1,1", "--roots", "0,1,-1"], 0),
        (["orbit-rank", "3,1", "--roots", "inf,0"], 0),
        (["parking", "3,2,2"], 0),
        (["parking", "3,1"], 0),
        (["numsearch", "2,2", "--len", "3", "--budget", "300", "--out", rel_file], 0),
        (["numsearch", "3,2", "--len", "3", "--budget", "5"], 0),
        (["table", "--max-d", "4"], 0),
    ]
    failures = 0
    for args, code in runs:
        p = subprocess.run([strata] + args, capture_output=True, text=True)
        label = " ".join(args)
        if p.returncode != code:
            print(f"FAIL {label}: exit {p.returncode}, expected {code}\n{p.stderr}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(p.stdout)), key=str)
        for e in errors[:3]:
            print(f"FAIL {label}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")

    with open(rel_file) as f:
        errors = list(relation_validator.iter_errors(json.load(f)))
    for e in errors[:3]:
        print(f"FAIL relation file: {e.message}")
    failures += bool(errors)
    p = subprocess.run([strata, "verify", rel_file], capture_output=True, text=True)
    if p.returncode != 0:
        print(f"FAIL verify of emitted relation: exit {p.returncode}")
        failures += 1
    else:
        errors = list(validator.iter_errors(json.loads(p.stdout)))
        failures += bool(errors)
        print("ok   verify emitted relation" if not errors else f"FAIL verify output: {errors[0].message}")

    for args in (["bounds", "0,1"], ["nonsense"], ["bounds"]):
        p = subprocess.run([strata] + args, capture_output=True, text=True)
        if p.returncode != 1 or not p.stderr:
            print(f"FAIL {' '.join(args)}: exit {p.returncode}, stderr {p.stderr!r}")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
