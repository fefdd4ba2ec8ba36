"""Validate every CLI command's JSON output against the shipped schema."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

COMMANDS = [
    ["correspond", "--p", "5", "U:0,3"],
    ["correspond", "--p", "5", "M:0,0,1,-1"],
    ["correspond", "--p", "7", "V:4"],
    ["ind", "--p", "5", "U:0,5"],
    ["ind", "--p", "7", "U:3,4"],
    ["res", "--p", "5", "P:3"],
    ["res", "--p", "5", "V:2"],
    ["res", "--p", "7", "M:0,0,4,-1"],
    ["tables", "--p", "5", "cartan-B"],
    ["tables", "--p", "5", "cartan-G"],
    ["tables", "--p", "5", "quiver-B"],
    ["tables", "--p", "7", "hooks-G"],
    ["tables", "--p", "3", "brauer-trees"],
    ["verify", "--p", "3,5"],
    ["verify", "--p", "3", "--oracle"],
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft7Validator.check_schema(schema)
    with tempfile.TemporaryDirectory() as tmp:
        lift_in = os.path.join(tmp, "lift.json")
        with open(lift_in, "w") as f:
            json.dump({"ell": {"1": 4, "3": 3}, "res": [{"a": 0, "b": 3, "mult": 1}]}, f)
        commands = COMMANDS + [["lift", "--p", "5", lift_in]]
        for args in commands:
            out = subprocess.run([cli] + args, check=True, capture_output=True, text=True).stdout
            jsonschema.validate(json.loads(out), schema)
            print("ok", " ".join(args))


if __name__ == "__main__":
    main()
