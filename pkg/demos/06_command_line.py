"""Drive the command-line tool from a spec file.

Equivalent shell session:

    hyperwalk simulate --spec grover.json --state 0,0 --steps 4
    hyperwalk chain-size --spec grover.json --transform <chain>
    hyperwalk verify --spec grover.json --transform coined_from_hyperwalk --steps 10
"""

import json
import tempfile
from pathlib import Path

from hyperwalk import HYPERWALK_TO_SZEGEDY, example_hypergraph
from hyperwalk.cli import main
from hyperwalk.serialization import hypergraph_to_doc

tmp = Path(tempfile.mkdtemp())
spec = tmp / "grover.json"
spec.write_text(
    json.dumps(
        {
            "model": "hyperwalk",
            "structure": hypergraph_to_doc(example_hypergraph()),
            "schedule": [{"coins": "grover", "shifts": "grover"}] * 2,
        },
        indent=1,
    )
)
print(spec.read_text())

print("$ hyperwalk simulate ...")
main(["simulate", "--spec", str(spec), "--state", "0,0", "--steps", "2"])

print("\n$ hyperwalk chain-size ...")
main(["chain-size", "--spec", str(spec), "--transform", ",".join(HYPERWALK_TO_SZEGEDY)])

print("\n$ hyperwalk verify ...")
code = main(["verify", "--spec", str(spec), "--transform", "coined_from_hyperwalk", "--steps", "10"])
print("exit code", code)
