"""The command line tool on a small file, one subcommand at a time.

Builds the ground field and an unrelated bad table in a temporary directory,
then runs each subcommand and prints its exit code.  Exit 0 means every
requested check passed, 1 means a violation, 2 means bad input.

Run:  python demos/cli_walkthrough.py
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from bihomsuper import generate as g
from bihomsuper.operators import ROTA_BAXTER, OperatorSpec
from bihomsuper.workspace import Workspace, dump

tmp = Path(tempfile.mkdtemp())
K = g.ground_field()
ws = Workspace(K)
ws.operators["id"] = OperatorSpec(ROTA_BAXTER, K.alpha, -1)
ws.maps["minus_id"] = -K.alpha
dump(ws, tmp / "unit_line.json")

# A two dimensional table that is not associative: e.e = f, f.e = e.
bad = {"version": 1, "structure": {
    "variety": "associative", "space": {"even": ["e", "f"], "odd": []},
    "alpha": [["e", "e", "1"], ["f", "f", "1"]], "beta": [["e", "e", "1"], ["f", "f", "1"]],
    "products": {"product": [["e", "e", "f", "1"], ["f", "e", "e", "1"]]}}}
(tmp / "bad.json").write_text(json.dumps(bad))


def run(*args):
    cmd = [sys.executable, "-m", "bihomsuper"] + [str(a) for a in args]
    print("\n$ bihomsuper " + " ".join(str(a) for a in args).replace(str(tmp) + "/", ""))
    out = subprocess.run(cmd, capture_output=True, text=True)
    print((out.stdout + out.stderr).rstrip())
    print("[exit %d]" % out.returncode)


print("files in", tmp)
print((tmp / "unit_line.json").read_text())
run("check", tmp / "unit_line.json", "--rota-baxter", "id")
run("check", tmp / "unit_line.json", "--rota-baxter", "minus_id", "--weight", -1)
run("--witness-cap", 2, "check", tmp / "bad.json")
run("--output", "json", "search", tmp / "unit_line.json", "--weight", "-1",
    "--grid", "-2,-1,0,1,2", "--shape", "diagonal")
run("cohomology", tmp / "unit_line.json", "--n-max", 3)  # wrong variety: exit 2
run("construct", tmp / "unit_line.json", "--recipe", "prelie-from-rb-assoc",
    "--operator", "id", "-o", tmp / "prelie.json")
run("report", tmp / "prelie.json")
run("cohomology", tmp / "prelie.json", "--n-max", 3)
run("check", tmp / "missing.json")
