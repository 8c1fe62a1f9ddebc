"""End-to-end checks of the socle3 executable: exit codes, reported values, schema, determinism."""

import json
import os
import subprocess
import sys

import jsonschema

BINARY, SCHEMA_PATH = sys.argv[1], sys.argv[2]
with open(SCHEMA_PATH, encoding="utf-8") as fh:
    SCHEMA = json.load(fh)
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)
failures = []


def run(*args, env=None):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, env=env, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run(*args, "--format", "json")
    check(code == 0, f"{args}: exit {code}: {err.strip()}")
    if code != 0:
        return None
    doc = json.loads(out)
    errors = sorted(VALIDATOR.iter_errors(doc), key=str)
    check(not errors, f"{args}: schema violation: {errors[0].message if errors else ''}")
    return doc


def check(ok, message):
    if not ok:
        failures.append(message)


def expect_exit(expected, fragment, *args, env=None):
    code, out, err = run(*args, env=env)
    check(code == expected, f"{args}: expected exit {expected}, got {code}")
    check(fragment in err, f"{args}: stderr lacks {fragment!r}: {err.strip()}")
    check(out == "", f"{args}: unexpected stdout on error")


# ann
doc = run_json("ann", "--h", "3", "--f", "y1^3+y2^3+y3^2")
if doc:
    r = doc["result"]
    check(r["dim"] == 7 and r["hf"] == [1, 3, 2, 1] and r["gorenstein"] is True, f"ann result {r}")
    check(list(doc) == ["command", "config", "result", "versions"], "top-level key order")
doc = run_json("ann", "--h", "1", "--f", "y1^3")
if doc:
    check(doc["result"]["hf"] == [1, 1, 1, 1], "ann y1^3 hf")
expect_exit(3, "zero dual generator", "ann", "--h", "2", "--f", "0")
expect_exit(2, "offset", "ann", "--h", "2", "--f", "y1^")
expect_exit(2, "", "ann", "--h", "2")
expect_exit(2, "", "frobnicate")

# structure
doc = run_json("structure", "--n", "2", "--h", "3", "--f3", "y1^3+y2^3")
if doc:
    r = doc["result"]
    check(r["sigma"] == "1/6*x1^3" and r["lemma_verified"] is True, f"structure result {r}")
doc = run_json("structure", "--n", "2", "--h", "2", "--f3", "y1^3+y2^3")
if doc:
    check(doc["result"]["branch"] == "annihilator" and doc["result"]["lemma_verified"] is True, "n = h branch")
expect_exit(3, "degenerate cubic", "structure", "--n", "2", "--h", "3", "--f3", "y1^3")

# poincare
doc = run_json("poincare", "--h", "3", "--f", "y1^3+y2^3+y3^2", "--N", "5")
if doc:
    r = doc["result"]
    check(r["direct"] == [1, 3, 8, 21, 55, 144], f"poincare direct {r['direct']}")
    check(r["predictions"]["proof_consistent"]["matches"] is True, "proof-consistent prediction")
    check(r["predictions"]["as_displayed"]["matches"] is False, "as-displayed prediction")
    check(r["fit"]["text"] == "1/(1-3z+z^2)", f"fit {r['fit']}")
doc = run_json("poincare", "--h", "1", "--f", "y1^3", "--N", "4")
if doc:
    preds = doc["result"]["predictions"]
    check(preds["proof_consistent"]["series"] == preds["as_displayed"]["series"] == [1, 1, 1, 1, 1], "h = n variants")
doc = run_json("poincare", "--h", "2", "--f", "y1^2+y2^2", "--N", "4")
if doc:
    check(doc["result"]["direct"] == [1, 2, 3, 4, 5] and doc["result"]["fit"]["text"] == "1/(1-z)^2", "quadric")
doc = run_json("poincare", "--h", "4", "--f", "y1^3+y2^3+y3^2+y4^2", "--N", "4", "--as-displayed")
if doc:
    r = doc["result"]
    check(r["selected_variant"] == "as_displayed" and r["selected_matches"] is False, "as-displayed selection")
    check(r["predictions"]["as_displayed"]["first_mismatch"] == 0, "as-displayed fails from z^0 when h - n = 2")
expect_exit(4, "SOCLE3_MAX_DIM", "poincare", "--h", "3", "--f", "y1^3+y2^3+y3^2", "--N", "6", "--max-dim", "50")
env = dict(os.environ, SOCLE3_MAX_DIM="50")
expect_exit(4, "resource limit", "poincare", "--h", "3", "--f", "y1^3+y2^3+y3^2", "--N", "6", env=env)

# deform
doc = run_json("deform", "--n", "2", "--h", "3", "--f3", "y1^3+y2^3", "--b", "0,1,-1,2,1/2")
if doc:
    r = doc["result"]
    check([f["dimension"] for f in r["fibers"]] == [7] * 5 and r["all_checks_pass"] is True, f"deform {r}")
doc = run_json("deform", "--n", "1", "--h", "2", "--f3", "y1^3", "--b", "0,1")
if doc:
    fibers = doc["result"]["fibers"]
    check([f["dimension"] for f in fibers] == [5, 5] and fibers[1]["residual_dimension"] == 4, "deform y1^3")
expect_exit(3, "family requires n < h", "deform", "--n", "2", "--h", "2", "--f3", "y1^3+y2^3")
expect_exit(2, "", "deform", "--n", "2", "--h", "3", "--f3", "y1^3+y2^3", "--b", "1/0")

# random
doc = run_json("random", "--n", "3", "--h", "4", "--trials", "5", "--seed", "42")
if doc:
    s = doc["result"]["summary"]
    check(s["lemma_verified"] == s["theorem_identity"] == s["flat_family"] == 5, f"random summary {s}")
doc = run_json("random", "--trials", "0")
if doc:
    check(doc["result"]["trials"] == [], "empty random report")

# determinism across processes
for args in (["random", "--n", "2", "--h", "4", "--trials", "4", "--seed", "7"],
             ["poincare", "--h", "3", "--f", "y1^3+y2^3+y3^2"]):
    first = run(*args, "--format", "json")
    second = run(*args, "--format", "json")
    check(first == second, f"{args}: output differs between runs")

# text output is non-empty and ends with a newline
code, out, _ = run("ann", "--h", "3", "--f", "y1^3+y2^3+y3^2")
check(code == 0 and out.endswith("\n") and "dim = 7" in out, "text output")

for f in failures:
    print("FAIL:", f)
print(f"{'OK' if not failures else 'FAILED'}: {len(failures)} failure(s)")
sys.exit(1 if failures else 0)
