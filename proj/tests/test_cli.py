#!/usr/bin/env python3
"""End-to-end checks of the ktree CLI: exit codes, formats, determinism."""

import json
import subprocess
import sys

CLI = sys.argv[1] if len(sys.argv) > 1 else "ktree"
failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, condition, detail=""):
    if condition:
        print(f"[ok] {name}")
    else:
        print(f"[FAIL] {name} {detail}")
        failures.append(name)


# rows: the phi table
r = run("rows", "golden:1,1", "--depth", "5")
check("rows exit 0", r.returncode == 0, r.stderr)
check(
    "rows phi table",
    r.stdout == "d,f_d,r_d\n0,1,1\n1,2,1\n2,4,2\n3,7,3\n4,12,5\n5,20,8\n",
    repr(r.stdout),
)

r = run("rows", "golden:1,1", "--depth", "4", "--format", "json")
check("rows json parses", r.returncode == 0 and json.loads(r.stdout)["f"] == ["1", "2", "4", "7", "12"])

# tree formats
r = run("tree", "3", "--depth", "2", "--format", "text")
check("tree text", r.stdout.startswith("0\n  1\n"), repr(r.stdout[:20]))
r = run("tree", "golden:1,1", "--depth", "4", "--format", "dot")
check("tree dot", r.returncode == 0 and "digraph ktree" in r.stdout and "n4 -> n7" in r.stdout)
r = run("tree", "3/2", "--depth", "4", "--format", "json")
check("tree json", json.loads(r.stdout)["rows"][4] == [5, 6, 7])

# decimals with zeros right after the point parse as exact rationals
r = run("sweep", "--kmin", "1.0008", "--kmax", "2", "--points", "3", "--iters", "5")
check("sweep kmin=1.0008", r.returncode == 0 and "10008,10000" not in r.stdout
      and r.stdout.count("\n") == 4, r.stderr)
check("sweep reduced grid fractions", "1251,1250," in r.stdout, r.stdout)

# deterministic output: identical invocations, identical bytes
a = run("sweep", "--kmin", "1.1", "--kmax", "2", "--points", "20", "--iters", "30")
b = run("sweep", "--kmin", "1.1", "--kmax", "2", "--points", "20", "--iters", "30")
check("sweep deterministic", a.returncode == 0 and a.stdout == b.stdout)
check("sweep stderr progress", "swept" in a.stderr, repr(a.stderr))
check("sweep header", a.stdout.startswith("k_num,k_den,n_iters,c_lo,c_hi,rho_lo,rho_hi,error\n"))
check("sweep row count", a.stdout.count("\n") == 21)

# rho
r = run("rho", "golden:1,1", "--iters", "60")
enc = json.loads(r.stdout)
check("rho json", r.returncode == 0 and enc["k"] == "quad:(1,1,5,2)")
check(
    "rho brackets the closed form 0.7236...",
    enc["rho_lo"] <= "0.723606797749978" <= enc["rho_hi"],
    r.stdout,
)

# verify: pass and failure exit codes
r = run("verify", "--a", "1", "--b", "1", "--depth", "30")
check("verify pass exit 0", r.returncode == 0 and json.loads(r.stdout)["pass"] is True)
r = run("verify", "--a", "5", "--b", "3", "--depth", "25")
check("verify (5,3) passes", r.returncode == 0)

# error discipline: JSON on stderr + documented exit codes
r = run("verify", "--a", "1", "--b", "2", "--depth", "25")
check("verify b=1+a exits 3", r.returncode == 3, str(r.returncode))
err = json.loads(r.stderr)
check("invalid-params error json", err["error"]["type"] == "invalid_params")
check("boundary k documented", "k = 2" in err["error"]["message"], r.stderr)

r = run("rows", "nonsense", "--depth", "3")
check("parse error exits 2", r.returncode == 2, str(r.returncode))
check("parse error json", json.loads(r.stderr)["error"]["type"] == "parse")

r = run("sweep", "--kmin", "2", "--kmax", "2", "--points", "5", "--iters", "5")
check("kmin=kmax is a usage error (exit 2)", r.returncode == 2, str(r.returncode))
check("sweep usage error json", json.loads(r.stderr)["error"]["type"] == "usage")

r = run("rows", "1.5000001", "--depth", "40")
check("approx precision exhaustion exits 4", r.returncode == 4, str(r.returncode))
check("precision error json", json.loads(r.stderr)["error"]["type"] == "precision_exhausted")

r = run("tree", "3", "--depth", "10", "--max-nodes", "100")
check("size limit exits 5", r.returncode == 5, str(r.returncode))
check("size error json", json.loads(r.stderr)["error"]["type"] == "size_limit")

r = run("tree", "3")
check("missing --depth exits 2", r.returncode == 2, str(r.returncode))

# indicators: lines and scatter
r = run("indicators", "--a", "5", "--b", "3", "--samples", "16")
check("indicator lines csv", r.returncode == 0 and r.stdout.startswith("x,i,f_i,range_class\n"))
check("six lines at x=0", r.stdout.count("0.000000000000000,") == 6, r.stdout[:200])
r = run("indicators", "--k", "golden:1,1", "--nmax", "50")
check("scatter csv", r.returncode == 0 and r.stdout.count("\n") == 51)

# josephus
r = run("josephus", "--q", "2", "--eps", "1/1000", "--eps", "1/1000000", "--iters", "200")
rep = json.loads(r.stdout)
check("josephus rows", r.returncode == 0 and len(rep["rows"]) == 5)
check("josephus at-point c(2)=1", rep["rows"][0]["c_lo"] == "1.000000000000000")

# --meta adds comments without breaking determinism
a = run("rows", "golden:1,1", "--depth", "3", "--meta")
check("meta header", a.stdout.startswith("# k = quad:(1,1,5,2)\n"), repr(a.stdout[:40]))

# --out writes the same bytes to a file
import os
import tempfile

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "rows.csv")
    r = run("rows", "golden:1,1", "--depth", "5", "--out", path)
    with open(path, "rb") as fh:
        on_disk = fh.read()
    direct = run("rows", "golden:1,1", "--depth", "5").stdout.encode()
    check("--out file matches stdout bytes", r.returncode == 0 and on_disk == direct)

# degenerate depth 0
r = run("tree", "3", "--depth", "0", "--format", "text")
check("tree depth 0", r.returncode == 0 and r.stdout == "0\n", repr(r.stdout))
r = run("rows", "3", "--depth", "0")
check("rows depth 0", r.returncode == 0 and r.stdout == "d,f_d,r_d\n0,1,1\n", repr(r.stdout))

print()
if failures:
    print(f"{len(failures)} CLI checks FAILED: {failures}")
    sys.exit(1)
print("all CLI checks passed")
