"""Integration tests for the pltower command-line tool.

usage: run_cli_tests.py <pltower binary> <data dir>
"""
import csv
import io
import json
import os
import re
import subprocess
import sys
import tempfile
from fractions import Fraction

TOOL, DATA = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    proc = subprocess.run([TOOL, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def check(name, cond, detail=""):
    print(("PASS " if cond else "FAIL ") + name + (": " + detail if detail and not cond else ""))
    if not cond:
        failures.append(name)


def parse_pl(text):
    pts = re.findall(r"\(([^,()]+),([^,()]+)\)", text)
    return [(float(Fraction(x)), float(Fraction(y))) for x, y in pts]


def eval_pl(pts, x):
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise ValueError(x)


env = os.path.join(DATA, "f.env")

rc, out, _ = run("--input", env, "eval", "x0", "1/2")
check("eval x0 1/2", rc == 0 and out.strip() == "1/4", out)

rc, out, _ = run("eval", "x0 x0", "3/4")
check("eval x0^2 at 3/4", rc == 0 and out.strip() == "1/4", out)

rc, out, _ = run("--input", env, "fixset", "x1")
check("fixset x1", rc == 0 and out.strip() == "[0,1/2] u {1}", out)

rc, out, _ = run("fixset", "[c,b]")
check("fixset [c,b]", rc == 0 and out.strip() == "(-inf,0] u [2,inf)", out)

with tempfile.TemporaryDirectory() as tmp:
    report = os.path.join(tmp, "r.json")
    rc, _, err = run("--input", env, "tower", "--germ-depth", "auto", "--out", report)
    check("tower writes a report", rc == 0 and os.path.exists(report), err)
    data = json.load(open(report))
    check("tower report l = 0", data["terminal"]["level"] == 0 and data["outcome"] == "terminated", str(data.get("terminal")))
    check("tower report partition", data["partition"]["points"] == ["0", "1"], str(data["partition"]))

    rc, out, err = run("--input", env, "verify", "--report", report)
    check("verify exits 0", rc == 0, out + err)

    data["steps"][0]["displacement"] = "f0"
    tampered = os.path.join(tmp, "bad.json")
    json.dump(data, open(tampered, "w"), indent=2)
    rc, out, err = run("--input", env, "verify", "--report", tampered)
    check("verify rejects a tampered word", rc == 1 and "steps[0].certificate" in out + err, out + err)

    rc, out, err = run("--input", os.path.join(DATA, "abc.env"), "tower", "--out", os.path.join(tmp, "abc.json"))
    check("projective tower", rc == 0, err)
    rc, out, err = run("--input", os.path.join(DATA, "abc.env"), "verify", "--report", os.path.join(tmp, "abc.json"))
    check("projective verify", rc == 0, out + err)

rc, out, err = run("--input", os.path.join(DATA, "bad.env"), "partition")
check("bad input exits 2", rc == 2 and "x-coordinates not increasing" in err, err)
check("bad input is located", "line 1" in err, err)

rc, out, err = run("eval", "nosuch", "1/2")
check("unbound name exits 2", rc == 2, err)

rc, out, err = run("--input", env, "displace", "--interval", "(1/4,1/2)")
check("displace uses the file generators", rc == 0 and "word: f0^2" in out, out + err)

rc, out, err = run("displace", "--gens", "x0,x1", "--interval", "(1/4,1/2)", "--strategy", "bfs", "--max-steps", "1")
check("bfs exhaustion exits 3", rc == 3, out + err)

# sampled values against an independent float evaluation of the printed map
rc, shown, _ = run("eval", "[x0,x1^-1] x1")
pts = parse_pl(shown)
rc2, out, err = run("sample", "[x0,x1^-1] x1", "--samples", "257")
ok = rc == 0 and rc2 == 0 and pts
worst = 0.0
rows = list(csv.DictReader(io.StringIO(out)))
for row in rows:
    x, y = float(row["x_decimal"]), float(row["y_decimal"])
    exact = float(Fraction(row["y"]))
    worst = max(worst, abs(eval_pl(pts, x) - y), abs(exact - y))
check("sample CSV within 1e-9", ok and len(rows) == 257 and worst <= 1e-9, "worst %g, %d rows" % (worst, len(rows)))

rc, out, err = run("selftest", "--samples", "20")
check("selftest", rc == 0 and "FAIL" not in out, out)

sys.exit(1 if failures else 0)
