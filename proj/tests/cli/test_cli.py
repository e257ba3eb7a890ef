"""Smoke tests for the heckekit command-line tool."""
import csv
import io
import json
import os
import subprocess
import sys

EXE = sys.argv[1]


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("HECKEKIT_FORMAT", None)
    if env:
        e.update(env)
    p = subprocess.run([EXE, *args], capture_output=True, text=True, env=e)
    return p.returncode, p.stdout, p.stderr


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


rc, out, _ = run("cusps", "6")
check(rc == 0, "cusps exit code")
env = json.loads(out)
check(env["command"] == "cusps" and env["format"] == "json", "envelope fields")
check(len(env["payload"]) == 4, "cusps 6 has 4 rows")

rc, out, _ = run("--format", "csv", "cusps", "36")
rows = list(csv.reader(io.StringIO(out)))
check(rows[0][0] == "cusp" and len(rows) == 13, "cusps 36 csv has header + 12 rows")

rc, out, _ = run("kloosterman", "1", "1", "1", "--cusps", "1,1", "--cmax", "5", "--method", "brute")
check(rc == 0, "kloosterman exit code")
last = json.loads(out)["payload"][-1]
check(last["c"] == 5 and abs(last["value"][0] - 0.3819660) < 1e-6, "S(1,1;5)")

rc, out, _ = run("kloosterman", "1", "1", "1", "--cmax", "5", env={"HECKEKIT_FORMAT": "csv"})
check(out.splitlines()[0] == "c,re,im", "format from environment, complex as two columns")

rc, out, _ = run("verify", "HURWITZ_SUM", "--param", "q=12", "--param", "m=5")
check(rc == 0 and json.loads(out)["payload"]["pass"], "verify HURWITZ_SUM passes")

a = run("verify", "RAMANUJAN_CONV", "--seed", "5", "--trunc", "256")
b = run("verify", "RAMANUJAN_CONV", "--seed", "5", "--trunc", "256")
check(a == b and a[0] == 0, "byte-identical verify output")

rc, out, _ = run("verify", "XY_CLOSED", "--tol", "0")
check(rc == 1 and not json.loads(out)["payload"]["pass"], "a failing check exits 1")

rc, out, _ = run("verify-all", "--filter", "KLOOSTERMAN", "--jobs", "2")
payload = json.loads(out)["payload"]
check(rc == 0 and payload["all_pass"] and payload["count"] == 3, "verify-all with filter")
check([r["id"] for r in payload["reports"]] == ["KLOOSTERMAN_CLOSED", "KLOOSTERMAN_SPECIAL", "KLOOSTERMAN_FACT"],
      "verify-all keeps registry order")

rc, out, _ = run("scattering", "6", "--s", "0.3,2")
p = json.loads(out)["payload"]
check(rc == 0 and len(p["entries"]) == 4 and p["unitarity_residual"] < 1e-8, "scattering 6")

rc, out, _ = run("eisenstein", "1", "1", "1", "--s", "2,0")
phi = json.loads(out)["payload"]["phi"]
check(rc == 0 and abs(phi[1]) < 1e-12, "phi is real on the real axis")

for args in [("verify", "NO_SUCH_ID"), ("verify", "HURWITZ_SUM", "--param", "bogus=1"), ("cusps",),
             ("cusps", "x"), ("eisenstein", "4", "1", "1"), ("kloosterman", "6", "1", "1", "--cusps", "2"),
             ("--format", "xml", "cusps", "6")]:
    rc, _, err = run(*args)
    check(rc == 2, "usage error exit 2 for %s" % (args,))

rc, _, err = run("moment", "--T", "3", "--coeffs", "1,1", "--height", "6")
check(rc == 1 and "TailError" in err, "computation error exit 1")

rc, out, _ = run("moment", "--T", "3", "--coeffs", "1,1")
m = json.loads(out)["payload"]
check(rc == 0 and abs(m["difference"]) < 1e-6, "moment paths agree")

print("cli smoke tests passed")
