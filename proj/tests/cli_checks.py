"""End-to-end checks for the bincover executable.

usage: cli_checks.py <bincover> <schemas dir>
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f"  ({detail})" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def validated(command, *args):
    code, out, err = run(*args)
    if code != 0:
        check(f"{command} {' '.join(args)} exits 0", False, err.strip())
        return None
    doc = json.loads(out)
    schema = json.loads((SCHEMAS / f"{command}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
        check(f"schema {command} [{' '.join(args[1:])}]", True)
    except jsonschema.ValidationError as e:
        check(f"schema {command} [{' '.join(args[1:])}]", False, e.message)
    return doc


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    fam = tmp / "one_border.txt"

    code, out, err = run("generate", "--family", "dnf-one-border", "--x", "2", "--n", "1", "--out", str(fam))
    check("generate writes a sequence", code == 0 and fam.exists(), err)
    sidecar = json.loads((tmp / "one_border.txt.json").read_text())
    claims = {c["subject"]: c["expected"] for c in sidecar["claims"]}

    doc = validated("run", "run", "--alg", "dnf", "--input", str(fam))
    check("run dnf covers 2 bins", doc is not None and doc["result"]["covered"] == 2)
    check("run dnf matches generated claim", doc is not None and doc["result"]["covered"] == claims["DNF"])
    validated("run", "run", "--alg", "dh3", "--input", str(fam), "--trace")
    validated("run", "--mode", "float", "run", "--alg", "dnf", "--input", str(fam))

    code, out, err = run("run", "--alg", "dhk", "--k", "0", "--input", str(fam))
    check("k = 0 is a usage error", code == 2 and "k must be ≥ 1" in err, f"exit {code}: {err.strip()}")

    code, _, err = run("run", "--alg", "dnf", "--input", str(fam), "--no-such-flag")
    check("unknown flag rejected", code == 2, f"exit {code}")
    code, _, err = run("frobnicate")
    check("unknown subcommand rejected", code == 2, f"exit {code}")
    code, _, err = run("run", "--input", str(tmp / "missing.txt"))
    check("missing input is a usage error", code == 2, f"exit {code}")
    bad = tmp / "bad.txt"
    bad.write_text("1/2\n3/2\n")
    code, _, err = run("run", "--input", str(bad))
    check("item outside (0,1) rejected", code == 2 and "line 2" in err, err.strip())
    code, _, err = run("--format", "yaml", "analytic", "--k", "2")
    check("bad --format rejected", code == 2, f"exit {code}")

    code, out, _ = run("analytic", "--k", "2")
    rows = out.strip().splitlines()
    check("analytic defaults to csv", rows[0] == "k,r_large,r_small,total,dnf_reference", rows[0])
    total = float(rows[1].split(",")[3])
    check("analytic k=2 total", abs(total - 0.714097) < 1e-6, str(total))
    doc = validated("analytic", "--format", "json", "analytic", "--k-min", "2", "--k-max", "6")
    if doc:
        totals = [float(r["total"]) for r in doc["result"]["rows"]]
        check("analytic totals decrease in k", all(a > b for a, b in zip(totals, totals[1:])), str(totals))

    for family, extra in [
        ("dnf-one-border", ["--x", "3", "--n", "2"]),
        ("dhk-one-border", ["--p", "3", "--n", "2"]),
        ("dnf-two-border", ["--p", "3", "--n", "2"]),
        ("dhk-two-border", ["--p", "3", "--n", "2"]),
        ("rwor", ["--n", "2"]),
        ("minmin-worst", ["--p", "2", "--b", "3/5", "--eps", "1/100", "--bins", "3"]),
        ("minmin-opt-worst", ["--p", "3", "--eps", "1/100", "--bins", "3"]),
        ("two-size", ["--l", "3", "--s", "3"]),
        ("uniform", ["--n", "5"]),
    ]:
        validated("generate", "generate", "--family", family, *extra)
    code, _, _ = run("generate", "--family", "nope")
    check("unknown family rejected", code == 2, f"exit {code}")

    doc = validated("worst-order", "worst-order", "--alg", "dnf", "--input", str(fam))
    check("worst order is exact and at most the given order", doc is not None and doc["result"]["exact"]
          and doc["result"]["value"] <= 2)
    doc = validated("worst-order", "worst-order", "--alg", "dh2", "--input", str(fam), "--sampled", "--samples", "50")
    check("sampled worst order is labeled", doc is not None and doc["result"]["method"] == "sampled"
          and not doc["result"]["exact"])

    doc = validated("random-order", "random-order", "--input", str(fam), "--samples", "300")
    check("random-order estimate labeled approximate", doc is not None and doc["result"]["approximate"] is True)
    doc = validated("random-order", "random-order", "--l", "20", "--s", "20", "--samples", "300")
    check("random-order experiment passes", doc is not None and doc["ok"])

    doc = validated("minmin", "minmin", "--a", "1/4", "--b", "2/5")
    check("minmin dnf on (1/4,2/5)", doc is not None and doc["result"]["dnf"] == "20/21")
    doc = validated("minmin", "--mode", "float", "minmin", "--a", "1/4", "--b", "2/5")
    check("float mode prints numbers", doc is not None and abs(doc["result"]["dnf"] - 20 / 21) < 1e-11)

    doc = validated("table", "table", "--a", "1/4", "--b", "2/5")
    check("table one-border", doc is not None and doc["result"]["case"] == "one-border")
    code, _, err = run("table", "--a", "0", "--b", "1")
    check("table without a border is an error", code == 2, f"exit {code}")

    doc = validated("uniform", "uniform", "--alg", "dnf", "--n", "5000", "--trials", "4")
    check("uniform dnf passes", doc is not None and doc["ok"])
    code, out, err = run("uniform", "--alg", "dnf", "--n", "5000", "--trials", "4", "--tolerance", "1e-9")
    check("failed expectation exits 1", code == 1 and "expectation failed" in err, f"exit {code}")
    code, out, _ = run("--format", "csv", "uniform", "--alg", "dh3", "--n", "2000", "--trials", "3")
    check("csv check header",
          out.splitlines()[0] == "experiment,check,observed,expected,tolerance,pass,source", out.splitlines()[0])

    doc = validated("report", "report", "--experiment", "sweep", "--sweep-n", "60")
    check("sweep passes", doc is not None and doc["ok"])
    doc = validated("report", "report", "--experiment", "uniform", "--n", "3000", "--trials", "3")
    check("no timing unless asked", doc is not None and all("wall_clock_ms" not in r for r in doc["result"]["reports"]))
    doc = validated("report", "--timing", "report", "--experiment", "uniform", "--n", "3000", "--trials", "3")
    check("timing on request", doc is not None and all("wall_clock_ms" in r for r in doc["result"]["reports"]))

    args = ["--seed", "7", "uniform", "--alg", "dh2", "--n", "3000", "--trials", "3"]
    first, second = run(*args)[1], run(*args)[1]
    check("same seed gives identical bytes", first == second)
    third = run("--seed", "8", *args[2:])[1]
    check("different seed changes the draw", first != third)
    check("jobs do not change results", run("--jobs", "4", *args)[1] == first)

if failures:
    print(f"{len(failures)} failure(s)")
    sys.exit(1)
print("all cli checks passed")
