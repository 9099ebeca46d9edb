#!/usr/bin/env python3
"""Black-box checks of the cauchy2 executable: exit codes, output shape, report schema."""

import json
import os
import subprocess
import sys
import tempfile
from decimal import Decimal, getcontext
from fractions import Fraction

import jsonschema

getcontext().prec = 60
EXE = sys.argv[1]
SCHEMA = sys.argv[2]


def run(*args, env=None, expect=0):
    full_env = dict(os.environ)
    full_env.pop("CAUCHY2_PRECISION", None)
    if env:
        full_env.update(env)
    p = subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env, timeout=300)
    if p.returncode != expect:
        sys.exit(f"{args}: exit {p.returncode}, expected {expect}\nstdout:\n{p.stdout}\nstderr:\n{p.stderr}")
    return p.stdout


def compute():
    rows = run("compute", "--n-max", "6", "--format", "csv").strip().splitlines()
    assert rows[0] == "n,c_n,mu_n,c_n_decimal,mu_n_decimal", rows[0]
    assert len(rows) == 8
    assert rows[-1].startswith("6,19087/84,"), rows[-1]
    rows = run("compute", "--n-max", "0").strip().splitlines()
    assert len(rows) == 2 and rows[1].split("\t")[:2] == ["0", "1"], rows
    data = json.loads(run("compute", "--n-max", "50", "--format", "json"))
    assert len(data["rows"]) == 51 and data["routes_agree"] is True
    for r in data["rows"]:
        c, mu = Fraction(r["c"]), Fraction(r["mu"])
        assert c > 0 and mu > 0
    run("compute", "--n-max", "300", expect=1)
    run("compute", "--n-max", "300", "--table-bound", "300")
    run("compute", "--n-max", "-3", expect=1)
    run("compute", "--format", "xml", expect=1)
    run("frobnicate", expect=1)


def quad():
    out = json.loads(run("quad", "--n", "1", "--tol", "1e-15", "--format", "json"))
    assert out["converged"] and float(out["deviation"]) <= 1e-14
    assert out["reference_exact"] == "1/2"
    out = json.loads(run("quad", "--n", "0", "--format", "json"))
    assert abs(float(out["value"]) - 1.0) < 1e-20
    out = json.loads(run("quad", "--n", "20", "--tol", "1e-12", "--format", "json"))
    assert out["converged"] and float(out["deviation"]) <= 1e-11
    run("quad", "--n", "4", "--rule", "cc", "--tol", "1e-15")
    run("quad", "--n", "2", "--tol", "abc", expect=1)
    run("quad", "--n", "2", "--tol", "0", expect=1)
    # 64 bits cannot carry 1e-30; the doubling gives up
    run("quad", "--n", "30", "--tol", "1e-30", "--precision", "64", expect=3)
    text = run("quad", "--n", "3", "--format", "csv").splitlines()
    assert text[0].startswith("integral,value,error_estimate") and len(text) == 2


def eval_():
    out = json.loads(run("eval", "F", "--z", "1", "--format", "json"))
    assert abs(float(out["value"]) - 0.72134752044448170368) < 1e-15
    assert out["within_10_tol"] and float(out["deviation"]) <= 1e-20
    out = json.loads(run("eval", "h", "--n", "2", "--t", "0", "--format", "json"))
    assert abs(float(out["value"]) - 5 / 12) < 1e-15 and out["reference_exact"] == "5/12"
    out = json.loads(run("eval", "hs", "--s", "0.5", "--t", "0", "--format", "json"))
    assert 0.5 < float(out["value"]) < 1.0
    out = json.loads(run("eval", "dh", "--n", "1", "--k", "1", "--t", "0", "--format", "json"))
    assert abs(float(out["value"]) + 5 / 6) < 1e-15
    run("eval", "F", "--z", "-1", expect=1)
    run("eval", "h", "--n", "1", "--t", "-0.5", expect=1)
    run("eval", "hs", "--s", "-1", expect=1)
    run("eval", "G", expect=1)


def check_report(rep):
    jsonschema.validate(rep, json.load(open(SCHEMA)))
    total = passed = failed = disc = 0
    for s in rep["suites"]:
        assert s["passed"] + s["failed"] == len(s["cases"]), s["suite"]
        failing = {c["key"] for c in s["cases"] if not c["holds"]}
        assert set(s["counterexamples"]) <= failing, s["suite"]
        for c in s["cases"]:
            for side in ("lhs", "rhs", "margin"):
                v = c[side]
                f = Fraction(int(v["num"]), int(v["den"]))
                assert f.denominator == int(v["den"])
                if f != 0:
                    exact = Decimal(f.numerator) / Decimal(f.denominator)
                    assert abs(Decimal(v["decimal"]) - exact) <= Decimal("1e-25") * abs(exact), (c["key"], side)
        total += len(s["cases"])
        if s["suite"] == "thm3-plain":
            disc += len(s["cases"])
        else:
            passed += s["passed"]
            failed += s["failed"]
    sm = rep["summary"]
    assert (sm["cases"], sm["passed"], sm["failed"], sm["discrepancy_cases"]) == (total, passed, failed, disc)


def verify():
    rep = json.loads(run("verify", "--suite", "all", "--n-bound", "30", "--format", "json"))
    check_report(rep)
    assert rep["summary"]["passed"] > 0 and rep["summary"]["failed"] == 0
    assert len(rep["discrepancies"]) == 1
    d = rep["discrepancies"][0]
    assert d["suite"] == "thm3-plain" and d["first_counterexample"]["key"].startswith("m=1,n=1,")
    assert d["first_counterexample"]["lhs"]["num"] == "-1" and d["first_counterexample"]["lhs"]["den"] == "2"

    rep = json.loads(run("verify", "--suite", "logconvex", "--n-bound", "100", "--format", "json"))
    check_report(rep)
    assert len(rep["suites"]) == 1 and len(rep["suites"][0]["cases"]) == 99

    rep = json.loads(run("verify", "--suite", "minimality", "--epsilon", "1/1000", "--depth", "200",
                         "--format", "json"))
    check_report(rep)
    case = rep["suites"][0]["cases"][0]
    assert case["extras"]["outcome"] in ("witness", "not_found_within_depth"), case["extras"]

    csv = run("verify", "--suite", "thm5", "--format", "csv").splitlines()
    assert csv[0] == "suite,key,lhs,relation,rhs,holds,margin"
    assert len(csv) == 221

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "r.json")
        assert run("verify", "--suite", "thm6", "--out", path, "--format", "json") == ""
        check_report(json.load(open(path)))

    run("verify", "--suite", "nonsense", expect=1)
    run("verify", "--suite", "logconvex", "--n-bound", "400", expect=1)
    run("verify", "--suite", "logconvex", "--epsilon", "x", expect=1)


def precision_env():
    # the environment sets the default; the flag overrides it
    low = json.loads(run("quad", "--n", "3", "--format", "json", env={"CAUCHY2_PRECISION": "64"}))
    high = json.loads(run("quad", "--n", "3", "--format", "json", "--precision", "192",
                          env={"CAUCHY2_PRECISION": "64"}))
    default = json.loads(run("quad", "--n", "3", "--format", "json"))
    assert len(low["value"]) < len(default["value"]) < len(high["value"]), (low, default, high)
    run("quad", "--n", "3", env={"CAUCHY2_PRECISION": "lots"}, expect=1)


CHECKS = {"compute": compute, "quad": quad, "eval": eval_, "verify": verify, "precision-env": precision_env}

if __name__ == "__main__":
    CHECKS[sys.argv[3]]()
    print(f"{sys.argv[3]}: ok")
