#!/usr/bin/env python3
"""End-to-end checks for the caylabel command line tool.

Usage: cli_integration.py /path/to/caylabel
Each check runs the binary as a subprocess and asserts on exit code and
output. Failures print the command line and captured output.
"""

import json
import subprocess
import sys
import tempfile
import os

BINARY = None
FAILURES = []
CHECKS = 0


def run(*args, expect_rc=0):
    proc = subprocess.run(
        [BINARY, *args], capture_output=True, text=True, timeout=240
    )
    if proc.returncode != expect_rc:
        raise AssertionError(
            f"exit code {proc.returncode}, expected {expect_rc}\n"
            f"stdout:\n{proc.stdout}\nstderr:\n{proc.stderr}"
        )
    return proc


def check(name, fn):
    global CHECKS
    CHECKS += 1
    try:
        fn()
        print(f"ok - {name}")
    except Exception as exc:  # noqa: BLE001 - report and continue
        FAILURES.append(name)
        print(f"FAIL - {name}: {exc}")


def expect_in(needle, haystack):
    if needle not in haystack:
        raise AssertionError(f"missing {needle!r} in:\n{haystack}")


def check_enumerate_count():
    proc = run("enumerate", "--order", "3", "--count")
    if proc.stdout.strip() != "113":
        raise AssertionError(f"expected 113, got {proc.stdout!r}")


def check_enumerate_limit():
    proc = run("enumerate", "--order", "2", "--limit", "3")
    lines = [line for line in proc.stdout.splitlines() if line.strip()]
    if len(lines) != 9 or lines[:3] != ["2", "0 0", "0 0"]:
        raise AssertionError(f"unexpected listing:\n{proc.stdout}")


def check_analyze_text():
    proc = run("analyze", "--gen", "rightzero:3")
    expect_in("order: 3", proc.stdout)
    expect_in("right zero band: yes", proc.stdout)
    expect_in("green classes: r=1 l=3 h=3", proc.stdout)


def check_analyze_json():
    proc = run("analyze", "--gen", "product:cyclic:2,leftzero:2", "--json")
    doc = json.loads(proc.stdout)
    if doc["order"] != 4:
        raise AssertionError(f"order {doc['order']}")
    if not doc["predicates"]["leftGroup"]:
        raise AssertionError("expected a left group")
    if doc["rees"] is None or doc["rees"]["groupOrder"] != 2:
        raise AssertionError(f"rees block wrong: {doc['rees']}")


def check_span_band():
    proc = run(
        "span", "--gen", "leftzero:4", "--connection", "0", "1",
        "--underlying", "--k", "2,1",
    )
    expect_in("value: 5", proc.stdout)
    expect_in("method: exact", proc.stdout)


def check_span_star():
    proc = run(
        "span", "--gen", "adjoin-zero:leftzero:4", "--connection", "4",
        "--underlying", "--k", "2,1",
    )
    expect_in("value: 5", proc.stdout)


def check_span_graph_file():
    with tempfile.NamedTemporaryFile("w", suffix=".edges", delete=False) as f:
        f.write("3\n0 1\n1 0\n1 2\n2 1\n")
        path = f.name
    try:
        proc = run("span", "--graph-file", path, "--k", "2,1", "--json")
        doc = json.loads(proc.stdout)
        if doc["value"] != 3:
            raise AssertionError(f"path span {doc['value']}")
        labels = doc["labels"]
        if len(labels) != 3 or max(labels) - min(labels) != 3:
            raise AssertionError(f"bad certificate {labels}")
    finally:
        os.unlink(path)


def check_graph_star():
    proc = run("graph", "--gen", "adjoin-zero:leftzero:3", "--connection", "0", "1", "2")
    expect_in("# components: 3 1", proc.stdout)
    expect_in("# union of completes (loops required): yes", proc.stdout)


def check_graph_dot():
    proc = run("graph", "--gen", "cyclic:3", "--connection", "1", "--dot")
    expect_in("digraph G {", proc.stdout)
    expect_in("0 -> 1;", proc.stdout)


def check_verify_small():
    proc = run("verify", "--theorem", "2", "--order-cap", "3")
    expect_in("checked: 122, confirmed: 122", proc.stdout)
    expect_in("counterexamples: 0", proc.stdout)


def check_verify_json_deterministic():
    args = (
        "verify", "--theorem", "4", "--seed", "7", "--random-count", "50",
        "--exhaustive-max", "4", "--json",
    )
    first = run(*args)
    second = run(*args)
    if first.stdout != second.stdout:
        raise AssertionError("verify --json output is not reproducible")
    doc = json.loads(first.stdout)
    if doc["checked"] != 125 or doc["counterexampleTotal"] != 0:
        raise AssertionError(f"unexpected report: {first.stdout}")


def check_rejects_bad_table():
    with tempfile.NamedTemporaryFile("w", suffix=".table", delete=False) as f:
        f.write("2:0 1 0 0")
        path = f.name
    try:
        proc = run("analyze", "--table", path, expect_rc=2)
        expect_in("input error", proc.stderr)
    finally:
        os.unlink(path)


def check_rejects_bad_kappa():
    run(
        "span", "--gen", "cyclic:3", "--connection", "1", "2", "--k", "0,1",
        expect_rc=2,
    )


def check_cap_exit_code():
    proc = run("enumerate", "--order", "6", "--count", expect_rc=3)
    expect_in("cap exceeded", proc.stderr)


def main():
    global BINARY
    if len(sys.argv) != 2:
        print("usage: cli_integration.py /path/to/caylabel", file=sys.stderr)
        return 2
    BINARY = sys.argv[1]

    check("enumerate --count", check_enumerate_count)
    check("enumerate --limit", check_enumerate_limit)
    check("analyze text", check_analyze_text)
    check("analyze --json", check_analyze_json)
    check("span left zero band", check_span_band)
    check("span star", check_span_star)
    check("span --graph-file", check_span_graph_file)
    check("graph star verdicts", check_graph_star)
    check("graph --dot", check_graph_dot)
    check("verify small sweep", check_verify_small)
    check("verify --json deterministic", check_verify_json_deterministic)
    check("rejects bad table", check_rejects_bad_table)
    check("rejects bad kappa", check_rejects_bad_kappa)
    check("cap exit code", check_cap_exit_code)

    if FAILURES:
        print(f"{len(FAILURES)}/{CHECKS} checks failed: {', '.join(FAILURES)}")
        return 1
    print(f"all {CHECKS} checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
