"""End-to-end acceptance criteria, each with its time budget.

Every criterion prints one ``PASS``/``FAIL`` line; the lines are also
repeated in the pytest terminal summary.  Run standalone with
``python3 tests/test_acceptance.py`` for just the twelve lines.
"""

import io
import time
from contextlib import redirect_stdout
from math import comb

import pytest

from majdes import checks
from majdes.cli import main
from majdes.formulas import a_polynomial
from majdes.perm import Permutation, distribution
from majdes.qpoly import shape_report

RESULTS: list[str] = []

GOLDEN = {
    "321": "1 + (4*q + 9*q^2 + 9*q^3 + 4*q^4)*t + (5*q^4 + 5*q^5 + 5*q^6)*t^2",
    "123": "(5*q^4 + 5*q^5 + 5*q^6)*t^2 + (4*q^6 + 9*q^7 + 9*q^8 + 4*q^9)*t^3 + q^10*t^4",
    "132": "1 + (4*q + 3*q^2 + 2*q^3 + q^4)*t + (6*q^3 + 5*q^4 + 6*q^5 + 2*q^6 + q^7)*t^2"
           " + (4*q^6 + 3*q^7 + 2*q^8 + q^9)*t^3 + q^10*t^4",
    "213": "1 + (q + 2*q^2 + 3*q^3 + 4*q^4)*t + (q^3 + 2*q^4 + 6*q^5 + 5*q^6 + 6*q^7)*t^2"
           " + (q^6 + 2*q^7 + 3*q^8 + 4*q^9)*t^3 + q^10*t^4",
    "312": "1 + (q + 2*q^2 + 3*q^3 + 4*q^4)*t + (q^3 + 2*q^4 + 6*q^5 + 5*q^6 + 6*q^7)*t^2"
           " + (q^6 + 2*q^7 + 3*q^8 + 4*q^9)*t^3 + q^10*t^4",
}


def golden_distributions():
    bad = []
    for pattern, want in GOLDEN.items():
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(["dist", "--pattern", pattern, "-n", "5"])
        if code != 0 or buf.getvalue() != want + "\n":
            bad.append(pattern)
    return not bad, f"mismatched patterns: {bad}" if bad else "5 distributions byte-exact"


def suite(name, max_n):
    def run():
        report = checks.run_suite(name, max_n)
        ok = report.verdict == "pass" and report.tuples_checked == report.tuples_total
        return ok, f"{report.tuples_checked} tuples, {len(report.counterexamples)} counterexamples"
    return run


def two_descent_slice():
    report = checks.run_suite("unimodality", 30)
    sliced = [cx for cx in report.counterexamples if cx["parameters"]["i"] == 2]
    bad_a = [n for n in range(4, 31) if not shape_report(a_polynomial(n, 2)).unimodal]
    return not sliced and not bad_a, f"i=2 failures {len(sliced)}, non-unimodal A_(n,2) at {bad_a}"


def g132_theorem():
    ok, detail = suite("non-unimodality-132", 10)()
    closed = []
    for n in range(5, 11):
        g2 = distribution(n, Permutation.parse("132"))[2]
        want = (comb(n - 1, 2), comb(n - 1, 2) - 1, n * n - 4 * n + 1)
        if tuple(g2.coefficient(d) for d in (3, 4, 5)) != want:
            closed.append(n)
    return ok and not closed, f"{detail}; closed-form mismatches at {closed}"


CRITERIA = [
    (1, "golden distributions F_(tau,5)", 1, golden_distributions),
    (2, "two-row formula vs SYT oracle, n<=14", 300, suite("formula-vs-oracle", 14)),
    (3, "A_(n,i) vs 321 enumeration, n<=11", 300, suite("a-polynomial", 11)),
    (4, "two-row symmetry/unimodality sweep, n<=30", 120, suite("unimodality", 30)),
    (5, "i=2 slice and A_(n,2) unimodal, n<=30", 120, two_descent_slice),
    (6, "q-binomial identities, params<=25", 60, suite("identities", 25)),
    (7, "RSK shape/descent properties, S_8", 120, suite("rsk", 8)),
    (8, "q-hook formula vs enumeration, n<=10", 120, suite("stanley-hook", 10)),
    (9, "three-row formula/recurrence/oracle, size<=24", 300, suite("three-row", 24)),
    (10, "(m,k,1) bijection, size<=10", 60, suite("bijection", 10)),
    (11, "Catalan top coefficient, 2<=n<=11", 300, suite("catalan", 11)),
    (12, "132 class t^1 and t^2 coefficients, 5<=n<=10", 120, g132_theorem),
]


def evaluate(number, title, limit, fn):
    t0 = time.monotonic()
    try:
        ok, detail = fn()
    except Exception as exc:  # an exception is a failed criterion, not a crash
        ok, detail = False, f"raised {exc!r}"
    elapsed = time.monotonic() - t0
    within = elapsed < limit
    verdict = "PASS" if ok and within else "FAIL"
    line = f"{verdict} criterion {number:2d}: {title} ({elapsed:.2f}s of {limit}s; {detail})"
    print(line)
    RESULTS.append(line)
    return ok, within, detail, elapsed


@pytest.mark.slow
@pytest.mark.parametrize("number,title,limit,fn", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, fn):
    ok, within, detail, elapsed = evaluate(number, title, limit, fn)
    assert ok, detail
    assert within, f"took {elapsed:.2f}s, budget {limit}s"


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    raise SystemExit(0 if all(ok and within for ok, within, _, _ in results) else 1)
