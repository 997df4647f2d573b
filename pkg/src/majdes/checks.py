"""Named verification sweeps and the JSON reports they produce.

A suite is a deterministic list of parameter tuples plus a function that
checks one tuple and returns its counterexamples.  Tuples are independent, so
:func:`run_suite` may farm them out to worker processes; results are
reassembled in sweep order, which keeps reports byte-stable.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from math import comb
from pathlib import Path
from typing import Callable

from majdes.formulas import (
    a_polynomial, catalan_top_term, f_three_row, f_three_row_recurrence, f_two_row,
    f_two_row_recurrence, g132_low_coefficients, mk1_bijection, mk1_bijection_inverse,
    qbinomial_identity_check, related_distribution,
)
from majdes.perm import Permutation, contains_pattern, distribution, statistics
from majdes.qpoly import QPolynomial, shape_report
from majdes.tableaux import (
    Shape, enumerate_syt, maj_distribution_by_descents, partitions, rsk,
    stanley_maj_gf, tableau_statistics,
)

log = logging.getLogger(__name__)

# brute-force SYT enumeration for (m, k, 1) is skipped above this size
THREE_ROW_ORACLE_LIMIT = 13

Counterexample = dict


@dataclass
class CheckReport:
    check_name: str
    parameters: dict
    verdict: str = "pass"
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed_ms: int = 0
    tuples_total: int = 0
    tuples_checked: int = 0
    last_completed: dict | None = None
    complete: bool = False

    def to_json(self) -> dict:
        self.verdict = "fail" if self.counterexamples else "pass"
        return asdict(self)

    def write(self, path: str | os.PathLike) -> None:
        text = json.dumps(self.to_json(), indent=2, sort_keys=True)
        Path(path).write_text(text + "\n", encoding="utf-8")


def report_schema() -> dict:
    return json.loads(resources.files("majdes").joinpath("report_schema.json").read_text())


def _cx(params: dict, expected, actual) -> Counterexample:
    return {"parameters": params, "expected": str(expected), "actual": str(actual)}


def _shape(n: int, k: int) -> Shape:
    return Shape((n - k, k) if k else (n,))


def _describe(p: QPolynomial) -> str:
    r = shape_report(p)
    return (f"{p} [symmetric={r.symmetric}, unimodal={r.unimodal}, "
            f"center_times_two={r.center_times_two}]")


# -- unimodality ------------------------------------------------------------

def _unimodality_tuples(max_n: int) -> list[dict]:
    out = []
    for n in range(1, max_n + 1):
        for k in range(1, n // 2 + 1):
            for i in range(1, k + 1):
                out.append({"kind": "f", "n": n, "k": k, "i": i})
        for i in range(1, n // 2 + 1):
            out.append({"kind": "A", "n": n, "i": i})
    return out


def _unimodality_check(p: dict) -> list[Counterexample]:
    n, i = p["n"], p["i"]
    if p["kind"] == "f":
        k = p["k"]
        poly = f_two_row(n, k, i)
        lo = k + i * i - i
        want = f"symmetric unimodal on [{lo}, {n * i - lo}]"
        ok = poly.min_degree == lo and poly.max_degree == n * i - lo
    else:
        poly = a_polynomial(n, i)
        want = f"symmetric unimodal on [{i * i}, {n * i - i * i}]"
        ok = poly.min_degree == i * i and poly.max_degree == n * i - i * i
    r = shape_report(poly)
    if ok and r.symmetric and r.unimodal and r.center_times_two == n * i:
        return []
    return [_cx(p, want, _describe(poly))]


# -- two-row formula vs brute force / recurrence ----------------------------

def _oracle_tuples(max_n: int) -> list[dict]:
    return [{"n": n, "k": k} for n in range(1, max_n + 1) for k in range(n // 2 + 1)]


def _oracle_check(p: dict) -> list[Counterexample]:
    n, k = p["n"], p["k"]
    oracle = maj_distribution_by_descents(_shape(n, k))
    out = []
    for i in range(k + 2):
        got = f_two_row(n, k, i)
        want = oracle.get(i, QPolynomial())
        log.info("n=%d k=%d i=%d tableaux=%d", n, k, i, want.at_one())
        if got != want:
            out.append(_cx({"n": n, "k": k, "i": i}, want, got))
    return out


def _recurrence_tuples(max_n: int) -> list[dict]:
    return [{"n": n, "k": k, "i": i}
            for n in range(1, max_n + 1) for k in range(1, n // 2 + 1) for i in range(1, k + 1)]


def _recurrence_check(p: dict) -> list[Counterexample]:
    want = f_two_row(p["n"], p["k"], p["i"])
    got = f_two_row_recurrence(p["n"], p["k"], p["i"])
    return [] if got == want else [_cx(p, want, got)]


# -- q-binomial identities ---------------------------------------------------

def _identity_tuples(max_n: int) -> list[dict]:
    out = [{"which": 1, "m": m, "n": n} for m in range(max_n + 1) for n in range(max_n + 1)]
    out += [{"which": 2, "a": a, "B": B} for B in range(max_n + 1) for a in range(B + 1)]
    return out


def _identity_check(p: dict) -> list[Counterexample]:
    params = (p["m"], p["n"]) if p["which"] == 1 else (p["a"], p["B"])
    lhs, rhs = qbinomial_identity_check(p["which"], params)
    return [] if lhs == rhs else [_cx(p, rhs, lhs)]


# -- RSK ---------------------------------------------------------------------

_P321 = Permutation((3, 2, 1))


def _rsk_tuples(max_n: int) -> list[dict]:
    return [{"n": n} for n in range(1, max_n + 1)]


def _rsk_check(p: dict) -> list[Counterexample]:
    out = []
    for vals in itertools.permutations(range(1, p["n"] + 1)):
        sigma = Permutation(vals)
        P, Q = rsk(sigma)
        if P.shape != Q.shape:
            out.append(_cx({"sigma": str(sigma)}, "P and Q share a shape", f"{P} | {Q}"))
        avoids = not contains_pattern(sigma, _P321)
        if avoids != (len(Q.rows) <= 2):
            out.append(_cx({"sigma": str(sigma)}, f"avoids321={avoids}", f"rows={len(Q.rows)}"))
        if statistics(sigma).descent_set != tableau_statistics(Q).descent_set:
            out.append(_cx({"sigma": str(sigma)}, statistics(sigma).descent_set,
                           tableau_statistics(Q).descent_set))
    return out


# -- relations among length-3 classes ---------------------------------------

def _relation_tuples(max_n: int) -> list[dict]:
    return [{"pattern": pat, "n": n} for n in range(1, max_n + 1) for pat in ("123", "231", "213", "312")]


def _relation_check(p: dict) -> list[Counterexample]:
    want = distribution(p["n"], Permutation.parse(p["pattern"]))
    got = related_distribution(p["pattern"], p["n"])
    return [] if got == want else [_cx(p, want, got)]


# -- Catalan top coefficient -------------------------------------------------

def _catalan_tuples(max_n: int) -> list[dict]:
    return [{"n": n} for n in range(2, max_n + 1)]


def _catalan_check(p: dict) -> list[Counterexample]:
    n = p["n"]
    want = distribution(n, _P321)[n // 2]
    got = catalan_top_term(n)
    return [] if got == want else [_cx(p, want, got)]


# -- three-row shapes (m, k, 1) ----------------------------------------------

def _mk_tuples(max_n: int) -> list[dict]:
    return [{"m": m, "k": k} for size in range(3, max_n + 1)
            for k in range(1, size) for m in [size - 1 - k] if m >= k]


def _three_row_check(p: dict) -> list[Counterexample]:
    m, k = p["m"], p["k"]
    oracle = None
    if m + k + 1 <= THREE_ROW_ORACLE_LIMIT:
        oracle = maj_distribution_by_descents(Shape((m, k, 1)))
    out = []
    for i in range(2, k + 3):
        params = {"m": m, "k": k, "i": i}
        closed = f_three_row(m, k, i)
        rec = f_three_row_recurrence(m, k, i)
        if closed != rec:
            out.append(_cx({**params, "via": "recurrence"}, closed, rec))
        if oracle is not None and closed != oracle.get(i, QPolynomial()):
            out.append(_cx({**params, "via": "oracle"}, oracle.get(i, QPolynomial()), closed))
    lifted = f_three_row(m, k, 2).shift(1)
    two = f_two_row(m + k + 2, k + 1, 2)
    if lifted != two:
        out.append(_cx({"m": m, "k": k, "i": 2, "via": "two-row"}, two, lifted))
    return out


def _bijection_check(p: dict) -> list[Counterexample]:
    m, k = p["m"], p["k"]
    out = []
    for T in enumerate_syt(Shape((m, k, 1))):
        st = tableau_statistics(T)
        if st.des != 2:
            continue
        try:
            S = mk1_bijection(T)
            back = mk1_bijection_inverse(S)
        except ValueError as exc:
            out.append(_cx({"T": str(T)}, "valid image and preimage", repr(exc)))
            continue
        ss = tableau_statistics(S)
        if S.shape.parts != (m + 1, k + 1) or ss.des != 2 or ss.maj != st.maj + 1 or back != T:
            out.append(_cx({"T": str(T)}, f"shape {m + 1},{k + 1}; des 2; maj {st.maj + 1}; roundtrip",
                           f"{S} des {ss.des} maj {ss.maj}; back {back}"))
    return out


# -- 132 non-unimodality -----------------------------------------------------

def _g132_tuples(max_n: int) -> list[dict]:
    return [{"n": n} for n in range(5, max_n + 1)]


def _g132_check(p: dict) -> list[Counterexample]:
    n = p["n"]
    F = distribution(n, Permutation.parse("132"))
    out = []
    g1, g2 = F[1], F[2]
    low = tuple(g2.coefficient(d) for d in (3, 4, 5))
    if low != g132_low_coefficients(n):
        out.append(_cx({**p, "what": "t^2 low coefficients"}, g132_low_coefficients(n), low))
    want_g1 = QPolynomial.from_terms({i: n - i for i in range(1, n)})
    if g1 != want_g1:
        out.append(_cx({**p, "what": "t^1 coefficient"}, want_g1, g1))
    if shape_report(g1).symmetric:
        out.append(_cx({**p, "what": "t^1 non-symmetric"}, "non-symmetric", _describe(g1)))
    if shape_report(g2).unimodal:
        out.append(_cx({**p, "what": "t^2 non-unimodal"}, "non-unimodal", _describe(g2)))
    return out


# -- A_{n,i} against 321 enumeration ----------------------------------------

def _apoly_tuples(max_n: int) -> list[dict]:
    return [{"n": n} for n in range(1, max_n + 1)]


def _apoly_check(p: dict) -> list[Counterexample]:
    n = p["n"]
    F = distribution(n, _P321)
    out = []
    for i in range(n // 2 + 2):
        if a_polynomial(n, i) != F[i]:
            out.append(_cx({"n": n, "i": i}, F[i], a_polynomial(n, i)))
    one = QPolynomial(0, tuple(comb(n, d) for d in range(n + 1))) - QPolynomial.run(0, n)
    if a_polynomial(n, 1) != one:
        out.append(_cx({"n": n, "i": 1, "via": "(1+q)^n - [n+1]_q"}, one, a_polynomial(n, 1)))
    return out


# -- q-hook formula -----------------------------------------------------------

def _stanley_tuples(max_n: int) -> list[dict]:
    return [{"shape": s.to_text()} for n in range(1, max_n + 1) for s in partitions(n)]


def _stanley_check(p: dict) -> list[Counterexample]:
    shape = Shape.parse(p["shape"])
    terms: dict[int, int] = {}
    for T in enumerate_syt(shape):
        maj = tableau_statistics(T).maj
        terms[maj] = terms.get(maj, 0) + 1
    want = QPolynomial.from_terms(terms)
    got = stanley_maj_gf(shape)
    return [] if got == want else [_cx(p, want, got)]


Suite = tuple[Callable[[int], list[dict]], Callable[[dict], list[Counterexample]]]

SUITES: dict[str, Suite] = {
    "unimodality": (_unimodality_tuples, _unimodality_check),
    "formula-vs-oracle": (_oracle_tuples, _oracle_check),
    "formula-vs-recurrence": (_recurrence_tuples, _recurrence_check),
    "identities": (_identity_tuples, _identity_check),
    "rsk": (_rsk_tuples, _rsk_check),
    "relations": (_relation_tuples, _relation_check),
    "catalan": (_catalan_tuples, _catalan_check),
    "three-row": (_mk_tuples, _three_row_check),
    "bijection": (_mk_tuples, _bijection_check),
    "non-unimodality-132": (_g132_tuples, _g132_check),
    "a-polynomial": (_apoly_tuples, _apoly_check),
    "stanley-hook": (_stanley_tuples, _stanley_check),
}


def _run_one(job: tuple[str, dict]) -> list[Counterexample]:
    name, params = job
    return SUITES[name][1](params)


def worker_count() -> int:
    raw = os.environ.get("MAJDES_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(
    name: str,
    max_n: int,
    out: str | os.PathLike | None = None,
    resume: bool = False,
    workers: int | None = None,
    flush_seconds: float = 2.0,
) -> CheckReport:
    """Run suite ``name`` up to ``max_n``; optionally persist (and resume) a report."""
    if name not in SUITES:
        raise KeyError(name)
    tuples = SUITES[name][0](max_n)
    report = CheckReport(check_name=name, parameters={"max_n": max_n}, tuples_total=len(tuples))
    start_idx = 0
    prior_ms = 0
    if resume and out is not None and Path(out).exists():
        old = json.loads(Path(out).read_text(encoding="utf-8"))
        if old.get("check_name") == name and old.get("parameters") == report.parameters:
            report.counterexamples = old.get("counterexamples", [])
            report.tuples_checked = old.get("tuples_checked", 0)
            report.last_completed = old.get("last_completed")
            prior_ms = old.get("elapsed_ms", 0)
            if report.last_completed in tuples:
                start_idx = tuples.index(report.last_completed) + 1
            log.info("resuming %s after %d of %d tuples", name, start_idx, len(tuples))

    workers = workers or worker_count()
    t0 = time.monotonic()
    last_flush = t0
    jobs = [(name, p) for p in tuples[start_idx:]]

    def record(params: dict, found: list[Counterexample]) -> None:
        nonlocal last_flush
        report.counterexamples.extend(found)
        report.tuples_checked += 1
        report.last_completed = params
        now = time.monotonic()
        if out is not None and now - last_flush > flush_seconds:
            report.elapsed_ms = prior_ms + int((now - t0) * 1000)
            report.write(out)
            last_flush = now

    try:
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for (_, params), found in zip(jobs, pool.map(_run_one, jobs, chunksize=4)):
                    record(params, found)
        else:
            for job in jobs:
                record(job[1], _run_one(job))
    except KeyboardInterrupt:
        if out is not None:
            report.elapsed_ms = prior_ms + int((time.monotonic() - t0) * 1000)
            report.write(out)
        raise

    report.complete = True
    report.elapsed_ms = prior_ms + int((time.monotonic() - t0) * 1000)
    report.verdict = "fail" if report.counterexamples else "pass"
    if out is not None:
        report.write(out)
    return report
