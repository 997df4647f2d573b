"""Shapes, standard Young tableaux, hook lengths, RSK, and two-row lattice paths.

Row 1 is the top row.  A tableau descent is an entry ``i`` sitting in a
strictly higher row (smaller row index) than ``i + 1``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator

from majdes.errors import InvalidShape, TooManyRows
from majdes.perm import Permutation, PermStats
from majdes.qpoly import QPolynomial, exact_divide, pochhammer

__all__ = [
    "Shape", "StandardYoungTableau", "LatticePath",
    "partitions", "enumerate_syt", "tableau_statistics", "hook_lengths",
    "frt_count", "frt_multiplicity", "stanley_maj_gf",
    "maj_distribution_by_descents", "rsk", "syt_to_lattice_path",
    "lattice_path_to_syt", "enumerate_lattice_paths",
]


@dataclass(frozen=True)
class Shape:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidShape(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Shape:
        return cls(tuple(int(t) for t in text.split(",") if t.strip()))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def b(self) -> int:
        """``sum (i-1) * lambda_i``, the minimal maj over SYT of this shape."""
        return sum(i * p for i, p in enumerate(self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def to_text(self) -> str:
        return ",".join(map(str, self.parts))

    def __str__(self) -> str:
        return self.to_text()


def partitions(n: int) -> Iterator[Shape]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(remaining: int, cap: int, acc: list[int]):
        if remaining == 0:
            yield Shape(tuple(acc))
            return
        for p in range(min(remaining, cap), 0, -1):
            acc.append(p)
            yield from rec(remaining - p, p, acc)
            acc.pop()

    yield from rec(n, n, [])


@dataclass(frozen=True)
class StandardYoungTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        Shape(tuple(len(r) for r in rows))
        n = sum(len(r) for r in rows)
        if sorted(x for r in rows for x in r) != list(range(1, n + 1)):
            raise ValueError(f"entries are not 1..{n}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row not increasing: {r}")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise ValueError("column not increasing")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def row_of(self) -> dict[int, int]:
        """Map entry -> 1-based row index."""
        return {x: i for i, r in enumerate(self.rows, 1) for x in r}

    @classmethod
    def parse(cls, text: str) -> StandardYoungTableau:
        return cls(tuple(tuple(int(t) for t in r.split(",")) for r in text.split("/")))

    def to_text(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)

    def __str__(self) -> str:
        return self.to_text()


def enumerate_syt(shape: Shape) -> Iterator[StandardYoungTableau]:
    """Every SYT of ``shape``, placing 1, 2, ..., n in turn.

    Order is lexicographic in the sequence of row indices chosen for
    successive entries.
    """
    parts = shape.parts
    n = shape.n
    rows: list[list[int]] = [[] for _ in parts]

    def rec(t: int):
        if t > n:
            yield StandardYoungTableau(tuple(tuple(r) for r in rows))
            return
        for i, cap in enumerate(parts):
            if len(rows[i]) < cap and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(t)
                yield from rec(t + 1)
                rows[i].pop()

    yield from rec(1)


def tableau_statistics(T: StandardYoungTableau) -> PermStats:
    row = T.row_of()
    return PermStats.from_descents(i for i in range(1, T.n) if row[i] < row[i + 1])


def hook_lengths(shape: Shape) -> list[list[int]]:
    parts = shape.parts
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])] if parts else []
    return [[(p - c - 1) + (conj[c] - r - 1) + 1 for c in range(p)] for r, p in enumerate(parts)]


def frt_count(shape: Shape) -> int:
    h = prod(x for row in hook_lengths(shape) for x in row)
    count, rem = divmod(factorial(shape.n), h)
    assert rem == 0, f"hook product does not divide n! for {shape}"
    return count


def frt_multiplicity(n: int, k: int) -> int:
    """Number of permutations with a given recording tableau of shape (n-k, k)."""
    if k < 0 or 2 * k > n:
        raise InvalidShape(f"(n-k, k) = ({n - k}, {k}) is not a partition")
    value, rem = divmod(comb(n, k) * (n - 2 * k + 1), n - k + 1)
    assert rem == 0
    return value


@lru_cache(maxsize=None)
def _stanley(parts: tuple[int, ...]) -> QPolynomial:
    shape = Shape(parts)
    gf = pochhammer(shape.n).shift(shape.b)
    for row in hook_lengths(shape):
        for h in row:
            gf = exact_divide(gf, 1 - QPolynomial.monomial(h))
    return gf


def stanley_maj_gf(shape: Shape) -> QPolynomial:
    """``q^b(lambda) (q)_n / prod (1 - q^h)`` with every division checked exact."""
    return _stanley(shape.parts)


def maj_distribution_by_descents(shape: Shape) -> dict[int, QPolynomial]:
    """Brute force: ``{i: sum of q^maj(T) over SYT T with i descents}``."""
    counts: dict[int, dict[int, int]] = {}
    for T in enumerate_syt(shape):
        st = tableau_statistics(T)
        row = counts.setdefault(st.des, {})
        row[st.maj] = row.get(st.maj, 0) + 1
    return {i: QPolynomial.from_terms(row) for i, row in sorted(counts.items())}


def rsk(p: Permutation) -> tuple[StandardYoungTableau, StandardYoungTableau]:
    """Row-insertion Robinson-Schensted: ``(insertion P, recording Q)``."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(p.values, 1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            j = bisect.bisect_right(row, x)
            if j == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[j], x = x, row[j]
            r += 1
    return (
        StandardYoungTableau(tuple(map(tuple, P))),
        StandardYoungTableau(tuple(map(tuple, Q))),
    )


@dataclass(frozen=True)
class LatticePath:
    """Steps ``"E"``/``"S"`` in an (n-k) x k box, never dipping below the diagonal.

    ``peaks`` holds the 1-based step indices ``j`` with step j East and step
    j+1 South.  It is redundant with ``steps`` and checked on construction.
    """

    steps: str
    peaks: tuple[int, ...]

    def __post_init__(self):
        steps = self.steps
        if set(steps) - {"E", "S"}:
            raise ValueError(f"bad step string {steps!r}")
        east = 0
        for j, s in enumerate(steps, 1):
            east += s == "E"
            if j - east > east:
                raise ValueError("path crosses below the diagonal")
        expected = tuple(j for j in range(1, len(steps)) if steps[j - 1] == "E" and steps[j] == "S")
        if tuple(self.peaks) != expected:
            raise ValueError(f"peaks {self.peaks} do not match steps (expected {expected})")
        object.__setattr__(self, "peaks", expected)

    @classmethod
    def from_steps(cls, steps: str) -> LatticePath:
        return cls(steps, tuple(j for j in range(1, len(steps)) if steps[j - 1:j + 1] == "ES"))

    @property
    def east(self) -> int:
        return self.steps.count("E")

    @property
    def south(self) -> int:
        return self.steps.count("S")

    def to_text(self) -> str:
        return f"{self.steps} peaks={','.join(map(str, self.peaks))}"

    def __str__(self) -> str:
        return self.to_text()


def syt_to_lattice_path(T: StandardYoungTableau) -> LatticePath:
    if len(T.rows) > 2:
        raise TooManyRows(f"{len(T.rows)} rows")
    row = T.row_of()
    return LatticePath.from_steps("".join("E" if row[j] == 1 else "S" for j in range(1, T.n + 1)))


def lattice_path_to_syt(path: LatticePath) -> StandardYoungTableau:
    top = tuple(j for j, s in enumerate(path.steps, 1) if s == "E")
    bottom = tuple(j for j, s in enumerate(path.steps, 1) if s == "S")
    return StandardYoungTableau((top, bottom))


def enumerate_lattice_paths(east: int, south: int) -> Iterator[LatticePath]:
    """All paths with the given step counts that stay weakly above the diagonal."""

    def rec(e: int, s: int, acc: list[str]):
        if e == east and s == south:
            yield LatticePath.from_steps("".join(acc))
            return
        if e < east:
            acc.append("E")
            yield from rec(e + 1, s, acc)
            acc.pop()
        if s < south and s < e:
            acc.append("S")
            yield from rec(e, s + 1, acc)
            acc.pop()

    yield from rec(0, 0, [])

