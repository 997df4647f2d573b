"""Permutations, classical pattern avoidance, and the (maj, des) statistics.

Positions are 1-based everywhere in the public interface: ``i`` is a descent
of ``p`` when ``p[i] > p[i+1]`` in one-line notation ``p[1..n]``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Mapping

from majdes.qpoly import QPolynomial

__all__ = [
    "Permutation", "PermStats", "BivariatePolynomial",
    "statistics", "contains_pattern", "enumerate_avoiders", "distribution",
    "transform", "brute_force_avoiders",
]


@dataclass(frozen=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"not a permutation of 1..{len(vals)}: {vals}")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read ``"31425"`` (digits, n <= 9) or ``"10,3,1,..."``."""
        text = text.strip()
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        return cls(tuple(int(ch) for ch in text))

    def to_text(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.values))
        return ",".join(map(str, self.values))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class PermStats:
    descent_set: tuple[int, ...]
    des: int
    maj: int

    @classmethod
    def from_descents(cls, descents) -> PermStats:
        ds = tuple(sorted(descents))
        return cls(ds, len(ds), sum(ds))


def statistics(p: Permutation) -> PermStats:
    v = p.values
    return PermStats.from_descents(i for i in range(1, len(v)) if v[i - 1] > v[i])


def contains_pattern(p: Permutation, pattern: Permutation) -> bool:
    """True iff some subsequence of ``p`` is order-isomorphic to ``pattern``."""
    k = len(pattern)
    if k < 1:
        raise ValueError("pattern must be nonempty")
    target = pattern.values
    v = p.values

    # Extend partial occurrences left to right; an entry is admissible if it
    # sits in the right order relation to every entry already chosen.
    def extend(start: int, chosen: list[int]) -> bool:
        t = len(chosen)
        if t == k:
            return True
        for pos in range(start, len(v) - (k - t) + 1):
            x = v[pos]
            if all((x > chosen[s]) == (target[t] > target[s]) for s in range(t)):
                chosen.append(x)
                if extend(pos + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


def brute_force_avoiders(n: int, pattern: Permutation) -> list[Permutation]:
    """Filter all ``n!`` permutations; only meant as an oracle for small n."""
    out = []
    for vals in itertools.permutations(range(1, n + 1)):
        p = Permutation(vals)
        if not contains_pattern(p, pattern):
            out.append(p)
    return out


def _ends_occurrence(prefix: list[int], x: int, target: tuple[int, ...]) -> bool:
    """Does ``prefix + [x]`` contain ``target`` using ``x`` as its last letter?"""
    k = len(target)
    last = target[-1]

    def extend(start: int, chosen: list[int]) -> bool:
        t = len(chosen)
        if t == k - 1:
            return True
        want = target[t]
        for pos in range(start, len(prefix) - (k - 1 - t) + 1):
            y = prefix[pos]
            if (y > x) != (want > last):
                continue
            if all((y > chosen[s]) == (want > target[s]) for s in range(t)):
                chosen.append(y)
                if extend(pos + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


def _walk(n: int, pattern: Permutation) -> Iterator[tuple[tuple[int, ...], int, int]]:
    """Backtracking over prefixes that avoid ``pattern``, in lexicographic order.

    Yields ``(values, des, maj)``.  Monotone length-3 patterns get an O(1)
    incremental test; everything else uses the generic suffix check.
    """
    target = pattern.values
    used = [False] * (n + 2)
    prefix: list[int] = []

    if target == (3, 2, 1):
        # A 321 is completed by x iff x < some entry that already has a larger
        # entry before it; track the largest such entry.
        def rec(bad: int, top: int, des: int, maj: int):
            if len(prefix) == n:
                yield tuple(prefix), des, maj
                return
            pos = len(prefix)
            for x in range(1, n + 1):
                if used[x] or x < bad:
                    continue
                d, m = des, maj
                if prefix and prefix[-1] > x:
                    d, m = des + 1, maj + pos
                used[x] = True
                prefix.append(x)
                yield from rec(max(bad, x) if top > x else bad, max(top, x), d, m)
                prefix.pop()
                used[x] = False

        yield from rec(0, 0, 0, 0)
        return

    if target == (1, 2, 3):
        def rec(bad: int, low: int, des: int, maj: int):
            if len(prefix) == n:
                yield tuple(prefix), des, maj
                return
            pos = len(prefix)
            for x in range(1, n + 1):
                if used[x] or x > bad:
                    continue
                d, m = des, maj
                if prefix and prefix[-1] > x:
                    d, m = des + 1, maj + pos
                used[x] = True
                prefix.append(x)
                yield from rec(min(bad, x) if low < x else bad, min(low, x), d, m)
                prefix.pop()
                used[x] = False

        yield from rec(n + 1, n + 1, 0, 0)
        return

    def rec(des: int, maj: int):
        if len(prefix) == n:
            yield tuple(prefix), des, maj
            return
        pos = len(prefix)
        for x in range(1, n + 1):
            if used[x]:
                continue
            # prefix entries are final values, so their relative order is fixed
            if _ends_occurrence(prefix, x, target):
                continue
            d, m = des, maj
            if prefix and prefix[-1] > x:
                d, m = des + 1, maj + pos
            used[x] = True
            prefix.append(x)
            yield from rec(d, m)
            prefix.pop()
            used[x] = False

    yield from rec(0, 0)


def enumerate_avoiders(n: int, pattern: Permutation) -> Iterator[Permutation]:
    if n < 1:
        raise ValueError("n must be positive")
    for vals, _, _ in _walk(n, pattern):
        yield Permutation(vals)


@dataclass(frozen=True)
class BivariatePolynomial:
    """Polynomial in q and t, stored as ``{i: coefficient of t^i}``."""

    terms: Mapping[int, QPolynomial]

    def __post_init__(self):
        clean = {int(i): p for i, p in sorted(self.terms.items()) if p}
        for i, p in clean.items():
            if i < 0:
                raise ValueError("negative t-degree")
            if any(c < 0 for c in p.coeffs):
                raise ValueError(f"negative coefficient in t^{i} term")
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __getitem__(self, i: int) -> QPolynomial:
        return self.terms.get(i, QPolynomial())

    def t_degree(self) -> int:
        return max(self.terms, default=-1)

    def at_one(self) -> int:
        return sum(p.at_one() for p in self.terms.values())

    def to_text(self) -> str:
        """E.g. ``1 + (4*q + 9*q^2)*t + 5*q^4*t^2``; zero renders ``0``."""
        if not self.terms:
            return "0"
        parts = []
        for i, p in self.terms.items():
            body = p.to_text()
            if i == 0:
                parts.append(body)
                continue
            tvar = "t" if i == 1 else f"t^{i}"
            if body == "1":
                parts.append(tvar)
            elif len(p.terms()) == 1 and not body.startswith("-"):
                parts.append(f"{body}*{tvar}")
            else:
                parts.append(f"({body})*{tvar}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self, n: int | None = None, pattern: str | None = None) -> dict:
        obj: dict = {}
        if n is not None:
            obj["n"] = n
        if pattern is not None:
            obj["pattern"] = pattern
        obj["terms"] = {str(i): p.to_json() for i, p in self.terms.items()}
        return obj

    @classmethod
    def from_json(cls, obj: Mapping) -> BivariatePolynomial:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls({int(i): QPolynomial.from_json(p) for i, p in obj["terms"].items()})


def distribution(n: int, pattern: Permutation) -> BivariatePolynomial:
    """Exact ``sum q^maj t^des`` over the avoiders of ``pattern`` in S_n."""
    if n < 1:
        raise ValueError("n must be positive")
    counts: dict[int, dict[int, int]] = {}
    for _, des, maj in _walk(n, pattern):
        row = counts.setdefault(des, {})
        row[maj] = row.get(maj, 0) + 1
    return BivariatePolynomial({i: QPolynomial.from_terms(row) for i, row in counts.items()})


def transform(p: Permutation, which: str) -> Permutation:
    n = p.n
    if which == "reverse":
        return Permutation(p.values[::-1])
    if which == "complement":
        return Permutation(tuple(n + 1 - v for v in p.values))
    if which == "reverse_complement":
        return Permutation(tuple(n + 1 - v for v in reversed(p.values)))
    raise ValueError(f"unknown transform {which!r}")
