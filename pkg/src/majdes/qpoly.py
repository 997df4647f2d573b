"""Exact polynomials in one variable ``q`` with integer coefficients.

A :class:`QPolynomial` is stored densely on its support: ``min_degree`` is the
lowest exponent with a nonzero coefficient and ``coeffs[d]`` is the
coefficient of ``q**(min_degree + d)``.  Python ints are arbitrary precision,
so nothing here ever rounds.

>>> p = QPolynomial.from_terms({4: 5, 5: 5, 6: 5})
>>> str(p)
'5*q^4 + 5*q^5 + 5*q^6'
>>> shape_report(p).unimodal
True
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from majdes.errors import DegreeExceedsWindow, NotDivisible, ZeroPolynomial

__all__ = [
    "QPolynomial", "ShapeReport", "ZERO", "ONE",
    "add", "multiply", "exact_divide", "q_binomial", "gaussian", "pochhammer",
    "q_integer", "shape_report", "reverse_within", "sum_polys",
]


@dataclass(frozen=True)
class QPolynomial:
    """Dense integer polynomial in q with an explicit lowest-degree offset.

    The constructor normalizes: zero entries at either end are stripped and
    ``min_degree`` adjusted.  The zero polynomial has empty ``coeffs`` and,
    by convention, ``min_degree == 0``; its degree bounds are meaningless.
    """

    min_degree: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = [operator.index(c) for c in self.coeffs]
        lo, hi = 0, len(cs)
        while lo < hi and cs[lo] == 0:
            lo += 1
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        offset = operator.index(self.min_degree) + lo if hi > lo else 0
        if offset < 0:
            raise ValueError(f"negative exponent q^{offset}")
        object.__setattr__(self, "coeffs", tuple(cs[lo:hi]))
        object.__setattr__(self, "min_degree", offset)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> QPolynomial:
        terms = {d: c for d, c in terms.items() if c}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(d, 0) for d in range(lo, hi + 1)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPolynomial:
        return cls(degree, (coeff,))

    @classmethod
    def run(cls, lo: int, hi: int) -> QPolynomial:
        """``q^lo + q^(lo+1) + ... + q^hi``; zero when ``hi < lo``."""
        if hi < lo:
            return ZERO
        return cls(lo, (1,) * (hi - lo + 1))

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, degree: int) -> int:
        d = degree - self.min_degree
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def terms(self) -> dict[int, int]:
        return {self.min_degree + d: c for d, c in enumerate(self.coeffs) if c}

    def at_one(self) -> int:
        return sum(self.coeffs)

    def shift(self, s: int) -> QPolynomial:
        """Multiply by ``q**s``; ``s`` may be negative if no exponent drops below 0."""
        if not self.coeffs:
            return self
        return QPolynomial(self.min_degree + s, self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial(0, (other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial(self.min_degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial(0, (other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(self.min_degree, tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Canonical ascending rendering, e.g. ``4*q + 9*q^2``; zero is ``0``."""
        if not self.coeffs:
            return "0"
        out = []
        for d, c in self.terms().items():
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(out)

    def to_json(self) -> dict:
        return {"min_degree": self.min_degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: Mapping) -> QPolynomial:
        return cls(int(obj["min_degree"]), tuple(int(c) for c in obj["coeffs"]))


ZERO = QPolynomial()
ONE = QPolynomial(0, (1,))


@dataclass(frozen=True)
class ShapeReport:
    symmetric: bool
    unimodal: bool
    center_times_two: int
    coefficient_sum: int


def add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    if not a.coeffs:
        return b
    if not b.coeffs:
        return a
    lo = min(a.min_degree, b.min_degree)
    hi = max(a.max_degree, b.max_degree)
    out = [0] * (hi - lo + 1)
    for p in (a, b):
        off = p.min_degree - lo
        for d, c in enumerate(p.coeffs):
            out[off + d] += c
    return QPolynomial(lo, tuple(out))


def multiply(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    if not a.coeffs or not b.coeffs:
        return ZERO
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (len(ac) + len(bc) - 1)
    for i, x in enumerate(ac):
        if x:
            for j, y in enumerate(bc):
                out[i + j] += x * y
    return QPolynomial(a.min_degree + b.min_degree, tuple(out))


def exact_divide(num: QPolynomial, den: QPolynomial) -> QPolynomial:
    """Return ``r`` with ``r * den == num``, or raise :class:`NotDivisible`.

    Long division from the low-degree end, so any exact quotient is found
    and any remainder is detected.
    """
    if not den.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num.coeffs:
        return ZERO
    shift = num.min_degree - den.min_degree
    qlen = len(num.coeffs) - len(den.coeffs) + 1
    if shift < 0 or qlen <= 0:
        raise NotDivisible(f"({num}) / ({den})")
    rem = list(num.coeffs)
    dc = den.coeffs
    lead = dc[0]
    quot = [0] * qlen
    for i in range(qlen):
        c = rem[i]
        if c:
            qi, r = divmod(c, lead)
            if r:
                raise NotDivisible(f"({num}) / ({den})")
            quot[i] = qi
            for j, d in enumerate(dc):
                rem[i + j] -= qi * d
    if any(rem[qlen:]):
        raise NotDivisible(f"({num}) / ({den})")
    return QPolynomial(shift, tuple(quot))


def q_integer(n: int) -> QPolynomial:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    return QPolynomial.run(0, n - 1)


@lru_cache(maxsize=None)
def pochhammer(n: int) -> QPolynomial:
    """``(q)_n = (1-q)(1-q^2)...(1-q^n)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    return pochhammer(n - 1) * (1 - QPolynomial.monomial(n))


@lru_cache(maxsize=None)
def q_binomial(M: int, N: int) -> QPolynomial:
    """Gaussian polynomial ``[M+N choose N]_q``, partitions in an N x M box."""
    if M < 0 or N < 0:
        raise ValueError("box sides must be nonnegative")
    return exact_divide(pochhammer(M + N), pochhammer(M) * pochhammer(N))


def gaussian(top: int, bottom: int) -> QPolynomial:
    """``[top choose bottom]_q`` with the vanishing conventions (zero if top < bottom)."""
    if bottom < 0 or top < bottom:
        return ZERO
    return q_binomial(top - bottom, bottom)


def shape_report(p: QPolynomial) -> ShapeReport:
    if not p.coeffs:
        raise ZeroPolynomial("shape of the zero polynomial is undefined")
    cs = p.coeffs
    i = 1
    while i < len(cs) and cs[i] >= cs[i - 1]:
        i += 1
    while i < len(cs) and cs[i] <= cs[i - 1]:
        i += 1
    return ShapeReport(
        symmetric=cs == cs[::-1],
        unimodal=i == len(cs),
        center_times_two=p.min_degree + p.max_degree,
        coefficient_sum=sum(cs),
    )


def reverse_within(p: QPolynomial, J: int) -> QPolynomial:
    """Reflect coefficients in the window ``[0, J]``: ``q^J * p(1/q)``."""
    if not p.coeffs:
        return p
    if p.max_degree > J:
        raise DegreeExceedsWindow(f"degree {p.max_degree} > {J}")
    return QPolynomial(J - p.max_degree, p.coeffs[::-1])


def sum_polys(polys: Iterable[QPolynomial]) -> QPolynomial:
    terms: dict[int, int] = {}
    for p in polys:
        for d, c in enumerate(p.coeffs, p.min_degree):
            terms[d] = terms.get(d, 0) + c
    return QPolynomial.from_terms(terms)
