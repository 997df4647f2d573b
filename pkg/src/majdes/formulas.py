"""Closed forms, recurrences and relations for maj over descents.

``f_two_row(n, k, i)`` is the maj generating function of SYT of shape
``(n-k, k)`` with ``i`` descents; ``f_three_row(m, k, i)`` the same for
shape ``(m, k, 1)``.  Each closed form has a recurrence evaluator that shares
no code with it, and both are checked against brute force in the tests.

Indices outside the meaningful range (``k < i``, ``2k > n``) give the zero
polynomial; malformed input (negative sizes) raises.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import NamedTuple

from majdes.errors import (
    InvalidN, InvalidParams, InvalidShape, NotInImage, WrongDescentCount, WrongShape,
)
from majdes.perm import BivariatePolynomial, Permutation, distribution
from majdes.qpoly import (
    ONE, ZERO, QPolynomial, exact_divide, gaussian, reverse_within, sum_polys,
)
from majdes.tableaux import StandardYoungTableau, frt_multiplicity, tableau_statistics

__all__ = [
    "TwoRowIndex", "ThreeRowIndex",
    "f_two_row", "f_two_row_recurrence", "a_polynomial",
    "f_three_row", "f_three_row_recurrence", "qbinomial_identity_check",
    "catalan", "catalan_top_term", "related_distribution", "g132_low_coefficients",
    "mk1_bijection", "mk1_bijection_inverse",
]


class TwoRowIndex(NamedTuple):
    n: int
    k: int
    i: int


class ThreeRowIndex(NamedTuple):
    m: int
    k: int
    i: int


def _one_minus(h: int) -> QPolynomial:
    return 1 - QPolynomial.monomial(h)


def _check_two_row(n: int, k: int, i: int) -> None:
    if n < 1 or k < 0 or i < 0:
        raise InvalidShape(f"bad two-row index n={n}, k={k}, i={i}")


@lru_cache(maxsize=None)
def f_two_row(n: int, k: int, i: int) -> QPolynomial:
    """Closed form for SYT of shape ``(n-k, k)`` with ``i`` descents.

    ``q^(k+i^2-i) (1-q^(n-2k+1)) / (1-q^i) * [k-1, i-1]_q [n-k, i-1]_q``.
    For ``i = 0`` only the one-row shape contributes (the constant 1).
    """
    _check_two_row(n, k, i)
    if 2 * k > n:
        return ZERO
    if i == 0:
        return ONE if k == 0 else ZERO
    if k < i:
        return ZERO
    num = _one_minus(n - 2 * k + 1) * gaussian(k - 1, i - 1) * gaussian(n - k, i - 1)
    return exact_divide(num, _one_minus(i)).shift(k + i * i - i)


@lru_cache(maxsize=None)
def f_two_row_recurrence(n: int, k: int, i: int) -> QPolynomial:
    """Same polynomial by peeling off ``n`` (top row end vs. a descent top)."""
    _check_two_row(n, k, i)
    if 2 * k > n:
        return ZERO
    if i == 0:
        return ONE if k == 0 else ZERO
    if k < i:
        return ZERO
    if i == 1:
        return QPolynomial.run(k, n - k)
    total = f_two_row_recurrence(n - 1, k, i)
    for k0 in range(i - 1, k):
        total += f_two_row_recurrence(n - k - 1 + k0, k0, i - 1).shift(n - k + k0)
    return total


@lru_cache(maxsize=None)
def a_polynomial(n: int, i: int) -> QPolynomial:
    """maj distribution over 321-avoiders in S_n with ``i`` descents, via RSK."""
    if n < 1 or i < 0:
        raise InvalidShape(f"bad index n={n}, i={i}")
    return sum_polys(
        f_two_row(n, k, i) * frt_multiplicity(n, k) for k in range(i, n // 2 + 1)
    )


def _check_three_row(m: int, k: int, i: int) -> None:
    if k < 1 or m < k or i < 0:
        raise InvalidShape(f"(m, k, 1) = ({m}, {k}, 1) with i={i} is not valid")


@lru_cache(maxsize=None)
def f_three_row(m: int, k: int, i: int) -> QPolynomial:
    """Closed form for SYT of shape ``(m, k, 1)`` with ``i`` descents."""
    _check_three_row(m, k, i)
    if i < 2 or k < i - 1:
        return ZERO
    num = (
        _one_minus(m - k + 1) * _one_minus(i - 1)
        * gaussian(k, i - 1) * gaussian(m + 1, i - 1)
    )
    q = exact_divide(exact_divide(num, _one_minus(i)), _one_minus(1))
    return q.shift(k + i * i - 2 * i + 2)


@lru_cache(maxsize=None)
def f_three_row_recurrence(m: int, k: int, i: int) -> QPolynomial:
    """Four-term recurrence on where ``m+k+1`` sits; two-row pieces use the closed form."""
    _check_three_row(m, k, i)
    if i < 2:
        return ZERO
    total = f_three_row_recurrence(m - 1, k, i) if m > k else ZERO
    total += f_two_row(m + k, k, i - 1).shift(m + k)
    for k0 in range(1, k):
        total += f_three_row_recurrence(m - 1, k0, i - 1).shift(m + k0 + 1)
        total += f_two_row(m + k0, k0, i - 1).shift(m + k0)
    return total


def qbinomial_identity_check(which: int, params: tuple[int, int]) -> tuple[QPolynomial, QPolynomial]:
    """Both sides of one of the two q-binomial summation identities.

    ``which=1``, ``params=(m, n)``:
        ``sum_{j=0..n} q^j [m+j, m]`` vs ``[n+m+1, m+1]``.
    ``which=2``, ``params=(a, B)``:
        ``sum_{j=a..B} q^(2j) [j, a]`` vs ``q^(2a) ([B+2, a+2] - q [B+1, a+2])``.
    """
    x, y = params
    if which == 1:
        m, n = x, y
        if m < 0 or n < 0:
            raise InvalidParams(f"identity 1 needs m, n >= 0, got {params}")
        lhs = sum_polys(gaussian(m + j, m).shift(j) for j in range(n + 1))
        rhs = gaussian(n + m + 1, m + 1)
        return lhs, rhs
    if which == 2:
        a, B = x, y
        if a < 0 or B < a:
            raise InvalidParams(f"identity 2 needs 0 <= a <= B, got {params}")
        lhs = sum_polys(gaussian(j, a).shift(2 * j) for j in range(a, B + 1))
        rhs = (gaussian(B + 2, a + 2) - gaussian(B + 1, a + 2).shift(1)).shift(2 * a)
        return lhs, rhs
    raise InvalidParams(f"unknown identity {which}")


def catalan(j: int) -> int:
    return comb(2 * j, j) // (j + 1)


def catalan_top_term(n: int) -> QPolynomial:
    """Coefficient of ``t^floor(n/2)`` in the 321 distribution.

    Even n: one recording tableau (odd entries on top), maj ``j^2``, so
    ``C_j q^(j^2)``.  Odd n: ``j + 1`` recording tableaux with maj
    ``j^2 .. j^2 + j``, each hit by ``(4j+2)/(j+2) C_j`` permutations.
    """
    if n < 2:
        raise InvalidN("n must be at least 2")
    j = n // 2
    if n % 2 == 0:
        return QPolynomial.monomial(j * j, catalan(j))
    factor = Fraction(4 * j + 2, j + 2) * catalan(j)
    assert factor.denominator == 1, factor
    return QPolynomial.run(j * j, j * j + j) * int(factor)


_RELATED = {"123", "231", "213", "312"}


def related_distribution(pattern: str, n: int) -> BivariatePolynomial:
    """Distribution for 123/231/213/312 derived without enumerating that class.

    123 comes from the 321 formula by reversal; the other three come from the
    enumerated 132 distribution by reverse, reverse-complement and complement.
    """
    pattern = str(pattern)
    if pattern not in _RELATED:
        raise ValueError(f"no derivation for pattern {pattern}")
    if n < 1:
        raise ValueError("n must be positive")
    top = n * (n - 1) // 2
    if pattern == "123":
        # reversal: des i -> n-1-i, maj M -> C(n,2) - n*i + M
        terms = {}
        for i in range(n // 2 + 1):
            a = a_polynomial(n, i)
            if a:
                terms[n - 1 - i] = a.shift(top - n * i)
        return BivariatePolynomial(terms)
    g = distribution(n, Permutation.parse("132"))
    terms = {}
    for i, p in g.terms.items():
        if pattern == "231":
            terms[n - 1 - i] = p.shift(top - n * i)
        elif pattern == "213":
            # rc keeps des and sends maj to n*des - maj
            terms[i] = reverse_within(p, n * i)
        else:
            # complement: des i -> n-1-i, maj M -> C(n,2) - M
            terms[n - 1 - i] = reverse_within(p, top)
    return BivariatePolynomial(terms)


def g132_low_coefficients(n: int) -> tuple[int, int, int]:
    """The q^3, q^4, q^5 coefficients of the t^2 term of the 132 distribution."""
    if n < 5:
        raise InvalidN("formula holds for n >= 5")
    b = comb(n - 1, 2)
    return b, b - 1, n * n - 4 * n + 1


def _is_mk1(shape: tuple[int, ...]) -> bool:
    return len(shape) == 3 and shape[2] == 1


def mk1_bijection(T: StandardYoungTableau) -> StandardYoungTableau:
    """Send a 2-descent SYT of shape (m, k, 1) to one of shape (m+1, k+1).

    The output has 2 descents and maj one larger.
    """
    if not _is_mk1(T.shape.parts):
        raise WrongShape(f"expected shape (m,k,1), got {T.shape}")
    if tableau_statistics(T).des != 2:
        raise WrongDescentCount("expected exactly 2 descents")
    r1, r2, (x,) = (list(r) for r in T.rows)
    i1 = r2[0] - 1
    j = 1
    while j < len(r2) and r2[j] == r2[j - 1] + 1:
        j += 1
    e = i1 + j
    # move i2+1 up behind the run, then the run's end up behind i1
    r2.insert(j, x)
    r2.remove(e)
    r1.insert(r1.index(i1) + 1, e)
    r1 = [v + 1 if v >= e else v for v in r1]
    r2 = [v + 1 if v >= e else v for v in r2]
    r2.insert(j - 1, e)
    return StandardYoungTableau((tuple(r1), tuple(r2)))


def mk1_bijection_inverse(S: StandardYoungTableau) -> StandardYoungTableau:
    parts = S.shape.parts
    if len(parts) != 2 or parts[1] < 2:
        raise WrongShape(f"expected shape (m+1, k+1) with k >= 1, got {S.shape}")
    st = tableau_statistics(S)
    if st.des != 2:
        raise WrongDescentCount("expected exactly 2 descents")
    r1, r2 = (list(r) for r in S.rows)
    i1 = st.descent_set[0]
    bottom2 = st.descent_set[1] + 1
    if r2[0] != i1 + 1 or bottom2 not in r2:
        raise NotInImage(str(S))
    j = 1
    while j < len(r2) and r2[j] == r2[j - 1] + 1:
        j += 1
    e = i1 + j
    if e + 1 not in r1 or bottom2 == e:
        raise NotInImage(str(S))
    r2.remove(bottom2)
    r2.remove(e)
    r1.remove(e + 1)
    r1 = [v - 1 if v > e else v for v in r1]
    r2 = [v - 1 if v > e else v for v in r2]
    r3 = [bottom2 - 1]
    r2.insert(j - 1, e)
    try:
        T = StandardYoungTableau((tuple(r1), tuple(r2), tuple(r3)))
    except ValueError as exc:
        raise NotInImage(str(S)) from exc
    if tableau_statistics(T).des != 2 or mk1_bijection(T) != S:
        raise NotInImage(str(S))
    return T

