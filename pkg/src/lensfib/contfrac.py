"""Negative continued fractions and the chain surgery presentation of L(p, q).

``[a_1, ..., a_n] = a_1 - 1/(a_2 - 1/(... - 1/a_n))``.  The canonical
expansion of ``-p/q`` (``p > q >= 1``) has every term ``<= -2``; it is unique
and is what :func:`expand_neg_cf` returns.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import DivisionByZeroInTail, NotCoprime, OutOfRange
from .kirby import FramedLinkMatrix

Rational = Fraction


def evaluate_cf(terms: Sequence[int]) -> Fraction:
    """Exact value of the negative continued fraction, evaluated right to left."""
    if not terms:
        raise ValueError("a continued fraction needs at least one term")
    num, den = terms[-1], 1
    for a in reversed(terms[:-1]):
        if num == 0:
            raise DivisionByZeroInTail(f"a suffix of {list(terms)} evaluates to 0")
        # a - den/num
        num, den = a * num - den, num
    return Fraction(num, den)


def expand_neg_cf(p: int, q: int) -> list[int]:
    if p < 2 or not 1 <= q < p:
        raise OutOfRange(f"need p >= 2 and 1 <= q < p, got p={p}, q={q}")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {math.gcd(p, q)}")
    terms = []
    num, den = -p, q  # x = num/den < -1 throughout, den > 0
    while True:
        # floor keeps the remainder tail below -1 as well
        a = num // den
        terms.append(a)
        r = a * den - num
        if r == 0:
            return terms
        # x <- 1/(a - x) = den/r with r < 0
        num, den = -den, -r


def chain_matrix(terms: Sequence[int]) -> FramedLinkMatrix:
    """Linking matrix of a linear chain of unknots framed by ``terms``."""
    n = len(terms)
    rows = [[0] * n for _ in range(n)]
    for i, a in enumerate(terms):
        rows[i][i] = a
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = 1
    return FramedLinkMatrix(rows)
