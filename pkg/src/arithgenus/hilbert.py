"""Hilbert series and Hilbert polynomials of cyclic quotients ``k[x]/M``.

``M`` is a monomial ideal (usually a leading-term ideal), which has the same
Hilbert function as the original homogeneous ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple

from . import kernels
from .groebner import MonomialIdeal


# -- integer polynomial helpers (coefficient lists, ascending powers) -------


def _padd(a: List[int], b: List[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _pmul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _trim(a: List[int]) -> List[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pivot_variable(gens: Sequence[Tuple[int, ...]], nvars: int) -> int:
    counts = [0] * nvars
    for g in gens:
        for i, a in enumerate(g):
            if a:
                counts[i] += 1
    best = max(counts)
    return counts.index(best)


def _pairwise_coprime(gens: Sequence[Tuple[int, ...]]) -> bool:
    seen = 0
    for g in gens:
        mask = 0
        for i, a in enumerate(g):
            if a:
                mask |= 1 << i
        if mask & seen:
            return False
        seen |= mask
    return True


def _numerator(gens: List[Tuple[int, ...]], nvars: int) -> List[int]:
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return [0]
    if _pairwise_coprime(gens):
        out = [1]
        for g in gens:
            d = sum(g)
            out = _pmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    x = _pivot_variable(gens, nvars)
    var = tuple(1 if i == x else 0 for i in range(nvars))
    # M + (x)
    plus = [g for g in gens if not g[x]] + [var]
    # M : x
    colon = [g[:x] + (g[x] - 1,) + g[x + 1:] if g[x] else g for g in gens]
    colon = kernels.minimalize(colon, nvars)
    return _padd(_numerator(plus, nvars), [0] + _numerator(colon, nvars))


@dataclass(frozen=True)
class HilbertSeriesNumerator:
    """Hilbert series ``raw(t) / (1-t)^nvars`` of ``k[x_0..x_{nvars-1}]/M``.

    ``cancelled`` is ``raw`` with every ``(1-t)`` factor divided out, leaving
    ``cancelled(t) / (1-t)^poles``.
    """

    nvars: int
    raw: Tuple[int, ...]
    cancelled: Tuple[int, ...]
    poles: int

    @classmethod
    def from_raw(cls, raw: Sequence[int], nvars: int) -> "HilbertSeriesNumerator":
        h = _trim(list(raw))
        poles = nvars
        if h == [0]:
            return cls(nvars, (0,), (0,), 0)
        while poles > 0 and sum(h) == 0:
            q, acc = [], 0
            for c in h[:-1]:
                acc += c
                q.append(acc)
            h = _trim(q) if q else [0]
            poles -= 1
        return cls(nvars, tuple(_trim(list(raw))), tuple(h), poles)

    def is_zero(self) -> bool:
        return self.raw == (0,)

    @property
    def multiplicity(self) -> int:
        """``cancelled(1)``: the degree of the projective scheme when ``poles > 0``."""
        return sum(self.cancelled)

    def series(self, upto: int) -> List[int]:
        """Hilbert function values for degrees ``0..upto`` expanded from the series."""
        return [_series_value(self.cancelled, self.poles, t) for t in range(upto + 1)]


def _series_value(c: Sequence[int], poles: int, t: int) -> int:
    if poles == 0:
        return c[t] if t < len(c) else 0
    r = poles - 1
    return sum(ci * comb(t - i + r, r) for i, ci in enumerate(c) if i <= t)


def hilbert_numerator(M: MonomialIdeal, nvars: Optional[int] = None) -> HilbertSeriesNumerator:
    """Numerator of the Hilbert series of ``k[x]/M`` by recursive pivoting.

    Splits on the variable ``x`` occurring in most minimal generators:
    ``N(M) = N(M + (x)) + t * N(M : x)``.  Pairwise coprime generator sets
    are the base case.
    """
    nvars = M.nvars if nvars is None else nvars
    if nvars != M.nvars:
        raise ValueError(f"monomial ideal lives in {M.nvars} variables, not {nvars}")
    raw = _numerator(list(M.minimal_generators), nvars)
    return HilbertSeriesNumerator.from_raw(raw, nvars)


def hilbert_function(M: MonomialIdeal, nvars: Optional[int], t: int) -> int:
    """Brute-force count of degree-``t`` standard monomials of ``M``."""
    nvars = M.nvars if nvars is None else nvars
    if t < 0:
        raise ValueError("degree must be non-negative")
    return kernels.standard_monomial_count(M.minimal_generators, nvars, t)


# -- Hilbert polynomials ----------------------------------------------------


@dataclass(frozen=True)
class HilbertPolynomial:
    """``P(t)`` in the power basis.  ``r`` is its degree (``None`` when zero).

    ``t0`` is the least degree from which the Hilbert function agrees with
    ``P`` (checked, not estimated).
    """

    coefficients: Tuple[Fraction, ...]
    r: Optional[int]
    t0: int = 0

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def is_zero(self) -> bool:
        return self.r is None

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    @property
    def constant_term(self) -> Fraction:
        return self.coefficients[0] if self.coefficients else Fraction(0)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    @classmethod
    def from_values(cls, coeffs: Sequence, t0: int = 0) -> "HilbertPolynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs), len(cs) - 1 if cs else None, t0)


def _binomial_poly(shift: int, r: int) -> List[Fraction]:
    """Coefficients of ``binom(t + shift + r, r)`` as a polynomial in ``t``."""
    poly = [Fraction(1)]
    for j in range(1, r + 1):
        a = shift + j
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += c * a
            nxt[i + 1] += c
        poly = nxt
    f = factorial(r)
    return [c / f for c in poly]


def hilbert_polynomial(h: HilbertSeriesNumerator, nvars: Optional[int] = None) -> HilbertPolynomial:
    """The polynomial agreeing with the Hilbert function in large degree."""
    if nvars is not None and nvars != h.nvars:
        raise ValueError(f"numerator was computed in {h.nvars} variables, not {nvars}")
    if h.is_zero():
        return HilbertPolynomial((), None, 0)
    c = h.cancelled
    if h.poles == 0:
        # Artinian quotient: the Hilbert function vanishes from degree len(c) on
        return HilbertPolynomial((), None, len(_trim(list(c))))
    r = h.poles - 1
    coeffs = [Fraction(0)] * (r + 1)
    for i, ci in enumerate(c):
        if ci:
            for k, b in enumerate(_binomial_poly(-i, r)):
                coeffs[k] += ci * b
    P = HilbertPolynomial.from_values(coeffs)
    # agreement is automatic from degree len(c)-1-r on; walk down to the true threshold
    t0 = max(0, len(c) - 1 - r)
    while t0 > 0 and _series_value(c, h.poles, t0 - 1) == P(t0 - 1):
        t0 -= 1
    return HilbertPolynomial(P.coefficients, P.r, t0)


def dimension_and_degree(P: HilbertPolynomial) -> Tuple[int, int]:
    """``(r, deg)`` with ``r = deg P`` and ``deg = r! * leading coefficient``."""
    if P.is_zero():
        raise ValueError("the zero Hilbert polynomial has no dimension")
    deg = P.leading_coefficient * factorial(P.r)
    if deg.denominator != 1 or deg <= 0:
        raise ValueError(f"{P} is not the Hilbert polynomial of a projective scheme")
    return P.r, int(deg)
