"""Arithmetic genus and Euler characteristic.

Two routes to the same numbers:

* closed forms for hypersurfaces and products (:func:`hypersurface_genus`,
  :func:`product_genus`, :func:`theorem_prod_genus`);
* the ideal pipeline :func:`analyze`, which goes Groebner basis -> leading
  ideal -> Hilbert series -> Hilbert polynomial ``P`` and reads off
  ``p_a = (-1)^r (P(0) - 1)``.

Ideals need not be prime; genera are those of the projective scheme cut out
by the ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Tuple

import numpy as np

from .errors import NonHomogeneousError, PreconditionError, VerificationMismatch, ZeroQuotientError
from .groebner import Ideal, leading_ideal
from .hilbert import (
    HilbertPolynomial,
    dimension_and_degree,
    hilbert_function,
    hilbert_numerator,
    hilbert_polynomial,
)
from .polyring import GREVLEX, MonomialOrder, Polynomial, monomials_of_degree

#: width of the Hilbert-function/polynomial agreement window checked by analyze
CHECK_WINDOW = 6


def paper_binomial(a: int, b: int) -> int:
    """``binom(a, b)`` with the convention ``binom(a, b) = 0`` whenever ``a < b``."""
    if b < 0:
        raise ValueError("lower index must be non-negative")
    if a < b:
        return 0
    return comb(a, b)


def hypersurface_genus(d: int, N: int) -> int:
    """Genus of a degree-``d`` hypersurface in ``P^N``: ``binom(d-1, N)``."""
    if d < 1 or N < 1:
        raise PreconditionError(f"need d >= 1 and N >= 1, got d={d}, N={N}")
    return paper_binomial(d - 1, N)


def product_genus(paY: int, r: int, paZ: int, s: int) -> int:
    """Genus of ``Y x Z`` from the genera and dimensions of the factors."""
    if r < 0 or s < 0:
        raise PreconditionError("dimensions must be non-negative")
    return paY * paZ + (-1) ** s * paY + (-1) ** r * paZ


def theorem_prod_genus(d: int, n: int, l: int, m: int, relaxed: bool = False) -> int:
    """Genus of ``H_d x H_l`` with ``H_d`` in ``P^{2n}`` and ``H_l`` in ``P^m``.

    Requires ``d - 1 < n``.  With ``relaxed=True`` only ``d - 1 < 2n`` is
    demanded, which is all that ``p_a(H_d) = 0`` needs.
    """
    if min(d, n, l, m) < 1:
        raise PreconditionError(f"degrees and ambients must be positive: {(d, n, l, m)}")
    bound = 2 * n if relaxed else n
    if d - 1 >= bound:
        raise PreconditionError(f"hypothesis d - 1 < {'2n' if relaxed else 'n'} fails for d={d}, n={n}")
    genus_d = hypersurface_genus(d, 2 * n)
    genus_l = hypersurface_genus(l, m)
    value = product_genus(genus_d, 2 * n - 1, genus_l, m - 1)
    assert value == -paper_binomial(l - 1, m)
    return value


def euler_characteristic(p_a: int, r: int) -> int:
    """``chi(O_Y) = 1 + (-1)^r p_a``."""
    if r < 0:
        raise PreconditionError("dimension must be non-negative")
    return 1 + (-1) ** r * p_a


def genus_from_euler(chi: int, r: int) -> int:
    if r < 0:
        raise PreconditionError("dimension must be non-negative")
    return (-1) ** r * (chi - 1)


def random_form(d: int, nvars: int, seed: int) -> Polynomial:
    """Dense degree-``d`` form with coefficients uniform on the nonzero integers in [-9, 9].

    Coefficients are assigned to monomials in lex-descending order, so a
    seed fixes the form completely.
    """
    if d < 0 or nvars < 1:
        raise PreconditionError(f"bad form shape d={d}, nvars={nvars}")
    rng = np.random.default_rng(seed)
    monos = list(monomials_of_degree(nvars, d))
    draws = rng.integers(1, 10, size=len(monos)) * rng.choice((-1, 1), size=len(monos))
    return Polynomial({m: int(c) for m, c in zip(monos, draws)}, nvars)


@dataclass(frozen=True)
class VarietyReport:
    """Invariants of the projective scheme ``Proj(k[x_0..x_N]/I)``."""

    ambient_n: int
    r: int
    degree: int
    hilbert: HilbertPolynomial
    p_a: int
    chi: int
    t0: int
    checked_window: Tuple[int, int]
    order: str = "grevlex"
    seed: Optional[int] = None

    def __post_init__(self):
        if self.p_a != (-1) ** self.r * (self.hilbert(0) - 1):
            raise ValueError(f"p_a={self.p_a} does not match P(0)={self.hilbert(0)}")
        if self.chi != 1 + (-1) ** self.r * self.p_a:
            raise ValueError(f"chi={self.chi} inconsistent with p_a={self.p_a}")

    def to_dict(self) -> dict:
        return {
            "ambient_n": self.ambient_n,
            "r": self.r,
            "degree": self.degree,
            "hilbert_polynomial": [str(c) for c in self.hilbert.coefficients],
            "hilbert_polynomial_text": str(self.hilbert),
            "p_a": self.p_a,
            "chi": self.chi,
            "t0": self.t0,
            "checked_window": list(self.checked_window),
            "order": self.order,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VarietyReport":
        coeffs = tuple(Fraction(c) for c in d["hilbert_polynomial"])
        t0 = int(d["t0"])
        return cls(
            ambient_n=int(d["ambient_n"]),
            r=int(d["r"]),
            degree=int(d["degree"]),
            hilbert=HilbertPolynomial(coeffs, len(coeffs) - 1, t0),
            p_a=int(d["p_a"]),
            chi=int(d["chi"]),
            t0=t0,
            checked_window=tuple(int(x) for x in d["checked_window"]),
            order=d.get("order", "grevlex"),
            seed=None if d.get("seed") is None else int(d["seed"]),
        )


def hilbert_polynomial_of(I: Ideal, order: MonomialOrder = GREVLEX) -> HilbertPolynomial:
    return hilbert_polynomial(hilbert_numerator(leading_ideal(I, order)))


def analyze(
    I: Ideal,
    order: MonomialOrder = GREVLEX,
    seed: Optional[int] = None,
    window: int = CHECK_WINDOW,
) -> VarietyReport:
    """Dimension, degree, Hilbert polynomial, ``p_a`` and ``chi`` of ``V(I)``.

    The Hilbert polynomial is checked against a brute-force count of standard
    monomials on ``window`` consecutive degrees starting at its threshold.
    """
    for g in I.generators:
        if not g.is_homogeneous()[0]:
            raise NonHomogeneousError(f"generator {g} is not homogeneous")
    M = leading_ideal(I, order)
    P = hilbert_polynomial(hilbert_numerator(M))
    if P.is_zero():
        raise ZeroQuotientError("the ideal defines the empty projective scheme")
    for t in range(P.t0, P.t0 + window):
        if hilbert_function(M, None, t) != P(t):
            raise VerificationMismatch(f"Hilbert function and polynomial disagree at t={t}")
    r, degree = dimension_and_degree(P)
    p0 = P(0)
    assert p0.denominator == 1
    p_a = (-1) ** r * (int(p0) - 1)
    return VarietyReport(
        ambient_n=I.ambient,
        r=r,
        degree=degree,
        hilbert=P,
        p_a=p_a,
        chi=euler_characteristic(p_a, r),
        t0=P.t0,
        checked_window=(P.t0, P.t0 + window - 1),
        order=str(order),
        seed=seed,
    )
