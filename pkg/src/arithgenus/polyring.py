"""Sparse multivariate polynomials over the rationals.

Monomials are plain tuples of non-negative exponents, one slot per ambient
variable ``x0 .. xn``.  Coefficients are :class:`fractions.Fraction`, which
keeps every value in lowest terms with a positive denominator.

Example::

    >>> x0, x1 = Polynomial.variables(2)
    >>> (x0 + x1) * (x0 - x1)
    Polynomial('x0^2 - x1^2', nvars=2)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from numbers import Rational
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .errors import AmbientMismatchError

Monomial = Tuple[int, ...]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def monomial_divides(u: Monomial, v: Monomial) -> bool:
    """True iff ``u`` divides ``v``."""
    return all(a <= b for a, b in zip(u, v))


def monomial_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a > b else b for a, b in zip(u, v))


def monomials_of_degree(nvars: int, d: int) -> Iterator[Monomial]:
    """All monomials of total degree ``d`` in ``nvars`` variables, lex-descending."""
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


def _grevlex_key(e: Monomial) -> tuple:
    return (sum(e),) + tuple(-a for a in reversed(e))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order, realised as a sort key on exponent tuples.

    ``kind`` is one of ``"grevlex"``, ``"lex"`` or ``"elim"``.  The
    elimination order compares the first ``block`` exponents
    lexicographically and breaks ties by grevlex on the remaining ones, so
    any monomial touching the first block beats every monomial free of it.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 0:
            raise ValueError("elimination block size must be non-negative")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def elimination(cls, k: int) -> "MonomialOrder":
        return cls("elim", k)

    @cached_property
    def key(self) -> Callable[[Monomial], tuple]:
        if self.kind == "grevlex":
            return _grevlex_key
        if self.kind == "lex":
            return tuple
        k = self.block

        def elim_key(e: Monomial) -> tuple:
            return tuple(e[:k]) + _grevlex_key(e[k:])

        return elim_key

    def __str__(self) -> str:
        return f"elim({self.block})" if self.kind == "elim" else self.kind


GREVLEX = MonomialOrder.grevlex()
LEX = MonomialOrder.lex()


def compare(u: Monomial, v: Monomial, order: MonomialOrder = GREVLEX) -> int:
    """Return -1, 0 or 1 as ``u`` is smaller than, equal to or larger than ``v``."""
    if len(u) != len(v):
        raise AmbientMismatchError(f"monomials of length {len(u)} and {len(v)}")
    ku, kv = order.key(u), order.key(v)
    return (ku > kv) - (ku < kv)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficient {c!r} is not an exact rational")


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = (), nvars: Optional[int] = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(int(a) for a in m)
            if any(a < 0 for a in m):
                raise ValueError(f"negative exponent in {m}")
            if nvars is None:
                nvars = len(m)
            elif len(m) != nvars:
                raise AmbientMismatchError(f"monomial {m} does not live in {nvars} variables")
            c = _as_fraction(c)
            if c:
                c = clean.get(m, 0) + c
                if c:
                    clean[m] = c
                else:
                    del clean[m]
        if nvars is None:
            raise ValueError("nvars is required for the zero polynomial")
        self._terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], nvars: int) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        c = _as_fraction(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Polynomial":
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"variable x{i} outside {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): Fraction(1)}, nvars)

    @classmethod
    def variables(cls, nvars: int) -> Tuple["Polynomial", ...]:
        return tuple(cls.variable(i, nvars) for i in range(nvars))

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> Optional[int]:
        """Maximal total degree of a term; ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> Tuple[bool, Optional[int]]:
        """Return ``(flag, degree)``; the zero polynomial gives ``(True, None)``."""
        degs = {sum(m) for m in self._terms}
        if not degs:
            return True, None
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def variables_used(self) -> set:
        return {i for m in self._terms for i, a in enumerate(m) if a}

    def leading_term(self, order: MonomialOrder = GREVLEX) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self._terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise AmbientMismatchError(
                f"polynomials live in {self.nvars} and {other.nvars} variables"
            )

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            c = _as_fraction(other)
            if not c:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw({m: v * c for m, v in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        return self * (1 / self.leading_term(order)[1])

    def shift(self, m: Monomial, c=1) -> "Polynomial":
        """Multiply by the term ``c * x^m``."""
        c = _as_fraction(c)
        return Polynomial._raw(
            {monomial_mul(k, m): v * c for k, v in self._terms.items()} if c else {}, self.nvars
        )

    # -- change of ring -----------------------------------------------------

    def embed(self, nvars: int, offset: int = 0) -> "Polynomial":
        """Re-home into ``nvars`` variables, mapping ``x_i`` to ``x_{i+offset}``."""
        if offset < 0 or offset + self.nvars > nvars:
            raise AmbientMismatchError("embedding does not fit the target ring")
        pad_l, pad_r = (0,) * offset, (0,) * (nvars - offset - self.nvars)
        return Polynomial._raw({pad_l + m + pad_r: c for m, c in self._terms.items()}, nvars)

    def drop_variables(self, k: int) -> "Polynomial":
        """Forget the first ``k`` variables, which must not occur."""
        out = {}
        for m, c in self._terms.items():
            if any(m[:k]):
                raise ValueError(f"polynomial involves one of the first {k} variables")
            out[m[k:]] = c
        return Polynomial._raw(out, self.nvars - k)

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``x_i -> images[i]``; all images share one ambient ring."""
        if len(images) != self.nvars:
            raise AmbientMismatchError("need one image per variable")
        if not images:
            return self
        target = images[0].nvars
        powers = [[Polynomial.constant(1, target)] for _ in images]
        result = Polynomial.zero(target)
        for m, c in self._terms.items():
            t = Polynomial.constant(c, target)
            for i, a in enumerate(m):
                if not a:
                    continue
                cache = powers[i]
                while len(cache) <= a:
                    cache.append(cache[-1] * images[i])
                t = t * cache[a]
            result = result + t
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, a in zip(point, m):
                if a:
                    v *= Fraction(x) ** a
            total += v
        return total

    # -- integer views used by the Groebner engine ---------------------------

    def primitive_integer_terms(self) -> Dict[Monomial, int]:
        """Scale to coprime integer coefficients (sign kept)."""
        from math import gcd, lcm

        if not self._terms:
            return {}
        den = lcm(*(c.denominator for c in self._terms.values()))
        ints = {m: int(c * den) for m, c in self._terms.items()}
        g = gcd(*ints.values())
        return {m: v // g for m, v in ints.items()}

    # -- comparison / printing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def to_string(self, names: Optional[Sequence[str]] = None, order: MonomialOrder = GREVLEX) -> str:
        from .parsing import format_polynomial

        return format_polynomial(self, names, order)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r}, nvars={self.nvars})"


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p * q


def is_homogeneous(p: Polynomial) -> Tuple[bool, Optional[int]]:
    return p.is_homogeneous()


def leading_term(p: Polynomial, order: MonomialOrder = GREVLEX) -> Tuple[Monomial, Fraction]:
    return p.leading_term(order)
