"""Division, Buchberger's algorithm and elimination.

The engine works on primitive integer polynomials internally (fraction-free
reduction) and converts back to monic rational polynomials at the end.
Criteria: Buchberger's coprime criterion and the chain criterion, both applied
through the Gebauer-Moeller update.  Pairs are selected by lowest lcm degree,
ties broken by the index pair.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import kernels
from .errors import AmbientMismatchError
from .polyring import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    monomial_divides,
    monomial_lcm,
)


class _GPoly:
    __slots__ = ("lm", "lc", "tail", "mask", "deg")

    def __init__(self, terms: Dict[Monomial, int], key):
        lm = max(terms, key=key)
        self.lm = lm
        self.lc = terms[lm]
        self.tail = [(m, c) for m, c in terms.items() if m != lm]
        self.mask = _mask(lm)
        self.deg = sum(lm)

    def terms(self) -> Dict[Monomial, int]:
        d = dict(self.tail)
        d[self.lm] = self.lc
        return d


def _mask(m: Monomial) -> int:
    bits = 0
    for i, a in enumerate(m):
        if a:
            bits |= 1 << i
    return bits


def _primitive(terms: Dict[Monomial, int], lm: Optional[Monomial] = None) -> Dict[Monomial, int]:
    g = 0
    for v in terms.values():
        g = gcd(g, v)
        if g == 1:
            break
    if lm is not None and terms[lm] < 0:
        g = -g
    if g in (0, 1):
        return terms
    return {m: v // g for m, v in terms.items()}


class _Engine:
    """Reduction machinery bound to one monomial order."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.key = order.key
        self._nkeys: Dict[Monomial, tuple] = {}

    def nkey(self, m: Monomial) -> tuple:
        k = self._nkeys.get(m)
        if k is None:
            k = tuple(-a for a in self.key(m))
            self._nkeys[m] = k
        return k

    def gpoly(self, terms: Dict[Monomial, int]) -> _GPoly:
        key = self.key
        lm = max(terms, key=key)
        return _GPoly(_primitive(terms, lm), key)

    def reduce(self, terms: Dict[Monomial, int], basis: Sequence[_GPoly], full: bool = True):
        """Fraction-free division of ``terms`` by ``basis``.

        Returns ``(remainder, scale)`` with ``scale * p - remainder`` in the
        ideal of ``basis``.
        """
        p = dict(terms)
        r: Dict[Monomial, int] = {}
        scale = 1
        nkey = self.nkey
        heap = [(nkey(m), m) for m in p]
        heapq.heapify(heap)
        while heap:
            _, m = heapq.heappop(heap)
            c = p.get(m)
            if c is None:
                continue
            mm = _mask(m)
            for g in basis:
                if g.mask & ~mm:
                    continue
                lm = g.lm
                if all(a <= b for a, b in zip(lm, m)):
                    break
            else:
                del p[m]
                r[m] = c
                if not full:
                    break
                continue
            del p[m]
            q = tuple(b - a for a, b in zip(lm, m))
            lc = g.lc
            k = gcd(lc, c)
            a, b = lc // k, c // k
            if a < 0:
                a, b = -a, -b
            if a != 1:
                scale *= a
                for t in p:
                    p[t] *= a
                for t in r:
                    r[t] *= a
            for e, cg in g.tail:
                t = tuple(x + y for x, y in zip(e, q))
                v = p.get(t)
                if v is None:
                    p[t] = -b * cg
                    heapq.heappush(heap, (nkey(t), t))
                else:
                    v -= b * cg
                    if v:
                        p[t] = v
                    else:
                        del p[t]
        if not full:
            r.update(p)
        return r, scale

    def spoly(self, f: _GPoly, g: _GPoly) -> Dict[Monomial, int]:
        lcm = monomial_lcm(f.lm, g.lm)
        k = gcd(f.lc, g.lc)
        a, b = g.lc // k, f.lc // k
        qf = tuple(x - y for x, y in zip(lcm, f.lm))
        qg = tuple(x - y for x, y in zip(lcm, g.lm))
        out: Dict[Monomial, int] = {}
        for e, c in f.tail:
            t = tuple(x + y for x, y in zip(e, qf))
            out[t] = out.get(t, 0) + a * c
        for e, c in g.tail:
            t = tuple(x + y for x, y in zip(e, qg))
            out[t] = out.get(t, 0) - b * c
        return {m: v for m, v in out.items() if v}

    def buchberger(self, inputs: Iterable[Dict[Monomial, int]]) -> List[_GPoly]:
        G: List[_GPoly] = []
        active: List[int] = []
        queue: List[tuple] = []
        pending: set = set()

        def update(h_idx: int):
            nonlocal active
            h = G[h_idx]
            lcms = {i: monomial_lcm(G[i].lm, h.lm) for i in active}
            C = list(active)
            D: List[int] = []
            while C:
                i = C.pop(0)
                li = lcms[i]
                coprime = not (G[i].mask & h.mask)
                if coprime or not (
                    any(monomial_divides(lcms[j], li) for j in C)
                    or any(monomial_divides(lcms[j], li) for j in D)
                ):
                    D.append(i)
            E = [i for i in D if G[i].mask & h.mask]
            hl = h.lm
            for pair in list(pending):
                i, j = pair
                lij = monomial_lcm(G[i].lm, G[j].lm)
                if (
                    monomial_divides(hl, lij)
                    and monomial_lcm(G[i].lm, hl) != lij
                    and monomial_lcm(G[j].lm, hl) != lij
                ):
                    pending.discard(pair)
            for i in E:
                pair = (i, h_idx)
                pending.add(pair)
                heapq.heappush(queue, (sum(lcms[i]), i, h_idx))
            active = [i for i in active if not monomial_divides(hl, G[i].lm)]
            active.append(h_idx)

        def insert(terms: Dict[Monomial, int]):
            r, _ = self.reduce(terms, [G[i] for i in active])
            if r:
                G.append(self.gpoly(r))
                update(len(G) - 1)

        for f in sorted(inputs, key=lambda t: self.key(max(t, key=self.key))):
            insert(f)
        while queue:
            _, i, j = heapq.heappop(queue)
            if (i, j) not in pending:
                continue
            pending.discard((i, j))
            s = self.spoly(G[i], G[j])
            if s:
                insert(s)
        return self.interreduce([G[i] for i in active])

    def interreduce(self, basis: List[_GPoly]) -> List[_GPoly]:
        basis = [
            g for g in basis
            if not any(h is not g and monomial_divides(h.lm, g.lm) for h in basis)
        ]
        out = []
        for g in basis:
            others = [h for h in basis if h is not g]
            tail, scale = self.reduce(dict(g.tail), others)
            terms = {m: v for m, v in tail.items()}
            terms[g.lm] = g.lc * scale
            out.append(self.gpoly(terms))
        out.sort(key=lambda g: self.key(g.lm))
        return out


def _to_int_terms(p: Polynomial) -> Dict[Monomial, int]:
    return p.primitive_integer_terms()


def _to_monic(g: _GPoly, nvars: int) -> Polynomial:
    lc = g.lc
    terms = {m: Fraction(c, lc) for m, c in g.tail}
    terms[g.lm] = Fraction(1)
    return Polynomial._raw(terms, nvars)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def reduce(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of ``p`` under multivariate division by ``basis``."""
    for g in basis:
        p._check(g)
        if g.is_zero():
            raise ValueError("cannot divide by the zero polynomial")
    if p.is_zero():
        return p
    eng = _Engine(order)
    terms = p.primitive_integer_terms()
    m0 = next(iter(terms))
    s0 = Fraction(terms[m0]) / p.coefficient(m0)
    r, scale = eng.reduce(terms, [eng.gpoly(g.primitive_integer_terms()) for g in basis])
    denom = s0 * scale
    return Polynomial._raw({m: Fraction(c) / denom for m, c in r.items()}, p.nvars)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = monomial_lcm(mf, mg)
    qf = tuple(a - b for a, b in zip(lcm, mf))
    qg = tuple(a - b for a, b in zip(lcm, mg))
    return f.shift(qf, 1 / cf) - g.shift(qg, 1 / cg)


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> List[Polynomial]:
    """Reduced Groebner basis (monic, sorted by ascending leading monomial)."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return []
    nvars = gens[0].nvars
    for g in gens:
        if g.nvars != nvars:
            raise AmbientMismatchError("generators live in different rings")
    eng = _Engine(order)
    basis = eng.buchberger([g.primitive_integer_terms() for g in gens])
    return [_to_monic(g, nvars) for g in basis]


def buchberger_plain(generators: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> List[Polynomial]:
    """Textbook Buchberger with no criteria, in rational arithmetic.

    Slow; kept as an independent oracle for :func:`buchberger`.
    """
    G = [g.monic(order) for g in generators if not g.is_zero()]
    if not G:
        return []
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        h = _naive_remainder(s_polynomial(G[i], G[j], order), G, order)
        if not h.is_zero():
            G.append(h.monic(order))
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    lms = [g.leading_monomial(order) for g in G]
    minimal = []
    for idx, g in enumerate(G):
        m = lms[idx]
        if any(
            monomial_divides(lms[k], m) and (lms[k] != m or k < idx)
            for k in range(len(G)) if k != idx
        ):
            continue
        minimal.append(g)
    out = [
        _naive_remainder(g, [h for h in minimal if h is not g], order).monic(order)
        for g in minimal
    ]
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


def _naive_remainder(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    leads = [(g.leading_term(order), g) for g in basis]
    r = Polynomial.zero(p.nvars)
    while not p.is_zero():
        m, c = p.leading_term(order)
        for (lm, lc), g in leads:
            if monomial_divides(lm, m):
                p = p - g.shift(tuple(a - b for a, b in zip(m, lm)), c / lc)
                break
        else:
            r = r + Polynomial.monomial(m, c)
            p = p - Polynomial.monomial(m, c)
    return r


def is_groebner_basis(basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    """True iff every S-polynomial of ``basis`` reduces to zero."""
    for j in range(len(basis)):
        for i in range(j):
            if not reduce(s_polynomial(basis[i], basis[j], order), basis, order).is_zero():
                return False
    return True


def is_reduced_basis(basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    lms = [g.leading_term(order) for g in basis]
    if any(c != 1 for _, c in lms):
        return False
    for g in basis:
        for m in g.monomials():
            for (lm, _), h in zip(lms, basis):
                if h is not g and monomial_divides(lm, m):
                    return False
    return True


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


class Ideal:
    """Ideal of a polynomial ring in ``nvars`` variables, with cached bases.

    Generators are stored as given (zero generators dropped).  Reduced
    Groebner bases are memoised per monomial order; the cache never changes
    the mathematical value of the ideal.
    """

    def __init__(self, generators: Iterable[Polynomial] = (), nvars: Optional[int] = None):
        gens = tuple(g for g in generators if not g.is_zero())
        if nvars is None:
            if not gens:
                raise ValueError("nvars is required for the zero ideal")
            nvars = gens[0].nvars
        for g in gens:
            if g.nvars != nvars:
                raise AmbientMismatchError(f"generator {g} is not in {nvars} variables")
        self.generators = gens
        self.nvars = nvars
        self._bases: Dict[MonomialOrder, Tuple[Polynomial, ...]] = {}

    @property
    def ambient(self) -> int:
        """Index ``n`` of the projective space ``P^n``."""
        return self.nvars - 1

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous()[0] for g in self.generators)

    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> Tuple[Polynomial, ...]:
        basis = self._bases.get(order)
        if basis is None:
            basis = tuple(buchberger(self.generators, order))
            self._bases[order] = basis
        return basis

    def cached_orders(self):
        return tuple(self._bases)

    def contains(self, p: Polynomial) -> bool:
        return reduce(p, self.groebner_basis(), GREVLEX).is_zero()

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal([{gens}], nvars={self.nvars})"


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (sorted)."""

    nvars: int
    minimal_generators: Tuple[Monomial, ...] = field(default=())

    @classmethod
    def from_monomials(cls, monomials: Iterable[Sequence[int]], nvars: int) -> "MonomialIdeal":
        monos = [tuple(int(a) for a in m) for m in monomials]
        for m in monos:
            if len(m) != nvars:
                raise AmbientMismatchError(f"monomial {m} is not in {nvars} variables")
        return cls(nvars, tuple(sorted(kernels.minimalize(monos, nvars))))

    def __len__(self) -> int:
        return len(self.minimal_generators)

    def contains(self, m: Monomial) -> bool:
        return any(monomial_divides(g, m) for g in self.minimal_generators)


def leading_ideal(I: Ideal, order: MonomialOrder = GREVLEX) -> MonomialIdeal:
    basis = I.groebner_basis(order)
    return MonomialIdeal.from_monomials((g.leading_monomial(order) for g in basis), I.nvars)


def elimination_ideal(I: Ideal, drop_first_k: int) -> Ideal:
    """``I`` intersected with the subring in the last ``nvars - k`` variables.

    The result lives in ``nvars - k`` variables and already carries its
    reduced grevlex basis, which is the part of the block-order basis free of
    the eliminated variables.
    """
    k = drop_first_k
    if not 0 <= k <= I.nvars:
        raise ValueError(f"cannot drop {k} of {I.nvars} variables")
    if k == 0:
        return I
    order = MonomialOrder.elimination(k)
    kept = [
        g.drop_variables(k)
        for g in I.groebner_basis(order)
        if not any(any(m[:k]) for m in g.monomials())
    ]
    J = Ideal(kept, I.nvars - k)
    J._bases[GREVLEX] = tuple(kept)
    return J
