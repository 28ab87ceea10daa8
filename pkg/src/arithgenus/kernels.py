"""Exponent-vector kernels for monomial ideals.

Two implementations of each kernel live here: a numba ``@njit`` loop and a
vectorised numpy version.  The numba path is used unless numba is missing or
the environment variable ``ARITHGENUS_DISABLE_NUMBA`` is set to a non-empty
value other than ``0``.  Both paths are always importable so tests and the
benchmark can compare them directly.

Only integer exponent data passes through these kernels; all coefficient
arithmetic stays in exact Python integers elsewhere.
"""

from __future__ import annotations

import os
from math import comb
from typing import List, Sequence, Tuple

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("ARITHGENUS_DISABLE_NUMBA", "") in ("", "0")


# ---------------------------------------------------------------------------
# monomials of a fixed degree
# ---------------------------------------------------------------------------


def _compositions_py(nvars: int, d: int) -> np.ndarray:
    out = np.zeros((comb(d + nvars - 1, nvars - 1) if nvars else int(d == 0), nvars), dtype=np.int64)
    if nvars == 0:
        return out
    # iterate compositions in lex-descending order
    e = np.zeros(nvars, dtype=np.int64)
    e[0] = d
    row = 0
    while True:
        out[row] = e
        row += 1
        # find rightmost non-last position with a positive entry
        j = nvars - 2
        while j >= 0 and e[j] == 0:
            j -= 1
        if j < 0:
            break
        e[j] -= 1
        rest = e[nvars - 1] + 1
        e[nvars - 1] = 0
        e[j + 1] = rest
    return out


def compositions_numpy(nvars: int, d: int) -> np.ndarray:
    """All exponent vectors of total degree ``d``, one per row."""
    return _compositions_py(nvars, d)


def count_standard_numpy(gens: np.ndarray, monos: np.ndarray) -> int:
    if monos.shape[0] == 0:
        return 0
    if gens.shape[0] == 0:
        return int(monos.shape[0])
    total = 0
    # chunk to bound the (monos x gens x vars) temporary
    step = max(1, 2_000_000 // max(1, gens.shape[0] * gens.shape[1]))
    for lo in range(0, monos.shape[0], step):
        block = monos[lo:lo + step]
        divisible = (block[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
        total += int((~divisible).sum())
    return total


def minimal_mask_numpy(gens: np.ndarray) -> np.ndarray:
    n = gens.shape[0]
    if n == 0:
        return np.zeros(0, dtype=np.bool_)
    # divides[i, j]: gens[i] divides gens[j]
    divides = (gens[:, None, :] <= gens[None, :, :]).all(axis=2)
    equal = (gens[:, None, :] == gens[None, :, :]).all(axis=2)
    earlier_equal = np.triu(equal, k=1)  # i < j, same monomial
    strict = divides & ~equal
    redundant = strict.any(axis=0) | earlier_equal.any(axis=0)
    return ~redundant


if HAVE_NUMBA:

    @njit(cache=True)
    def compositions_numba(nvars, d):
        if nvars == 0:
            return np.zeros((1 if d == 0 else 0, 0), dtype=np.int64)
        # binomial(d + nvars - 1, nvars - 1)
        count = 1
        for i in range(1, nvars):
            count = count * (d + i) // i
        out = np.zeros((count, nvars), dtype=np.int64)
        e = np.zeros(nvars, dtype=np.int64)
        e[0] = d
        row = 0
        while True:
            for k in range(nvars):
                out[row, k] = e[k]
            row += 1
            j = nvars - 2
            while j >= 0 and e[j] == 0:
                j -= 1
            if j < 0:
                break
            e[j] -= 1
            rest = e[nvars - 1] + 1
            e[nvars - 1] = 0
            e[j + 1] = rest
        return out

    @njit(cache=True)
    def count_standard_numba(gens, monos):
        total = 0
        ng, nv = gens.shape
        for r in range(monos.shape[0]):
            standard = True
            for g in range(ng):
                div = True
                for k in range(nv):
                    if gens[g, k] > monos[r, k]:
                        div = False
                        break
                if div:
                    standard = False
                    break
            if standard:
                total += 1
        return total

    @njit(cache=True)
    def minimal_mask_numba(gens):
        n, nv = gens.shape
        keep = np.ones(n, dtype=np.bool_)
        for j in range(n):
            for i in range(n):
                if i == j:
                    continue
                div = True
                same = True
                for k in range(nv):
                    if gens[i, k] > gens[j, k]:
                        div = False
                        break
                    if gens[i, k] != gens[j, k]:
                        same = False
                if div and (not same or i < j):
                    keep[j] = False
                    break
        return keep

else:  # pragma: no cover
    compositions_numba = compositions_numpy
    count_standard_numba = count_standard_numpy
    minimal_mask_numba = minimal_mask_numpy


if USE_NUMBA:
    compositions = compositions_numba
    count_standard = count_standard_numba
    minimal_mask = minimal_mask_numba
else:
    compositions = compositions_numpy
    count_standard = count_standard_numpy
    minimal_mask = minimal_mask_numpy


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def as_array(monomials: Sequence[Sequence[int]], nvars: int) -> np.ndarray:
    if not monomials:
        return np.zeros((0, nvars), dtype=np.int64)
    return np.asarray(monomials, dtype=np.int64).reshape(len(monomials), nvars)


def minimalize(monomials: Sequence[Tuple[int, ...]], nvars: int) -> List[Tuple[int, ...]]:
    """Minimal generators of the monomial ideal spanned by ``monomials``."""
    if not monomials:
        return []
    arr = as_array(monomials, nvars)
    keep = minimal_mask(arr)
    return [tuple(int(a) for a in arr[i]) for i in range(arr.shape[0]) if keep[i]]


def standard_monomial_count(gens: Sequence[Tuple[int, ...]], nvars: int, d: int) -> int:
    """Number of degree-``d`` monomials divisible by none of ``gens``."""
    if d < 0:
        return 0
    monos = compositions(nvars, d)
    return int(count_standard(as_array(list(gens), nvars), monos))
