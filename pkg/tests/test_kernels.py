import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithgenus import kernels

from oracles import monomials, pascal

needs_numba = pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")


@pytest.mark.parametrize("nvars,d", [(1, 0), (1, 4), (3, 0), (3, 2), (4, 5), (6, 3)])
def test_compositions_numpy(nvars, d):
    arr = kernels.compositions_numpy(nvars, d)
    assert arr.shape == (pascal(d + nvars - 1, nvars - 1), nvars)
    assert sorted(map(tuple, arr.tolist())) == sorted(monomials(nvars, d))
    assert (arr.sum(axis=1) == d).all()


@needs_numba
@pytest.mark.parametrize("nvars,d", [(1, 4), (3, 2), (4, 5), (6, 3)])
def test_compositions_backends_agree(nvars, d):
    np.testing.assert_array_equal(kernels.compositions_numba(nvars, d), kernels.compositions_numpy(nvars, d))


gen_lists = st.lists(
    st.lists(st.integers(0, 3), min_size=4, max_size=4).map(tuple), min_size=0, max_size=7
)


def brute_minimal(gens):
    gens = list(dict.fromkeys(gens))
    return [
        g for g in gens
        if not any(h != g and all(a <= b for a, b in zip(h, g)) for h in gens)
    ]


@settings(max_examples=100, deadline=None)
@given(gen_lists)
def test_minimalize_matches_brute_force(gens):
    assert sorted(kernels.minimalize(gens, 4)) == sorted(brute_minimal(gens))


@needs_numba
@settings(max_examples=100, deadline=None)
@given(gen_lists, st.integers(0, 6))
def test_backends_agree(gens, d):
    arr = kernels.as_array(gens, 4)
    monos = kernels.compositions_numpy(4, d)
    assert kernels.count_standard_numba(arr, monos) == kernels.count_standard_numpy(arr, monos)
    np.testing.assert_array_equal(kernels.minimal_mask_numba(arr), kernels.minimal_mask_numpy(arr))


@settings(max_examples=60, deadline=None)
@given(gen_lists, st.integers(0, 5))
def test_standard_count_matches_enumeration(gens, d):
    expected = sum(
        1 for m in monomials(4, d) if not any(all(a <= b for a, b in zip(g, m)) for g in gens)
    )
    assert kernels.standard_monomial_count(gens, 4, d) == expected


def test_large_count_chunked():
    # enough generators that the numpy path splits the monomials into chunks;
    # the degree-10 padding never divides a degree-9 monomial
    gens = [(2, 0, 0, 0, 0, 0, 0, 0), (0, 3, 0, 0, 0, 0, 0, 0)] + monomials(8, 10)[:298]
    monos = kernels.compositions_numpy(8, 9)
    total = monos.shape[0]
    arr = kernels.as_array(gens, 8)
    divisible = ((monos[:, 0] >= 2) | (monos[:, 1] >= 3)).sum()
    assert kernels.count_standard_numpy(arr, monos) == total - divisible


def _backend_in_subprocess(value):
    env = dict(os.environ)
    env.pop("ARITHGENUS_DISABLE_NUMBA", None)
    if value is not None:
        env["ARITHGENUS_DISABLE_NUMBA"] = value
    out = subprocess.run(
        [sys.executable, "-c", "from arithgenus import kernels; print(kernels.backend())"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


@pytest.mark.parametrize("value,expected", [("1", "numpy"), ("yes", "numpy"), ("0", None), (None, None)])
def test_env_flag_selects_backend(value, expected):
    default = "numba" if kernels.HAVE_NUMBA else "numpy"
    assert _backend_in_subprocess(value) == (expected or default)
