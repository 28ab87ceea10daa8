"""Independent reference computations used only by the tests.

Nothing here calls the Groebner or Hilbert machinery of the package: ranks
are plain Gaussian elimination over Fractions, binomials come from Pascal's
triangle, monomial orders are written as explicit comparators.
"""

from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations_with_replacement


def pascal(a, b):
    """binom(a, b) from Pascal's triangle; 0 when a < b or a < 0."""
    if b < 0 or a < 0 or a < b:
        return 0
    row = [1]
    for _ in range(a):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[b]


def monomials(nvars, d):
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def grevlex_cmp(u, v):
    du, dv = sum(u), sum(v)
    if du != dv:
        return -1 if du < dv else 1
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            # smaller exponent in the last differing variable is larger
            return 1 if a < b else -1
    return 0


def lex_cmp(u, v):
    for a, b in zip(u, v):
        if a != b:
            return 1 if a > b else -1
    return 0


def sort_desc(monos, cmp):
    return sorted(monos, key=cmp_to_key(cmp), reverse=True)


def rank(rows):
    """Exact rank of a list of dict-rows {column: Fraction}."""
    rows = [dict(r) for r in rows if r]
    pivots = {}
    r = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = max(row)
            if col in pivots:
                prow = pivots[col]
                f = row[col] / prow[col]
                for k, v in prow.items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                pivots[col] = row
                r += 1
                break
    return r


def degree_piece(gens, nvars, t):
    """Rows spanning the degree-t part of the ideal generated by homogeneous ``gens``."""
    rows = []
    for g in gens:
        dg = g.is_homogeneous()[1]
        if dg is None or dg > t:
            continue
        for m in monomials(nvars, t - dg):
            rows.append({tuple(a + b for a, b in zip(k, m)): c for k, c in g.items()})
    return rows


def quotient_dimension(gens, nvars, t):
    """dim_k (k[x]/I)_t by linear algebra."""
    return len(monomials(nvars, t)) - rank(degree_piece(gens, nvars, t))


def in_ideal_by_linear_algebra(p, gens, nvars):
    """Membership of a homogeneous ``p`` in the ideal of homogeneous ``gens``."""
    t = p.is_homogeneous()[1]
    if t is None:
        return True
    rows = degree_piece(gens, nvars, t)
    return rank(rows + [dict(p.items())]) == rank(rows)


def series_coefficients(numerator, nvars, upto):
    """Coefficients of numerator(t) / (1 - t)^nvars up to t^upto."""
    out = []
    for t in range(upto + 1):
        out.append(
            sum(c * pascal(t - i + nvars - 1, nvars - 1) for i, c in enumerate(numerator) if i <= t)
        )
    return out


def interpolate(points):
    """Coefficients (ascending) of the polynomial through ``points`` [(x, y)]."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            basis = nxt
            denom *= xi - xj
        for k, c in enumerate(basis):
            coeffs[k] += yi * c / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
