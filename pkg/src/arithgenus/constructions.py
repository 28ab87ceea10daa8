"""Ideal-level constructions: hypersurfaces, Segre products, Z(fg) and projections."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import AmbientMismatchError, PreconditionError, ProjectionExhausted
from .groebner import Ideal, elimination_ideal
from .invariants import VarietyReport, analyze, random_form
from .parsing import format_polynomial, parse_polynomial
from .polyring import Polynomial

MATRIX_ENTRY_BOUND = 5


@dataclass(frozen=True)
class HypersurfaceSpec:
    """A hypersurface ``V(form)`` of degree ``d`` in ``P^N``."""

    d: int
    N: int
    form: Polynomial
    seed: Optional[int] = None

    def __post_init__(self):
        if self.form.is_zero():
            raise PreconditionError("hypersurface form must be nonzero")
        if self.form.nvars != self.N + 1:
            raise AmbientMismatchError(f"form has {self.form.nvars} variables, P^{self.N} needs {self.N + 1}")
        homog, deg = self.form.is_homogeneous()
        if not homog or deg != self.d:
            raise PreconditionError(f"form is not homogeneous of degree {self.d}")

    def ideal(self) -> Ideal:
        return Ideal([self.form], self.N + 1)


def make_hypersurface(d: int, N: int, seed: int = 0) -> HypersurfaceSpec:
    """Random dense hypersurface of degree ``d`` in ``P^N`` (deterministic in ``seed``)."""
    if d < 1 or N < 1:
        raise PreconditionError(f"need d >= 1 and N >= 1, got d={d}, N={N}")
    return HypersurfaceSpec(d, N, random_form(d, N + 1, seed), seed)


def composite_hypersurface(f: HypersurfaceSpec, g: HypersurfaceSpec) -> HypersurfaceSpec:
    """``V(f g)``: degree ``e + d`` and containing ``V(f)`` as a component."""
    if f.N != g.N:
        raise AmbientMismatchError(f"hypersurfaces live in P^{f.N} and P^{g.N}")
    return HypersurfaceSpec(f.d + g.d, f.N, f.form * g.form)


# -- Segre products ---------------------------------------------------------


def segre_names(a: int, b: int) -> List[str]:
    """Names ``z{i}_{j}`` for the coordinates of ``P^{ab-1}``, row-major."""
    return [f"z{i}_{j}" for i in range(a) for j in range(b)]


def segre_product_ideal(IY: Ideal, IZ: Ideal) -> Ideal:
    """Ideal of the Segre image of ``V(IY) x V(IZ)``.

    Works in ``k[x, y, z]`` with ``z_ij - x_i y_j`` plus both factor ideals and
    eliminates ``x`` and ``y``.  Coordinates of the target are row-major:
    ``z_ij`` is variable ``i * b + j`` where ``b = IZ.nvars``.
    """
    for I in (IY, IZ):
        if not I.is_homogeneous():
            raise PreconditionError("Segre factors must be homogeneous ideals")
    a, b = IY.nvars, IZ.nvars
    total = a + b + a * b
    V = Polynomial.variables(total)
    gens = [V[a + b + i * b + j] - V[i] * V[a + j] for i in range(a) for j in range(b)]
    gens += [g.embed(total, 0) for g in IY.generators]
    gens += [g.embed(total, a) for g in IZ.generators]
    J = elimination_ideal(Ideal(gens, total), a + b)
    if J.is_zero() and (min(a, b) > 1 or not (IY.is_zero() and IZ.is_zero())):
        raise RuntimeError("Segre elimination returned the zero ideal")
    return J


def segre_minors_ideal(a: int, b: int) -> Ideal:
    """The 2x2 minors of the ``a x b`` matrix ``(z_ij)``: the Segre ideal of ``P^{a-1} x P^{b-1}``."""
    N = a * b
    V = Polynomial.variables(N)
    z = lambda i, j: V[i * b + j]
    gens = [
        z(i, j) * z(k, l) - z(i, l) * z(k, j)
        for i in range(a)
        for k in range(i + 1, a)
        for j in range(b)
        for l in range(j + 1, b)
    ]
    return Ideal(gens, N)


# -- projection to a hypersurface ------------------------------------------


@dataclass(frozen=True)
class ProjectionResult:
    """Image of a generic linear projection to ``P^{r+1}``.

    Only the image is certified to be a hypersurface of dimension ``r``;
    birationality of the projection is not checked.
    """

    image_ideal: Ideal
    is_principal: bool
    image_degree: Optional[int]
    attempts: int
    seed: int
    matrix: Tuple[Tuple[int, ...], ...]
    source_dimension: int
    log: Tuple[dict, ...] = field(default=())
    birational_certified: bool = False

    @property
    def generator(self) -> Polynomial:
        return self.image_ideal.groebner_basis()[0]

    def to_dict(self) -> dict:
        return {
            "image_ambient_n": self.image_ideal.ambient,
            "image_generators": [format_polynomial(g) for g in self.image_ideal.groebner_basis()],
            "is_principal": self.is_principal,
            "image_degree": self.image_degree,
            "attempts": self.attempts,
            "seed": self.seed,
            "matrix": [list(row) for row in self.matrix],
            "source_dimension": self.source_dimension,
            "log": list(self.log),
            "birational_certified": self.birational_certified,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ProjectionResult":
        nvars = int(d["image_ambient_n"]) + 1
        gens = [parse_polynomial(s, nvars) for s in d["image_generators"]]
        return cls(
            image_ideal=Ideal(gens, nvars),
            is_principal=bool(d["is_principal"]),
            image_degree=None if d["image_degree"] is None else int(d["image_degree"]),
            attempts=int(d["attempts"]),
            seed=int(d["seed"]),
            matrix=tuple(tuple(int(x) for x in row) for row in d["matrix"]),
            source_dimension=int(d["source_dimension"]),
            log=tuple(_decode_log_entry(e) for e in d.get("log", ())),
            birational_certified=bool(d.get("birational_certified", False)),
        )


def _decode_log_entry(entry: dict) -> dict:
    return {k: v if isinstance(v, bool) else int(v) for k, v in entry.items()}


def exact_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def random_invertible_matrix(n: int, rng: np.random.Generator) -> Tuple[Tuple[int, ...], ...]:
    while True:
        m = rng.integers(-MATRIX_ENTRY_BOUND, MATRIX_ENTRY_BOUND + 1, size=(n, n))
        rows = tuple(tuple(int(x) for x in row) for row in m)
        if exact_determinant(rows):
            return rows


def change_coordinates(I: Ideal, matrix: Sequence[Sequence[int]]) -> Ideal:
    """Substitute ``x_j -> sum_k matrix[j][k] * u_k`` into every generator."""
    n = I.nvars
    U = Polynomial.variables(n)
    images = []
    for row in matrix:
        img = Polynomial.zero(n)
        for k, c in enumerate(row):
            if c:
                img = img + U[k] * c
        images.append(img)
    return Ideal([g.compose(images) for g in I.generators], n)


def project_to_hypersurface(
    I: Ideal,
    seed: int = 0,
    max_attempts: int = 5,
    report: Optional[VarietyReport] = None,
) -> ProjectionResult:
    """Project ``V(I)`` into ``P^{r+1}`` after a random linear change of coordinates.

    Each attempt draws an invertible integer matrix from
    ``default_rng([seed, attempt])`` and eliminates the first
    ``nvars - (r + 2)`` new coordinates.  An attempt succeeds when the image
    ideal is principal and its zero set has dimension ``r``.
    """
    report = report or analyze(I)
    r = report.r
    target = r + 2
    drop = I.nvars - target
    if drop < 0:
        raise PreconditionError(f"dimension {r} needs at least {target} ambient variables")
    log = []
    for attempt in range(max_attempts):
        rng = np.random.default_rng([seed, attempt])
        matrix = random_invertible_matrix(I.nvars, rng)
        image = elimination_ideal(change_coordinates(I, matrix), drop)
        basis = image.groebner_basis()
        entry = {"attempt": attempt, "generators": len(basis)}
        principal = len(basis) == 1 and basis[0].is_homogeneous()[0]
        if principal:
            image_report = analyze(image)
            entry["image_dimension"] = image_report.r
            if image_report.r == r:
                entry["ok"] = True
                log.append(entry)
                return ProjectionResult(
                    image_ideal=image,
                    is_principal=True,
                    image_degree=basis[0].total_degree(),
                    attempts=attempt + 1,
                    seed=seed,
                    matrix=matrix,
                    source_dimension=r,
                    log=tuple(log),
                )
        entry["ok"] = False
        log.append(entry)
    raise ProjectionExhausted(
        f"no hypersurface image after {max_attempts} attempts", attempts=log
    )
