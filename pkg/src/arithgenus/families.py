"""Families of birational pairs with different arithmetic genus.

``maincorr_family`` tabulates ``Y = P^1 x H_l`` with ``H_l`` in ``P^n``
(``n >= 4``, ``l - 1 >= n``) against its hypersurface models ``H_e`` in
``P^{n+1}``.  ``genus_gap_family`` pads a hypersurface model ``V(f)`` to
``V(f g)`` to push the model's genus up.  ``verify_theorem_prod`` checks the
closed form for ``p_a(H_d x H_l)`` against the Segre pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .constructions import (
    HypersurfaceSpec,
    ProjectionResult,
    composite_hypersurface,
    make_hypersurface,
    project_to_hypersurface,
    segre_product_ideal,
)
from .errors import PreconditionError, VerificationMismatch
from .groebner import Ideal
from .invariants import (
    analyze,
    euler_characteristic,
    hypersurface_genus,
    paper_binomial,
    product_genus,
    theorem_prod_genus,
)


def _chi_bound(n: int) -> str:
    # chi(H_e) = 1 + (-1)^n p_a(H_e) with p_a(H_e) >= 0
    return ">= 1" if n % 2 == 0 else "<= 1"


def _satisfies(value: int, bound: str) -> bool:
    op, rhs = bound.split()
    return value >= int(rhs) if op == ">=" else value <= int(rhs)


@dataclass(frozen=True)
class CounterexampleRecord:
    """``Y = P^1 x H_l`` (``H_l`` in ``P^n``) against a hypersurface model in ``P^{n+1}``."""

    n: int
    l: int
    dimY: int
    paY: int
    chiY: int
    paHe_lower_bound: int
    chiHe_bound: str
    gap_witness: bool
    chi_gap_witness: bool
    seed_checks: Tuple[Tuple[int, int], ...] = ()
    He: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "dimY": self.dimY,
            "paY": self.paY,
            "chiY": self.chiY,
            "paHe_lower_bound": self.paHe_lower_bound,
            "chiHe_bound": self.chiHe_bound,
            "gap_witness": self.gap_witness,
            "chi_gap_witness": self.chi_gap_witness,
            "seed_checks": [{"seed": s, "pa_Hl": p} for s, p in self.seed_checks],
            "He": self.He,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CounterexampleRecord":
        return cls(
            n=int(d["n"]),
            l=int(d["l"]),
            dimY=int(d["dimY"]),
            paY=int(d["paY"]),
            chiY=int(d["chiY"]),
            paHe_lower_bound=int(d["paHe_lower_bound"]),
            chiHe_bound=d["chiHe_bound"],
            gap_witness=bool(d["gap_witness"]),
            chi_gap_witness=bool(d["chi_gap_witness"]),
            seed_checks=tuple((int(c["seed"]), int(c["pa_Hl"])) for c in d.get("seed_checks", ())),
            He=d.get("He"),
        )


def maincorr_record(n: int, l: int, pipeline_seeds: Sequence[int] = ()) -> CounterexampleRecord:
    if n < 4 or l - 1 < n:
        raise PreconditionError(f"need n >= 4 and l - 1 >= n, got n={n}, l={l}")
    pa_Hl = hypersurface_genus(l, n)
    checks = []
    for seed in pipeline_seeds:
        # the invariants do not depend on the coefficients; re-derive per seed
        rep = analyze(make_hypersurface(l, n, seed).ideal(), seed=seed)
        if rep.p_a != pa_Hl:
            raise VerificationMismatch(f"pipeline genus {rep.p_a} != {pa_Hl} for H_{l} in P^{n}, seed {seed}")
        checks.append((seed, rep.p_a))
    paY = product_genus(0, 1, pa_Hl, n - 1)
    chiY = euler_characteristic(paY, n)
    bound = _chi_bound(n)
    return CounterexampleRecord(
        n=n,
        l=l,
        dimY=n,
        paY=paY,
        chiY=chiY,
        paHe_lower_bound=0,
        chiHe_bound=bound,
        gap_witness=paY < 0,
        chi_gap_witness=not _satisfies(chiY, bound),
        seed_checks=tuple(checks),
    )


def maincorr_family(
    n_range: Iterable[int], l_range: Iterable[int], pipeline_seeds: Sequence[int] = ()
) -> List[CounterexampleRecord]:
    """One record per ``(n, l)``; every pair must satisfy ``n >= 4`` and ``l - 1 >= n``."""
    ls = list(l_range)
    records = [maincorr_record(n, l, pipeline_seeds) for n in n_range for l in ls]
    return sorted(records, key=lambda rec: (rec.n, rec.l))


def maincorr_family_upto(
    n_min: int, n_max: int, l_max: int, pipeline_seeds: Sequence[int] = ()
) -> List[CounterexampleRecord]:
    """All admissible ``(n, l)`` with ``n_min <= n <= n_max`` and ``n + 1 <= l <= l_max``."""
    if n_min < 4:
        raise PreconditionError(f"the family needs n >= 4, got n_min={n_min}")
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(maincorr_family([n], range(n + 1, l_max + 1), pipeline_seeds))
    return out


# -- genus gap -------------------------------------------------------------


@dataclass(frozen=True)
class GapRecord:
    """``Y`` against the padded model ``H_{e+d} = V(f g)`` in ``P^{n+1}``."""

    base_pa: int
    base_r: int
    used_product: bool
    dimY: int
    paY: int
    chiY: int
    e: int
    d: int
    paH: int
    chiH: int
    gap: int
    pipeline_paH: Optional[int] = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, d: dict) -> "GapRecord":
        vals = dict(d)
        for k in ("base_pa", "base_r", "dimY", "paY", "chiY", "e", "d", "paH", "chiH", "gap"):
            vals[k] = int(vals[k])
        vals["used_product"] = bool(vals["used_product"])
        if vals.get("pipeline_paH") is not None:
            vals["pipeline_paH"] = int(vals["pipeline_paH"])
        return cls(**vals)


def genus_gap_family(
    base: Union[Ideal, Tuple[int, int]],
    extra_degrees: Sequence[int],
    model_degree: Optional[int] = None,
    pipeline: bool = False,
    seed: int = 0,
    max_attempts: int = 5,
) -> Tuple[List[GapRecord], Optional[ProjectionResult]]:
    """Records for ``V(f g)`` with ``deg g`` running over ``extra_degrees``.

    ``base`` is an ideal or a ``(p_a, r)`` pair with ``p_a != 0``.  A base of
    positive genus is replaced by ``P^1 x X``.  ``f`` is a hypersurface model
    of degree ``model_degree`` in ``P^{dimY + 1}``; when the degree is omitted
    and ``base`` is an ideal it is found by :func:`project_to_hypersurface`.
    With ``pipeline=True`` each ``p_a(V(f g))`` is recomputed from the ideal.
    """
    projection = None
    if isinstance(base, Ideal):
        rep = analyze(base)
        pa, r = rep.p_a, rep.r
    else:
        pa, r = base
    if pa == 0:
        raise PreconditionError("the base variety must have nonzero arithmetic genus")
    used_product = pa > 0
    if used_product:
        paY, dimY = product_genus(0, 1, pa, r), r + 1
    else:
        paY, dimY = pa, r
    N = dimY + 1
    f_spec = None
    if model_degree is None:
        if not isinstance(base, Ideal):
            raise PreconditionError("model_degree is required when the base is given by invariants")
        Y = segre_product_ideal(Ideal([], 2), base) if used_product else base
        projection = project_to_hypersurface(Y, seed=seed, max_attempts=max_attempts)
        f_spec = HypersurfaceSpec(projection.image_degree, N, projection.generator)
        e = projection.image_degree
    else:
        e = model_degree
        if e < 1:
            raise PreconditionError("model degree must be positive")
    if pipeline and f_spec is None:
        f_spec = make_hypersurface(e, N, seed)
    chiY = euler_characteristic(paY, dimY)
    records = []
    for d in extra_degrees:
        if d < 0:
            raise PreconditionError("extra degrees must be non-negative")
        paH = paper_binomial(e + d - 1, N)
        pipeline_paH = None
        if pipeline:
            spec = f_spec if d == 0 else composite_hypersurface(f_spec, make_hypersurface(d, N, seed + 1 + d))
            pipeline_paH = analyze(spec.ideal()).p_a
            if pipeline_paH != paH:
                raise VerificationMismatch(f"pipeline genus {pipeline_paH} != {paH} for degree {e + d}")
        records.append(
            GapRecord(
                base_pa=pa,
                base_r=r,
                used_product=used_product,
                dimY=dimY,
                paY=paY,
                chiY=chiY,
                e=e,
                d=d,
                paH=paH,
                chiH=euler_characteristic(paH, dimY),
                gap=paY - paH,
                pipeline_paH=pipeline_paH,
            )
        )
    return records, projection


# -- closed form for H_d x H_l against the Segre pipeline -----------------


@dataclass(frozen=True)
class PipelineBudget:
    max_vars: int = 9
    max_degree: int = 4

    def admits(self, d: int, n: int, l: int, m: int) -> bool:
        return (2 * n + 1) * (m + 1) <= self.max_vars and max(d, l) <= self.max_degree


@dataclass(frozen=True)
class TupleCheck:
    d: int
    n: int
    l: int
    m: int
    closed_form: int
    pipeline: Optional[int]
    status: str  # "match", "mismatch" or "skipped"
    segre_vars: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, d: dict) -> "TupleCheck":
        vals = dict(d)
        for k in ("d", "n", "l", "m", "closed_form", "segre_vars"):
            vals[k] = int(vals[k])
        if vals.get("pipeline") is not None:
            vals["pipeline"] = int(vals["pipeline"])
        return cls(**vals)


@dataclass(frozen=True)
class VerificationReport:
    checks: Tuple[TupleCheck, ...]
    budget: PipelineBudget = field(default_factory=PipelineBudget)

    @property
    def mismatches(self) -> int:
        return sum(c.status == "mismatch" for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "mismatches": self.mismatches,
            "pipeline_checked": sum(c.pipeline is not None for c in self.checks),
            "skipped": sum(c.status == "skipped" for c in self.checks),
            "budget": {"max_vars": self.budget.max_vars, "max_degree": self.budget.max_degree},
            "checks": [c.to_dict() for c in self.checks],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        budget = PipelineBudget(int(d["budget"]["max_vars"]), int(d["budget"]["max_degree"]))
        return cls(tuple(TupleCheck.from_dict(c) for c in d["checks"]), budget)


def default_grid() -> List[Tuple[int, int, int, int]]:
    """Every ``(d, n, l, m)`` with ``d - 1 < n <= 3``, ``l <= 7`` and ``m <= 5``."""
    return [
        (d, n, l, m)
        for n in range(1, 4)
        for d in range(1, n + 1)
        for l in range(1, 8)
        for m in range(1, 6)
    ]


def _tuple_seed(d: int, n: int, l: int, m: int, seed: int) -> int:
    return seed * 10_000 + ((d * 8 + n) * 8 + l) * 8 + m


def verify_theorem_prod(
    grid: Iterable[Tuple[int, int, int, int]],
    budget: PipelineBudget = PipelineBudget(),
    seed: int = 0,
) -> VerificationReport:
    """Closed form for every tuple; Segre pipeline for tuples within ``budget``."""
    checks = []
    for d, n, l, m in sorted(set(tuple(int(v) for v in t) for t in grid)):
        closed = theorem_prod_genus(d, n, l, m)
        segre_vars = (2 * n + 1) * (m + 1)
        if not budget.admits(d, n, l, m):
            checks.append(TupleCheck(d, n, l, m, closed, None, "skipped", segre_vars))
            continue
        s = _tuple_seed(d, n, l, m, seed)
        Hd = make_hypersurface(d, 2 * n, s)
        Hl = make_hypersurface(l, m, s + 1)
        value = analyze(segre_product_ideal(Hd.ideal(), Hl.ideal())).p_a
        status = "match" if value == closed else "mismatch"
        checks.append(TupleCheck(d, n, l, m, closed, value, status, segre_vars))
    return VerificationReport(tuple(checks), budget)
