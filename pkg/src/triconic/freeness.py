"""Freeness of the sextic defined by a triple of conics.

Two exact linear-algebra computations drive the verdict.  The minimal degree
of a Jacobian relation (mdr) is found as the smallest r in {1, 2} whose
degree-r syzygy space of the three partials is nonzero.  The global Tjurina
number is the stabilized value of dim S_k - dim (Jacobian ideal)_k; for a
reduced sextic whose singularities are all in our supported list the values
at k = 12..15 already agree.  Freeness is then decided by the du Plessis-Wall
count: the curve is free exactly when tau = (d-1)^2 - r(d-1-r) with r = mdr,
which for d = 6 needs r <= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .field import FieldContext, FieldElem
from .geometry import Arrangement, Conic, IDENTITY_SEED
from .intersect import InternalError
from .linalg import field_rank
from .singularities import WeakCombinatorics, singularity_report

DEGREE = 6
STABILIZATION_RANGE = (12, 13, 14, 15)


class HilbertNotStabilizedError(RuntimeError):
    """dim S_k - dim J_k failed to agree on the probe degrees."""


class TriPoly:
    """Sparse polynomial in (X, Y, Z): exponent triple -> coefficient."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldContext, terms: dict[tuple[int, int, int], FieldElem]):
        self.ctx = ctx
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    @classmethod
    def from_conic(cls, q: Conic) -> "TriPoly":
        a1, a2, a3, a4, a5, a6 = q.c
        return cls(q.ctx, {
            (2, 0, 0): a1,
            (0, 2, 0): a2,
            (0, 0, 2): a3,
            (1, 1, 0): a4,
            (1, 0, 1): a5,
            (0, 1, 1): a6,
        })

    def __mul__(self, other: "TriPoly") -> "TriPoly":
        out: dict[tuple[int, int, int], FieldElem] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                prod = c1 * c2
                if e in out:
                    out[e] = out[e] + prod
                else:
                    out[e] = prod
        return TriPoly(self.ctx, out)

    def partial(self, var: int) -> "TriPoly":
        out = {}
        for e, c in self.terms.items():
            if e[var] > 0:
                ne = list(e)
                ne[var] -= 1
                out[tuple(ne)] = c.scaled(e[var])
        return TriPoly(self.ctx, out)

    def coeff(self, e: tuple[int, int, int]) -> FieldElem:
        return self.terms.get(e, self.ctx.zero)

    def is_zero(self) -> bool:
        return not self.terms


def sextic_form(arr: Arrangement) -> TriPoly:
    q1, q2, q3 = (TriPoly.from_conic(q) for q in arr.conics)
    return q1 * q2 * q3


def jacobian_partials(f: TriPoly) -> tuple[TriPoly, TriPoly, TriPoly]:
    return (f.partial(0), f.partial(1), f.partial(2))


@lru_cache(maxsize=None)
def monomials(k: int) -> tuple[tuple[int, int, int], ...]:
    """Degree-k monomials in three variables, in a fixed deterministic order."""
    return tuple(
        (i, j, k - i - j) for i in range(k, -1, -1) for j in range(k - i, -1, -1)
    )


def _jacobian_matrix(partials, k: int):
    """Rows indexed by degree-k monomials, columns by 3 copies of degree-(k-5)
    monomials; the column for (partial p, monomial m) holds m * f_p."""
    ctx = partials[0].ctx
    rows_idx = monomials(k)
    cols = []
    for p in partials:
        for m in monomials(k - 5):
            cols.append((p, m))
    row_pos = {e: i for i, e in enumerate(rows_idx)}
    # build column-wise, then transpose
    mat = [[ctx.zero] * len(cols) for _ in rows_idx]
    for jcol, (p, m) in enumerate(cols):
        for e, c in p.terms.items():
            te = (e[0] + m[0], e[1] + m[1], e[2] + m[2])
            mat[row_pos[te]][jcol] = c
    return mat


def syzygy_kernel_dim(partials, r: int) -> int:
    """Dimension of the space of degree-r relations a f_x + b f_y + c f_z = 0."""
    if r < 0:
        return 0
    cols = 3 * len(monomials(r))
    rank = field_rank(_jacobian_matrix(partials, r + 5), partials[0].ctx)
    return cols - rank


def mdr(partials) -> int | None:
    """Minimal degree of a Jacobian relation if it is 1 or 2, else None.

    Degree 0 relations cannot occur for a reduced curve, and any relation of
    degree > 2 is irrelevant to freeness of a sextic, so None stands for
    "greater than 2".
    """
    for r in (1, 2):
        if syzygy_kernel_dim(partials, r) > 0:
            return r
    return None


def global_tau(partials) -> int:
    """Total Tjurina number as the stable value of dim S_k - dim J_k."""
    values = []
    for k in STABILIZATION_RANGE:
        dim_sk = len(monomials(k))
        rank = field_rank(_jacobian_matrix(partials, k), partials[0].ctx)
        values.append(dim_sk - rank)
    if len(set(values)) != 1:
        raise HilbertNotStabilizedError(
            f"tau probes {dict(zip(STABILIZATION_RANGE, values))} disagree"
        )
    return values[0]


def dpw_expected_tau(d: int, r: int) -> int:
    return (d - 1) ** 2 - r * (d - 1 - r)


@dataclass(frozen=True)
class FreenessReport:
    mdr: int | None              # None means greater than 2
    tau: int
    combinatorics: WeakCombinatorics
    free: bool
    exponents: tuple[int, int] | None

    @property
    def mdr_label(self) -> str:
        return "greater than 2" if self.mdr is None else str(self.mdr)


_cache: dict[tuple[Arrangement, int], FreenessReport] = {}


def freeness_report(arr: Arrangement, seed: int = IDENTITY_SEED) -> FreenessReport:
    key = (arr, seed)
    if key in _cache:
        return _cache[key]

    sing = singularity_report(arr, seed)
    partials = jacobian_partials(sextic_form(arr))
    r = mdr(partials)
    tau = global_tau(partials)
    if tau != sing.combinatorics.tau_local:
        raise InternalError(
            f"global tau {tau} disagrees with the sum of local Tjurina "
            f"numbers {sing.combinatorics.tau_local}"
        )

    free = r is not None and tau == dpw_expected_tau(DEGREE, r)
    exponents = (r, DEGREE - 1 - r) if free else None
    report = FreenessReport(
        mdr=r,
        tau=tau,
        combinatorics=sing.combinatorics,
        free=free,
        exponents=exponents,
    )
    _cache[key] = report
    return report
