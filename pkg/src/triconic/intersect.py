"""Locating the intersection points of the three pairs of conics.

The elimination variable is t = X/Y after a generic coordinate change.  Each
pair contributes a binary quartic resultant; common squarefree factors across
pairs flag candidate shared points.  Sharing is never concluded from the
resultants alone: for each candidate factor h the Z-fibers of the pairs are
compared inside K[t]/(h) (dynamic evaluation), splitting h whenever a zero
divisor shows up.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldContext, FieldElem
from .geometry import (
    Arrangement,
    DegenerateCoordinates,
    GenericityError,
    IDENTITY_SEED,
    PAIRS,
    RETRY_BUDGET,
    apply_matrix,
    attempt_seed,
    change_matrix,
    normalize_point,
    pair_resultant,
)
from .quotient import QuotGcd, QuotientRing, QuotSplit, SplitModulus, quotient_gcd
from .upoly import UniPoly, squarefree_decomposition, upoly_gcd


class InternalError(RuntimeError):
    """An invariant of the analysis failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class PointLocus:
    """A Galois-stable batch of intersection points with one multiplicity profile.

    `factor` is a monic squarefree polynomial in the elimination variable of
    the transformed frame; its roots are the t-coordinates of the batch.
    `pair_mults[k]` is the intersection multiplicity each point of the batch
    carries for pair k (0 when the pair misses it).  `points` holds explicit
    original-frame coordinates when the factor splits over K, else it is empty.
    """

    factor: UniPoly
    npoints: int
    pair_mults: tuple[int, int, int]
    points: tuple[tuple[FieldElem, FieldElem, FieldElem], ...]

    @property
    def pair_signature(self) -> tuple[int, ...]:
        return tuple(sorted(m for m in self.pair_mults if m))


@dataclass(frozen=True)
class IntersectionAnalysis:
    loci: tuple[PointLocus, ...]
    matrix: tuple[tuple[FieldElem, ...], ...]
    seed_used: int
    attempts: int


def shared_point_analysis(arr: Arrangement, seed: int = IDENTITY_SEED) -> IntersectionAnalysis:
    """Full pairwise intersection analysis with genericity retries."""
    for k in range(RETRY_BUDGET):
        s = attempt_seed(seed, k)
        M = change_matrix(arr.ctx, s)
        try:
            loci = _analyze(arr, M)
        except DegenerateCoordinates:
            continue
        return IntersectionAnalysis(
            loci=tuple(loci),
            matrix=tuple(tuple(row) for row in M),
            seed_used=s,
            attempts=k + 1,
        )
    raise GenericityError("no generic frame found within the retry budget")


def _analyze(arr: Arrangement, M) -> list[PointLocus]:
    tarr = arr.transformed(M)
    quartics = []
    for k in range(3):
        q = pair_resultant(tarr, k)
        p = q.dehomogenized()
        if p.degree != 4:
            raise DegenerateCoordinates("intersection point on the line Y = 0")
        quartics.append(p)

    decomps = [squarefree_decomposition(p) for p in quartics]
    basis = _coprime_basis([g for dec in decomps for g, _ in dec])

    zcoeffs = [q.z_coefficients() for q in tarr.conics]
    loci: list[PointLocus] = []
    for h in basis:
        mults = tuple(_mult_in(dec, h) for dec in decomps)
        _process_factor(h, mults, zcoeffs, M, loci)

    for k in range(3):
        total = sum(loc.npoints * loc.pair_mults[k] for loc in loci)
        if total != 4:
            raise InternalError(f"pair {k} multiplicities sum to {total}, not 4")
    return loci


def _coprime_basis(factors: list[UniPoly]) -> list[UniPoly]:
    """Refine monic squarefree polynomials to a pairwise coprime basis."""
    basis: list[UniPoly] = []
    for p in factors:
        i = 0
        while i < len(basis) and p.degree > 0:
            b = basis[i]
            g = upoly_gcd(p, b)
            if g.degree > 0:
                if g.degree < b.degree:
                    basis[i] = g.monic()
                    basis.append(b.exact_div(g).monic())
                p = p.exact_div(g)
            i += 1
        if p.degree > 0:
            basis.append(p.monic())
    return basis


def _mult_in(decomp, h: UniPoly) -> int:
    for g, m in decomp:
        if g.divmod(h)[1].is_zero():
            return m
    return 0


def _process_factor(h, mults, zcoeffs, M, loci) -> None:
    """Resolve one coprime-basis factor into loci, branching on splits."""
    if h.degree == 2:
        split = _try_field_split(h)
        if split is not None:
            for part in split:
                _process_factor(part, mults, zcoeffs, M, loci)
            return

    ring = QuotientRing(h)
    active = [k for k in range(3) if mults[k] > 0]
    if not active:
        raise InternalError("basis factor lost by every pair")

    try:
        fibers = {}
        for k in active:
            i, j = PAIRS[k]
            g = quotient_gcd(zcoeffs[i], zcoeffs[j], ring)
            if isinstance(g, QuotSplit):
                for part in (g.p1, g.p2):
                    _process_factor(part, mults, zcoeffs, M, loci)
                return
            if len(g.gcd) != 2:
                # Two distinct common Z-values over one t: the frame stacked
                # separate intersection points onto one fiber line.
                raise DegenerateCoordinates("non-linear fiber gcd")
            fibers[k] = ring.sub(ring.of_scalar(ring.ctx.zero), g.gcd[0])

        shared = {}
        for a in range(len(active)):
            for b in range(a + 1, len(active)):
                ka, kb = active[a], active[b]
                diff = ring.sub(fibers[ka], fibers[kb])
                if diff.is_zero():
                    shared[(ka, kb)] = True
                elif ring.invertible(diff):
                    shared[(ka, kb)] = False
                # a zero-divisor difference raises SplitModulus below
    except SplitModulus as sp:
        for part in (sp.p1, sp.p2):
            _process_factor(part, mults, zcoeffs, M, loci)
        return

    if any(shared.values()):
        # Any fiber agreement forces a genuine triple point: all three pairs
        # must be active and all three fibers must coincide.
        if len(active) != 3 or not all(shared.values()):
            raise InternalError("partial fiber agreement between pairs")
        loci.append(_make_locus(h, mults, fibers[0], M))
    else:
        for k in active:
            pm = tuple(mults[k] if kk == k else 0 for kk in range(3))
            loci.append(_make_locus(h, pm, fibers[k], M))


def _try_field_split(h: UniPoly):
    """Split a monic quadratic over K when its discriminant is a square."""
    ctx = h.ctx
    b, c = h[1], h[0]
    disc = b * b - c.scaled(4)
    root = disc.sqrt()
    if root is None:
        return None
    half = ctx.elem("1/2")
    r1 = (root - b) * half
    r2 = (-root - b) * half
    if r1 == r2:
        raise InternalError("repeated root in a squarefree factor")
    lin = lambda r: UniPoly(ctx, [-r, ctx.one])
    return (lin(r1), lin(r2))


def _make_locus(h: UniPoly, pair_mults, fiber: UniPoly, M) -> PointLocus:
    points = ()
    if h.degree == 1:
        ctx = h.ctx
        t0 = -h[0]
        z0 = fiber(t0)
        pt = normalize_point(apply_matrix(M, (t0, ctx.one, z0)))
        points = (pt,)
    return PointLocus(
        factor=h,
        npoints=h.degree,
        pair_mults=tuple(pair_mults),
        points=points,
    )


def pair_pattern(q1, q2, seed: int = IDENTITY_SEED) -> tuple[int, ...]:
    """Validated multiplicity pattern of a single pair of smooth conics.

    Unlike `pattern_of` on a raw resultant, this confirms in a generic frame
    that every root of the resultant carries exactly one intersection point,
    so the returned multiset is the true pattern.
    """
    from .geometry import conic_pair_resultant

    ctx = q1.ctx
    for k in range(RETRY_BUDGET):
        M = change_matrix(ctx, attempt_seed(seed, k))
        t1, t2 = q1.transformed(M), q2.transformed(M)
        try:
            p = conic_pair_resultant(t1, t2).dehomogenized()
            if p.degree != 4:
                raise DegenerateCoordinates("intersection point on the line Y = 0")
            zc = (t1.z_coefficients(), t2.z_coefficients())
            mults: list[int] = []
            for g, m in squarefree_decomposition(p):
                _count_pair_points(g, m, zc, mults)
            return tuple(sorted(mults, reverse=True))
        except DegenerateCoordinates:
            continue
    raise GenericityError("no generic frame found within the retry budget")


def _count_pair_points(h: UniPoly, m: int, zc, mults: list[int]) -> None:
    ring = QuotientRing(h.monic())
    g = quotient_gcd(zc[0], zc[1], ring)
    if isinstance(g, QuotSplit):
        for part in (g.p1, g.p2):
            _count_pair_points(part, m, zc, mults)
        return
    if len(g.gcd) != 2:
        raise DegenerateCoordinates("non-linear fiber gcd")
    mults.extend([m] * h.degree)


def pair_multiplicity_patterns(analysis: IntersectionAnalysis) -> tuple[tuple[int, ...], ...]:
    """Per-pair multisets of intersection multiplicities (descending)."""
    out = []
    for k in range(3):
        mults: list[int] = []
        for loc in analysis.loci:
            if loc.pair_mults[k]:
                mults.extend([loc.pair_mults[k]] * loc.npoints)
        out.append(tuple(sorted(mults, reverse=True)))
    return tuple(out)
