"""Conics, arrangements, coordinate changes, and pairwise elimination.

A conic is a smooth homogeneous quadratic ternary form; an arrangement is an
ordered triple of them, pairwise distinct.  Intersection multiplicities of a
pair are read off the root multiplicities of the resultant that eliminates Z,
which is valid once the coordinates are generic (the elimination center lies
on neither conic and distinct intersection points have distinct [X:Y]).
Genericity is enforced by seeded random coordinate changes with retry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .field import FieldContext, FieldElem
from .upoly import UniPoly, squarefree_decomposition

# Monomial order for conic coefficients, fixed across files and the CLI.
MONOMIAL_ORDER = ("X2", "Y2", "Z2", "XY", "XZ", "YZ")

PAIRS = ((0, 1), (0, 2), (1, 2))

IDENTITY_SEED = -1
RETRY_BUDGET = 32


class ValidationError(ValueError):
    pass


class SingularConicError(ValidationError):
    pass


class DuplicateConicError(ValidationError):
    pass


class DegenerateCoordinates(Exception):
    """Current coordinates violate the elimination preconditions; retry."""


class GenericityError(RuntimeError):
    """Retry budget exhausted; should be unreachable for valid input."""


@dataclass(frozen=True)
class Conic:
    """Coefficients (a1..a6) for [X^2, Y^2, Z^2, XY, XZ, YZ]."""

    ctx: FieldContext
    c: tuple[FieldElem, ...]

    def __post_init__(self):
        if len(self.c) != 6:
            raise ValidationError("a conic needs exactly 6 coefficients")
        if all(e.is_zero() for e in self.c):
            raise ValidationError("zero conic")

    @classmethod
    def make(cls, ctx: FieldContext, coeffs: Sequence) -> "Conic":
        out = []
        for e in coeffs:
            out.append(e if isinstance(e, FieldElem) else ctx.elem(e))
        return cls(ctx, tuple(out))

    def __call__(self, x: FieldElem, y: FieldElem, z: FieldElem) -> FieldElem:
        a1, a2, a3, a4, a5, a6 = self.c
        return (
            a1 * x * x + a2 * y * y + a3 * z * z
            + a4 * x * y + a5 * x * z + a6 * y * z
        )

    def doubled_matrix(self) -> list[list[FieldElem]]:
        """2A for the symmetric matrix A of the form (keeps entries integral)."""
        a1, a2, a3, a4, a5, a6 = self.c
        two = self.ctx.elem(2)
        return [
            [a1 * two, a4, a5],
            [a4, a2 * two, a6],
            [a5, a6, a3 * two],
        ]

    def det3(self) -> FieldElem:
        """Determinant of 2A; nonzero iff the conic is smooth."""
        m = self.doubled_matrix()
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    def is_smooth(self) -> bool:
        return not self.det3().is_zero()

    def is_proportional(self, other: "Conic") -> bool:
        i = next(k for k, e in enumerate(self.c) if not e.is_zero())
        if other.c[i].is_zero():
            return False
        ratio = other.c[i] / self.c[i]
        return all(other.c[k] == self.c[k] * ratio for k in range(6))

    def scaled(self, t: FieldElem) -> "Conic":
        return Conic(self.ctx, tuple(e * t for e in self.c))

    def transformed(self, M: Sequence[Sequence[FieldElem]]) -> "Conic":
        """The form Q(M v): substitution of the linear change v -> M v."""
        B = self.doubled_matrix()
        # B' = M^T B M
        BM = [
            [sum3(B[i][k] * M[k][j] for k in range(3)) for j in range(3)]
            for i in range(3)
        ]
        Bp = [
            [sum3(M[k][i] * BM[k][j] for k in range(3)) for j in range(3)]
            for i in range(3)
        ]
        half = self.ctx.elem("1/2")
        return Conic(
            self.ctx,
            (
                Bp[0][0] * half,
                Bp[1][1] * half,
                Bp[2][2] * half,
                Bp[0][1],
                Bp[0][2],
                Bp[1][2],
            ),
        )

    def gradient(self, x: FieldElem, y: FieldElem, z: FieldElem):
        a1, a2, a3, a4, a5, a6 = self.c
        two = self.ctx.elem(2)
        return (
            two * a1 * x + a4 * y + a5 * z,
            two * a2 * y + a4 * x + a6 * z,
            two * a3 * z + a5 * x + a6 * y,
        )

    def adjugate_value(self, line: tuple[FieldElem, FieldElem, FieldElem]) -> FieldElem:
        """Evaluate the dual conic on a line; zero iff the line is tangent."""
        m = self.doubled_matrix()
        adj = [
            [
                m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
                - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3]
                for j in range(3)
            ]
            for i in range(3)
        ]
        return sum3(
            line[i] * adj[i][j] * line[j] for i in range(3) for j in range(3)
        )

    def z_coefficients(self) -> list[UniPoly]:
        """The conic as a quadratic in Z over K[t], with t = X/Y, Y = 1."""
        a1, a2, a3, a4, a5, a6 = self.c
        ctx = self.ctx
        c0 = UniPoly(ctx, [a2, a4, a1])
        c1 = UniPoly(ctx, [a6, a5])
        c2 = UniPoly(ctx, [a3])
        return [c0, c1, c2]


def sum3(items) -> FieldElem:
    it = iter(items)
    acc = next(it)
    for x in it:
        acc = acc + x
    return acc


@dataclass(frozen=True)
class Arrangement:
    """An ordered, validated triple of smooth, pairwise distinct conics."""

    ctx: FieldContext
    conics: tuple[Conic, Conic, Conic]

    def __post_init__(self):
        for i, q in enumerate(self.conics):
            if not q.is_smooth():
                raise SingularConicError(f"conic {i + 1} is singular")
        for i, j in PAIRS:
            if self.conics[i].is_proportional(self.conics[j]):
                raise DuplicateConicError(f"conics {i + 1} and {j + 1} coincide")

    def transformed(self, M) -> "Arrangement":
        return Arrangement(self.ctx, tuple(q.transformed(M) for q in self.conics))

    def scaled(self, factors: Sequence[FieldElem]) -> "Arrangement":
        return Arrangement(
            self.ctx, tuple(q.scaled(t) for q, t in zip(self.conics, factors))
        )


def make_arrangement(raw: Sequence[Sequence], ctx: FieldContext) -> Arrangement:
    if len(raw) != 3:
        raise ValidationError("an arrangement needs exactly 3 conics")
    return Arrangement(ctx, tuple(Conic.make(ctx, coeffs) for coeffs in raw))


# -- coordinate changes ------------------------------------------------------


def change_matrix(ctx: FieldContext, seed: int) -> list[list[FieldElem]]:
    """Seeded invertible 3x3 integer matrix; IDENTITY_SEED gives the identity."""
    if seed == IDENTITY_SEED:
        return identity_matrix(ctx)
    rng = random.Random(f"triconic-coordinate-change:{seed}")
    while True:
        m = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if det != 0:
            return [[ctx.elem(e) for e in row] for row in m]


def identity_matrix(ctx: FieldContext) -> list[list[FieldElem]]:
    return [
        [ctx.one if i == j else ctx.zero for j in range(3)] for i in range(3)
    ]


def random_coordinate_change(arr: Arrangement, seed: int):
    """Apply a seeded invertible change of coordinates; returns (arr', M)."""
    M = change_matrix(arr.ctx, seed)
    return arr.transformed(M), M


def apply_matrix(M, point):
    return tuple(sum3(M[i][j] * point[j] for j in range(3)) for i in range(3))


def normalize_point(point) -> tuple[FieldElem, ...]:
    i = next((k for k, e in enumerate(point) if not e.is_zero()), None)
    if i is None:
        raise ValidationError("zero vector is not a projective point")
    inv = point[i].inverse()
    return tuple(e * inv for e in point)


# -- binary quartics and multiplicity patterns -------------------------------


@dataclass(frozen=True)
class BinaryQuartic:
    """Homogeneous quartic in (X, Y); coeffs[i] multiplies X^i Y^(4-i)."""

    ctx: FieldContext
    coeffs: tuple[FieldElem, ...]

    def __post_init__(self):
        if len(self.coeffs) != 5:
            raise ValidationError("binary quartic needs 5 coefficients")
        if all(e.is_zero() for e in self.coeffs):
            raise ValidationError("zero quartic: degenerate elimination")

    def dehomogenized(self) -> UniPoly:
        """Image under Y = 1; the degree deficit counts the root at [1:0]."""
        return UniPoly(self.ctx, list(self.coeffs))


class PairType(Enum):
    """Interaction type of a pair of smooth conics."""

    N = "N"        # four nodes
    T = "t"        # one tacnode, two nodes
    TT = "tt"      # two tacnodes
    A5P = "a5"     # contact of order 3 plus a node
    A7P = "a7"     # single contact of order 4


PATTERN_TO_PAIR_TYPE = {
    (1, 1, 1, 1): PairType.N,
    (2, 1, 1): PairType.T,
    (2, 2): PairType.TT,
    (3, 1): PairType.A5P,
    (4,): PairType.A7P,
}


def pattern_of(q: BinaryQuartic) -> tuple[int, ...]:
    """Multiset of root multiplicities (descending), root at infinity included."""
    p = q.dehomogenized()
    mults: list[int] = []
    deficit = 4 - p.degree
    if deficit:
        mults.append(deficit)
    for g, m in squarefree_decomposition(p):
        mults.extend([m] * g.degree)
    out = tuple(sorted(mults, reverse=True))
    assert sum(out) == 4
    return out


def conic_pair_resultant(q1: Conic, q2: Conic) -> BinaryQuartic:
    """Res_Z of the pair as a binary quartic in (X, Y).

    Precondition: the elimination center [0:0:1] lies on neither conic
    (nonzero Z^2 coefficients); otherwise the coordinates are degenerate.
    """
    ctx = q1.ctx
    if q1.c[2].is_zero() or q2.c[2].is_zero():
        raise DegenerateCoordinates("elimination center lies on a conic")
    f0, f1, f2s = q1.z_coefficients()
    g0, g1, g2s = q2.z_coefficients()
    f2 = f2s[0]
    g2 = g2s[0]
    # Resultant of two quadratics in Z with binary-form coefficients:
    # (f2 g0 - g2 f0)^2 - (g2 f1 - f2 g1)(g1 f0 - f1 g0)
    a = f0.scaled(g2) - g0.scaled(f2)
    b = f1.scaled(g2) - g1.scaled(f2)
    c = f0 * g1 - g0 * f1
    res = a * a - b * c
    coeffs = tuple(res[i] for i in range(5))
    if all(e.is_zero() for e in coeffs):
        raise ValidationError("identically zero resultant: conics share a component")
    return BinaryQuartic(ctx, coeffs)


def pair_resultant(arr: Arrangement, pair_index: int) -> BinaryQuartic:
    i, j = PAIRS[pair_index]
    return conic_pair_resultant(arr.conics[i], arr.conics[j])


def attempt_seed(seed: int, attempt: int) -> int:
    """Derived seed for retry attempt k of a base seed (k = 0 is the base)."""
    if attempt == 0:
        return seed
    return hash(("triconic-retry", seed, attempt)) % (2**31)
