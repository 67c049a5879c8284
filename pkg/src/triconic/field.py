"""Exact arithmetic in a real or imaginary quadratic extension K = Q(sqrt(D)).

Every downstream computation (conic coefficients, resultants, matrix ranks)
runs over a single field K fixed by a :class:`FieldContext`.  ``D = 1`` is the
degenerate case K = Q, in which the irrational component is identically zero.
Deeper algebraic numbers are never represented here; they live in quotient
rings ``K[t]/(p)`` (see :mod:`triconic.quotient`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from gmpy2 import mpq, mpz

RatLike = Union[int, str, mpq, Fraction]


class FieldError(ValueError):
    pass


def _square_free(n: int) -> bool:
    if n == 0:
        return False
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def as_mpq(x: RatLike) -> mpq:
    """Parse a rational from an int, an mpq, or a 'p/q' / 'p' string."""
    if isinstance(x, mpq):
        return x
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    if isinstance(x, str):
        s = x.strip()
        if "/" in s:
            num, den = s.split("/")
            return mpq(int(num), int(den))
        return mpq(int(s))
    raise FieldError(f"cannot interpret {x!r} as a rational")


def rat_str(q: mpq) -> str:
    """Canonical 'p/q' or bare-integer rendering (q > 0, gcd(p,q) = 1)."""
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class FieldContext:
    """A fixed coefficient field Q(sqrt(D)) with D square-free (D=1 means Q)."""

    D: int = 1

    def __post_init__(self):
        if not _square_free(self.D):
            raise FieldError(f"discriminant {self.D} is not square-free")

    def elem(self, r: RatLike = 0, s: RatLike = 0) -> "FieldElem":
        return FieldElem(self, as_mpq(r), as_mpq(s))

    @property
    def zero(self) -> "FieldElem":
        return self.elem(0)

    @property
    def one(self) -> "FieldElem":
        return self.elem(1)

    def sqrt_disc(self) -> "FieldElem":
        """The generator sqrt(D) itself; an error over plain Q."""
        if self.D == 1:
            raise FieldError("sqrt(D) is not a generator when D = 1")
        return self.elem(0, 1)

    def from_json(self, obj) -> "FieldElem":
        """Parse a rational string / integer or an {'r':..,'s':..} object."""
        if isinstance(obj, dict):
            r = as_mpq(obj.get("r", 0))
            s = as_mpq(obj.get("s", 0))
            return FieldElem(self, r, s)
        return self.elem(as_mpq(obj))


class FieldElem:
    """An element r + s*sqrt(D) with exact rational components.

    Immutable; arithmetic requires both operands to share one context.
    """

    __slots__ = ("ctx", "r", "s")

    def __init__(self, ctx: FieldContext, r: mpq, s: mpq = mpq(0)):
        if ctx.D == 1 and s != 0:
            raise FieldError("irrational component requires D != 1")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "r", mpq(r))
        object.__setattr__(self, "s", mpq(s))

    def __setattr__(self, *a):
        raise AttributeError("FieldElem is immutable")

    def _check(self, other: "FieldElem"):
        if self.ctx.D != other.ctx.D:
            raise FieldError("mixed field contexts")

    def is_zero(self) -> bool:
        return self.r == 0 and self.s == 0

    def is_rational(self) -> bool:
        return self.s == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx.D == other.ctx.D and self.r == other.r and self.s == other.s

    def __hash__(self):
        return hash((self.ctx.D, self.r, self.s))

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.ctx, self.r + other.r, self.s + other.s)

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.ctx, self.r - other.r, self.s - other.s)

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.ctx, -self.r, -self.s)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        D = self.ctx.D
        r = self.r * other.r + self.s * other.s * D
        s = self.r * other.s + self.s * other.r
        return FieldElem(self.ctx, r, s)

    def scaled(self, q: RatLike) -> "FieldElem":
        q = as_mpq(q)
        return FieldElem(self.ctx, self.r * q, self.s * q)

    def norm(self) -> mpq:
        """Field norm r^2 - D*s^2; zero iff the element is zero."""
        return self.r * self.r - self.ctx.D * self.s * self.s

    def conjugate(self) -> "FieldElem":
        return FieldElem(self.ctx, self.r, -self.s)

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        n = self.norm()
        # D square-free and (r,s) != 0 make the norm nonzero.
        return FieldElem(self.ctx, self.r / n, -self.s / n)

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.inverse()

    def sqrt(self) -> "FieldElem | None":
        """An exact square root inside K, or None if there is none.

        Solves (u + v*sqrt(D))^2 = r + s*sqrt(D) over the rationals.
        """
        D = self.ctx.D
        if self.is_zero():
            return self.ctx.zero
        if self.s == 0:
            root = _mpq_sqrt(self.r)
            if root is not None:
                return self.ctx.elem(root)
            if D != 1:
                root = _mpq_sqrt(self.r / D)
                if root is not None:
                    return self.ctx.elem(0, root)
            return None
        # u^2 + v^2 D = r, 2uv = s  =>  u^2 is a root of x^2 - r x + s^2 D / 4
        disc = self.r * self.r - D * self.s * self.s
        droot = _mpq_sqrt(disc)
        if droot is None:
            return None
        for u2 in ((self.r + droot) / 2, (self.r - droot) / 2):
            u = _mpq_sqrt(u2)
            if u is not None and u != 0:
                v = self.s / (2 * u)
                cand = self.ctx.elem(u, v)
                if cand * cand == self:
                    return cand
        return None

    def denominator_lcm(self) -> mpz:
        from gmpy2 import lcm

        return lcm(self.r.denominator, self.s.denominator)

    def to_json(self):
        if self.s == 0:
            return rat_str(self.r)
        return {"r": rat_str(self.r), "s": rat_str(self.s)}

    def __repr__(self):
        if self.s == 0:
            return rat_str(self.r)
        if self.r == 0:
            return f"{rat_str(self.s)}*sqrt({self.ctx.D})"
        return f"({rat_str(self.r)} + {rat_str(self.s)}*sqrt({self.ctx.D}))"


def _mpq_sqrt(q: mpq) -> mpq | None:
    """Exact rational square root, or None."""
    from gmpy2 import isqrt

    if q < 0:
        return None
    if q == 0:
        return mpq(0)
    num, den = mpz(q.numerator), mpz(q.denominator)
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return mpq(rn, rd)
    return None
