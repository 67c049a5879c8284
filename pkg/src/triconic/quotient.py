"""Computation in K[t]/(p) without factoring the modulus (dynamic evaluation).

Intersection points of conic pairs have coordinates that are algebraic of
degree up to 4 over K.  Rather than factoring moduli eagerly, arithmetic
proceeds as if the quotient were a field; the moment an inversion hits a zero
divisor, the attempted gcd hands back a nontrivial factorization of the
modulus and the caller branches on the two factors.  Splitting is a normal
outcome here, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldContext, FieldElem
from .upoly import PolyError, UniPoly, upoly_gcd


class SplitModulus(Exception):
    """Raised when inverting a zero divisor; carries p = p1 * p2."""

    def __init__(self, p1: UniPoly, p2: UniPoly):
        super().__init__("modulus splits")
        self.p1 = p1
        self.p2 = p2


@dataclass(frozen=True)
class QuotientRing:
    """K[t]/(modulus) with a monic modulus of degree >= 1."""

    modulus: UniPoly

    def __post_init__(self):
        if self.modulus.degree < 1:
            raise PolyError("modulus must have degree >= 1")
        if not (self.modulus.lc == self.ctx.one):
            raise PolyError("modulus must be monic")

    @property
    def ctx(self) -> FieldContext:
        return self.modulus.ctx

    def reduce(self, rep: UniPoly) -> UniPoly:
        _, r = rep.divmod(self.modulus)
        return r

    def of_scalar(self, c: FieldElem) -> UniPoly:
        return UniPoly(self.ctx, [c])

    def generator(self) -> UniPoly:
        return self.reduce(UniPoly.monomial(self.ctx, self.ctx.one, 1))

    def add(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return a + b

    def sub(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return a - b

    def mul(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return self.reduce(a * b)

    def is_zero(self, a: UniPoly) -> bool:
        return a.is_zero()

    def invert(self, a: UniPoly) -> UniPoly:
        """Inverse mod the modulus, or SplitModulus on a zero divisor.

        A zero element is reported as the trivial "split" modulus = 1 * modulus
        never happens: inverting zero is a caller bug and raises.
        """
        if a.is_zero():
            raise ZeroDivisionError("inverting zero in quotient ring")
        g, u = _half_xgcd(a, self.modulus)
        if g.degree == 0:
            return self.reduce(u.scaled(g.lc.inverse()))
        if g.degree == self.modulus.degree:
            # a is a multiple of the modulus, i.e. zero after reduction.
            raise ZeroDivisionError("inverting zero in quotient ring")
        cof = self.modulus.exact_div(g)
        raise SplitModulus(g.monic(), cof.monic())

    def invertible(self, a: UniPoly) -> bool:
        """True if invertible; False if zero; SplitModulus if a zero divisor."""
        if a.is_zero():
            return False
        g = upoly_gcd(a, self.modulus)
        if g.degree == 0:
            return True
        if g.degree == self.modulus.degree:
            return False
        raise SplitModulus(g.monic(), self.modulus.exact_div(g).monic())


def _half_xgcd(a: UniPoly, m: UniPoly) -> tuple[UniPoly, UniPoly]:
    """(g, u) with g = gcd(a, m) and u*a = g (mod m)."""
    ctx = a.ctx
    r0, r1 = m, a
    u0, u1 = UniPoly.zero(ctx), UniPoly(ctx, [ctx.one])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
    return r0, u0


# -- polynomials over the quotient ring (coefficient lists of reduced reps) --


@dataclass(frozen=True)
class QuotGcd:
    gcd: tuple[UniPoly, ...]  # monic coefficient list over the quotient


@dataclass(frozen=True)
class QuotSplit:
    p1: UniPoly
    p2: UniPoly


def qpoly_strip(coeffs: list[UniPoly]) -> list[UniPoly]:
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def quotient_gcd(
    f: list[UniPoly], g: list[UniPoly], ring: QuotientRing
) -> QuotGcd | QuotSplit:
    """Euclidean gcd of two polynomials with coefficients in K[t]/(p).

    Coefficients are reduced representatives.  Whenever a leading-coefficient
    inversion meets a zero divisor, the result is a splitting of the modulus
    instead of a gcd; the caller re-runs over each factor.
    """
    a = [ring.reduce(c) for c in qpoly_strip(list(f))]
    b = [ring.reduce(c) for c in qpoly_strip(list(g))]
    try:
        while b:
            b = _qpoly_monic(b, ring)
            a, b = b, _qpoly_rem(a, b, ring)
        if not a:
            raise PolyError("quotient gcd of two zero polynomials")
        return QuotGcd(tuple(_qpoly_monic(a, ring)))
    except SplitModulus as sp:
        return QuotSplit(sp.p1, sp.p2)


def _qpoly_monic(p: list[UniPoly], ring: QuotientRing) -> list[UniPoly]:
    inv = ring.invert(p[-1])
    return [ring.mul(c, inv) for c in p]


def _qpoly_rem(a: list[UniPoly], b: list[UniPoly], ring: QuotientRing) -> list[UniPoly]:
    """Remainder of a by monic b over the quotient ring."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        k = len(a) - 1 - db
        if not c.is_zero():
            for i in range(db + 1):
                a[k + i] = ring.sub(a[k + i], ring.mul(c, b[i]))
        a.pop()
        a = qpoly_strip(a)
    return a
