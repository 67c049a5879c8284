"""Univariate polynomials over K = Q(sqrt(D)).

Dense degree-indexed coefficient lists with trailing zeros stripped.  The gcd
runs over the subresultant polynomial-remainder sequence, which keeps
intermediate coefficients to determinant size instead of the exponential
blow-up of naive Euclidean division; the resultant is the Sylvester
determinant with the rows of the first argument on top, which pins the sign
convention once and for all.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import FieldContext, FieldElem


class PolyError(ValueError):
    pass


class UniPoly:
    """Polynomial sum(coeffs[i] * t^i) with FieldElem coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: Sequence[FieldElem]):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, ctx: FieldContext, coeffs: Iterable) -> "UniPoly":
        return cls(ctx, [ctx.elem(c) for c in coeffs])

    @classmethod
    def zero(cls, ctx: FieldContext) -> "UniPoly":
        return cls(ctx, [])

    @classmethod
    def monomial(cls, ctx: FieldContext, coeff: FieldElem, power: int) -> "UniPoly":
        return cls(ctx, [ctx.zero] * power + [coeff])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> FieldElem:
        if self.is_zero():
            raise PolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> FieldElem:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.ctx.D == other.ctx.D and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.D, self.coeffs))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.ctx, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.ctx, [self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.ctx)
        out = [self.ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.ctx, out)

    def scaled(self, c: FieldElem) -> "UniPoly":
        return UniPoly(self.ctx, [a * c for a in self.coeffs])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            raise PolyError("cannot normalize the zero polynomial")
        return self.scaled(self.lc.inverse())

    def derivative(self) -> "UniPoly":
        return UniPoly(
            self.ctx, [c.scaled(i) for i, c in enumerate(self.coeffs)][1:]
        )

    def __call__(self, x: FieldElem) -> FieldElem:
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_up(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return UniPoly(self.ctx, [self.ctx.zero] * k + list(self.coeffs))

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        q = [self.ctx.zero] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        inv = other.lc.inverse()
        d = other.degree
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            c = rem[-1] * inv
            q[k] = c
            for i in range(d + 1):
                rem[k + i] = rem[k + i] - c * other.coeffs[i]
            while rem and rem[-1].is_zero():
                rem.pop()
        return UniPoly(self.ctx, q), UniPoly(self.ctx, rem)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise PolyError("inexact polynomial division")
        return q

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                parts.append(f"({c!r})*t^{i}" if i else f"{c!r}")
        return "UniPoly(" + " + ".join(parts) + ")"


def upoly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd via the subresultant remainder sequence.

    One of the inputs may be zero but not both.
    """
    if f.is_zero() and g.is_zero():
        raise PolyError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.degree < g.degree:
        f, g = g, f
    ctx = f.ctx
    a, b = f, g
    gc = ctx.one
    h = ctx.one
    while True:
        d = a.degree - b.degree
        r = _prem(a, b)
        if r.is_zero():
            return b.monic()
        denom = gc * _pow(h, d)
        a, b = b, r.scaled(denom.inverse())
        gc = a.lc
        if d > 0:
            h = _pow(gc, d) * _pow(h, d - 1).inverse()


def _pow(x: FieldElem, n: int) -> FieldElem:
    out = x.ctx.one
    for _ in range(n):
        out = out * x
    return out


def _prem(f: UniPoly, g: UniPoly) -> UniPoly:
    """Pseudo-remainder: rem(lc(g)^(deg f - deg g + 1) * f, g)."""
    d = f.degree - g.degree
    if d < 0:
        return f
    scale = _pow(g.lc, d + 1)
    _, r = f.scaled(scale).divmod(g)
    return r


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun decomposition f = lc * prod g_i^(m_i), g_i monic squarefree coprime.

    Returns [(g_i, m_i), ...] with constant factors dropped.
    """
    if f.is_zero():
        raise PolyError("zero input")
    if f.degree == 0:
        return []
    f = f.monic()
    fp = f.derivative()
    a = upoly_gcd(f, fp)
    if a.degree == 0:
        return [(f, 1)]
    b = f.exact_div(a)
    c = fp.exact_div(a)
    out: list[tuple[UniPoly, int]] = []
    m = 1
    while b.degree > 0:
        d = c - b.derivative()
        if d.is_zero():
            out.append((b.monic(), m))
            break
        g = upoly_gcd(b, d)
        if g.degree > 0:
            out.append((g.monic(), m))
        b = b.exact_div(g)
        c = d.exact_div(g)
        m += 1
    return out


def resultant(f: UniPoly, g: UniPoly) -> FieldElem:
    """Sylvester-determinant resultant, f-rows first.

    With this ordering res(t - a, t - b) = a - b.
    """
    if f.is_zero() or g.is_zero():
        raise PolyError("resultant of zero polynomial")
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return f.ctx.one
    size = m + n
    rows: list[list[FieldElem]] = []
    frow = [f[m - i] for i in range(m + 1)]
    grow = [g[n - i] for i in range(n + 1)]
    for k in range(n):
        rows.append([f.ctx.zero] * k + frow + [f.ctx.zero] * (size - k - m - 1))
    for k in range(m):
        rows.append([f.ctx.zero] * k + grow + [f.ctx.zero] * (size - k - n - 1))
    return _det(rows, f.ctx)


def _det(rows: list[list[FieldElem]], ctx: FieldContext) -> FieldElem:
    """Fraction-free (Bareiss) determinant of a small square matrix over K."""
    n = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    prev = ctx.one
    for c in range(n - 1):
        p = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if p is None:
            return ctx.zero
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        inv_prev = prev.inverse()
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (piv * m[i][j] - m[i][c] * m[c][j]) * inv_prev
            m[i][c] = ctx.zero
        prev = piv
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d
