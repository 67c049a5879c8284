import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from triconic.field import FieldContext
from triconic.upoly import (
    PolyError,
    UniPoly,
    resultant,
    squarefree_decomposition,
    upoly_gcd,
)


def poly(ctx, *coeffs):
    """Ascending rational coefficients."""
    return UniPoly(ctx, [ctx.elem(c) for c in coeffs])


def to_sympy(p, t):
    return sum(
        sympy.Rational(str(p[i].r)) * t**i for i in range(p.degree + 1)
    )


small_coeffs = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=1, max_size=6
)


def test_degree_and_evaluation(ctxq):
    p = poly(ctxq, 1, 0, 2)  # 1 + 2t^2
    assert p.degree == 2
    assert p(ctxq.elem(3)) == ctxq.elem(19)
    z = UniPoly(ctxq, [])
    assert z.is_zero()
    assert z(ctxq.elem(5)).is_zero()


def test_divmod_exact(ctxq):
    f = poly(ctxq, -6, 11, -6, 1)  # (t-1)(t-2)(t-3)
    g = poly(ctxq, -1, 1)
    q, r = f.divmod(g)
    assert r.is_zero()
    assert q == poly(ctxq, 6, -5, 1)
    assert g * q == f


def test_gcd_known_factor(ctxq):
    f = poly(ctxq, -1, 0, 1)       # (t-1)(t+1)
    g = poly(ctxq, -2, 1, 1)       # (t-1)(t+2)
    assert upoly_gcd(f, g) == poly(ctxq, -1, 1)


def test_gcd_over_extension(ctx3):
    w = ctx3.sqrt_disc()
    # f = (t - w)(t + 1), g = (t - w)(t - 2)
    lin = UniPoly(ctx3, [-w, ctx3.one])
    f = lin * poly(ctx3, 1, 1)
    g = lin * poly(ctx3, -2, 1)
    assert upoly_gcd(f, g) == lin


def test_squarefree_decomposition_multiplicities(ctxq):
    lin = poly(ctxq, -1, 1)
    f = lin * lin * lin * poly(ctxq, 2, 1)
    parts = squarefree_decomposition(f)
    assert sorted((g.degree, m) for g, m in parts) == [(1, 1), (1, 3)]
    for g, _ in parts:
        assert g.lc == ctxq.one
    with pytest.raises(PolyError):
        squarefree_decomposition(UniPoly(ctxq, []))


def test_resultant_sign_convention(ctxq):
    # res(t - a, t - b) = a - b, pinned orientation
    f = poly(ctxq, -5, 1)
    g = poly(ctxq, -9, 1)
    assert resultant(f, g) == ctxq.elem(-4)
    assert resultant(g, f) == ctxq.elem(4)


def _sylvester_det(fc, gc):
    """det of the Sylvester matrix in descending-coefficient convention.

    Independent oracle: sympy.resultant flips sign in some degree
    combinations relative to this determinant.
    """
    fd = list(reversed(fc))
    gd = list(reversed(gc))
    n, m = len(fd) - 1, len(gd) - 1
    size = n + m
    rows = []
    for i in range(m):
        rows.append([0] * i + fd + [0] * (m - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (n - 1 - i))
    return sympy.Matrix(size, size, lambda i, j: rows[i][j]).det()


def test_resultant_against_sympy(ctxq):
    rng = random.Random(20260826)
    t = sympy.symbols("t")
    for _ in range(25):
        fc = [rng.randint(-6, 6) for _ in range(rng.randint(2, 5))]
        gc = [rng.randint(-6, 6) for _ in range(rng.randint(2, 5))]
        if not fc[-1] or not gc[-1]:
            continue
        f = poly(ctxq, *fc)
        g = poly(ctxq, *gc)
        ours = resultant(f, g)
        theirs = _sylvester_det(fc, gc)
        assert ours.is_rational() and ours.r == sympy.nsimplify(theirs)


@settings(max_examples=30, deadline=None)
@given(fc=small_coeffs, gc=small_coeffs, hc=small_coeffs)
def test_gcd_divides_both(fc, gc, hc):
    ctx = FieldContext(1)
    f, g, h = (UniPoly(ctx, [ctx.elem(c) for c in cs]) for cs in (fc, gc, hc))
    if f.is_zero() or g.is_zero() or h.is_zero():
        return
    # force a common factor
    f, g = f * h, g * h
    d = upoly_gcd(f, g)
    assert d.degree >= h.degree - (0 if h.degree == 0 else 0)
    for p in (f, g):
        _, r = p.divmod(d)
        assert r.is_zero()


@settings(max_examples=30, deadline=None)
@given(fc=small_coeffs, gc=small_coeffs)
def test_resultant_zero_iff_common_root(fc, gc):
    ctx = FieldContext(1)
    f = UniPoly(ctx, [ctx.elem(c) for c in fc])
    g = UniPoly(ctx, [ctx.elem(c) for c in gc])
    if f.degree < 1 or g.degree < 1:
        return
    res = resultant(f, g)
    assert res.is_zero() == (upoly_gcd(f, g).degree >= 1)


def test_derivative_and_shift(ctxq):
    p = poly(ctxq, 1, 2, 3)
    assert p.derivative() == poly(ctxq, 2, 6)
    assert p.shift_up(2) == poly(ctxq, 0, 0, 1, 2, 3)
