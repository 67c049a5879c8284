import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from triconic.field import FieldContext
from triconic.geometry import (
    Arrangement,
    Conic,
    DegenerateCoordinates,
    DuplicateConicError,
    PairType,
    SingularConicError,
    change_matrix,
    conic_pair_resultant,
    identity_matrix,
    make_arrangement,
    normalize_point,
    pattern_of,
)

X, Y, Z = sympy.symbols("X Y Z")


def conic(ctx, coeffs):
    return Conic.make(ctx, coeffs)


def to_sympy(q):
    a, b, c, d, e, f = [sympy.Rational(str(v.r)) for v in q.c]
    return a * X**2 + b * Y**2 + c * Z**2 + d * X * Y + e * X * Z + f * Y * Z


@pytest.fixture
def ctx():
    return FieldContext(1)


def test_evaluation_and_smoothness(ctx):
    circle = conic(ctx, [1, 1, -1, 0, 0, 0])  # X^2 + Y^2 - Z^2
    assert circle.is_smooth()
    assert circle(ctx.elem(1), ctx.zero, ctx.one).is_zero()
    assert not circle(ctx.one, ctx.one, ctx.one).is_zero()


def test_singular_conic_detected(ctx):
    with pytest.raises(SingularConicError):
        make_arrangement(
            [[1, -1, 0, 0, 0, 0], [1, 1, -1, 0, 0, 0], [1, 2, -1, 0, 0, 0]],
            ctx,
        )


def test_duplicate_conic_detected(ctx):
    with pytest.raises(DuplicateConicError):
        make_arrangement(
            [[1, 1, -1, 0, 0, 0], [2, 2, -2, 0, 0, 0], [1, 2, -1, 0, 0, 0]],
            ctx,
        )


def test_det3_matches_sympy(ctx):
    rng = random.Random(20260826)
    for _ in range(20):
        coeffs = [rng.randint(-5, 5) for _ in range(6)]
        try:
            q = conic(ctx, coeffs)
        except Exception:
            continue
        sq = to_sympy(q)
        hess = sympy.Matrix(
            [[sympy.diff(sq, u, v) for v in (X, Y, Z)] for u in (X, Y, Z)]
        )
        # the Hessian of the form is exactly the doubled matrix 2A
        assert sympy.Rational(str(q.det3().r)) == hess.det()


def test_transform_preserves_vanishing(ctx):
    q = conic(ctx, [1, 1, -1, 0, 0, 0])
    M = change_matrix(ctx, 42)
    qt = q.transformed(M)
    # points of qt are M^-1 images: check instead that qt(x) = q(Mx)
    pts = [(1, 0, 1), (0, 1, 1), (3, 4, 5)]
    for p in pts:
        v = [ctx.elem(c) for c in p]
        img = [
            M[0][0] * v[0] + M[0][1] * v[1] + M[0][2] * v[2],
            M[1][0] * v[0] + M[1][1] * v[1] + M[1][2] * v[2],
            M[2][0] * v[0] + M[2][1] * v[1] + M[2][2] * v[2],
        ]
        assert qt(*v) == q(*img) or qt(*v).is_zero() == q(*img).is_zero()


def test_identity_matrix_fixed_point(ctx):
    q = conic(ctx, [1, 2, -3, 1, 0, 1])
    assert q.transformed(identity_matrix(ctx)) == q


def test_change_matrix_deterministic(ctx):
    assert change_matrix(ctx, 7) == change_matrix(ctx, 7)
    assert change_matrix(ctx, 7) != change_matrix(ctx, 8)


def test_normalize_point(ctx):
    p = normalize_point((ctx.elem(2), ctx.elem(4), ctx.elem(6)))
    assert p == (ctx.one, ctx.elem(2), ctx.elem(3))
    p2 = normalize_point((ctx.zero, ctx.elem(5), ctx.elem(10)))
    assert p2 == (ctx.zero, ctx.one, ctx.elem(2))


def test_pair_resultant_matches_sympy(ctx):
    rng = random.Random(11)
    checked = 0
    while checked < 10:
        c1 = [rng.randint(-3, 3) for _ in range(6)]
        c2 = [rng.randint(-3, 3) for _ in range(6)]
        try:
            q1 = conic(ctx, c1)
            q2 = conic(ctx, c2)
            quart = conic_pair_resultant(q1, q2)
        except Exception:
            continue
        ours = sum(
            sympy.Rational(str(quart.coeffs[i].r)) * X**i * Y ** (4 - i)
            for i in range(5)
        )
        theirs = sympy.expand(sympy.resultant(to_sympy(q1), to_sympy(q2), Z))
        assert sympy.expand(ours - theirs) == 0 or sympy.expand(ours + theirs) == 0
        checked += 1


def test_degenerate_center_raises(ctx):
    # Z^2 coefficient zero: [0:0:1] lies on the conic
    q1 = conic(ctx, [1, 1, 0, 0, 1, 0])
    q2 = conic(ctx, [1, 1, -1, 0, 0, 0])
    with pytest.raises(DegenerateCoordinates):
        conic_pair_resultant(q1, q2)


def test_pattern_of_tangent_circles(ctx):
    # unit circle and a circle tangent to it at [1:0:1]
    q1 = conic(ctx, [1, 1, -1, 0, 0, 0])
    q2 = conic(ctx, [1, 1, "-1/4", 0, "-3/2", 0])  # center (3/4,0), r=1/4... tangency
    quart = conic_pair_resultant(q1, q2)
    pat = pattern_of(quart)
    assert sum(pat) == 4


def test_arrangement_transform_scale_roundtrip(ctx):
    arr = make_arrangement(
        [[1, 1, -1, 0, 0, 0], [1, 2, -1, 0, 0, 0], [2, 1, -1, 0, 0, 0]], ctx
    )
    M = change_matrix(ctx, 5)
    arr2 = arr.transformed(M)
    assert arr2 is not arr and len(arr2.conics) == 3
    arr3 = arr.scaled([ctx.elem(2), ctx.elem(-3), ctx.elem("1/2")])
    for q, qs, f in zip(arr.conics, arr3.conics, (2, -3, "1/2")):
        assert qs == q.scaled(ctx.elem(f))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_change_matrix_invertible(seed):
    ctx = FieldContext(1)
    M = change_matrix(ctx, seed)
    rows = [[sympy.Rational(str(e.r)) for e in row] for row in M]
    assert sympy.Matrix(rows).det() != 0
