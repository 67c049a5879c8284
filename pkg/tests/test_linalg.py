import random
from fractions import Fraction

import pytest
import sympy
from gmpy2 import mpz
from hypothesis import given, settings
from hypothesis import strategies as st

from triconic.field import FieldContext
from triconic.linalg import (
    _digit,
    _digit_bound,
    _offset_for,
    _pack,
    field_rank,
    field_rank_reference,
    nullity,
)


def mat(ctx, rows):
    return [[ctx.elem(v) for v in row] for row in rows]


def test_empty_and_zero():
    ctx = FieldContext(1)
    assert field_rank([], ctx) == 0
    assert field_rank(mat(ctx, [[0, 0], [0, 0]]), ctx) == 0
    assert nullity(mat(ctx, [[0, 0], [0, 0]]), ctx) == 2


def test_small_known_ranks():
    ctx = FieldContext(1)
    assert field_rank(mat(ctx, [[1, 2], [2, 4]]), ctx) == 1
    assert field_rank(mat(ctx, [[1, 0], [0, 1]]), ctx) == 2
    assert field_rank(mat(ctx, [[1, 2, 3], [4, 5, 6], [7, 8, 9]]), ctx) == 2
    assert nullity(mat(ctx, [[1, 2, 3], [4, 5, 6], [7, 8, 9]]), ctx) == 1


def test_rational_entries():
    ctx = FieldContext(1)
    rows = mat(ctx, [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 2]])
    assert field_rank(rows, ctx) == 2


def test_quadratic_rank_drop():
    # second row is sqrt(5) times the first, so the rank is 1 over Q(sqrt 5)
    ctx = FieldContext(5)
    w = ctx.sqrt_disc()
    rows = [
        [ctx.one, w],
        [w, ctx.elem(5)],
    ]
    assert field_rank(rows, ctx) == 1
    assert field_rank_reference(rows, ctx) == 1


def test_pack_digit_roundtrip():
    rng = random.Random(20260826)
    for _ in range(50):
        B = rng.choice([64, 96, 128])
        n = rng.randrange(1, 12)
        entries = [mpz(rng.randrange(-(1 << (B - 3)), 1 << (B - 3))) for _ in range(n)]
        P = _pack(entries, B)
        assert [_digit(P, j, B) for j in range(n)] == entries


def test_digit_bound_dominates_digits():
    rng = random.Random(7)
    for _ in range(60):
        B = rng.choice([64, 96, 128, 160])
        n = rng.randrange(1, 10)
        entries = [mpz(rng.randrange(-(1 << (B - 3)), 1 << (B - 3))) for _ in range(n)]
        P = _pack(entries, B)
        bound = _digit_bound(P, n, B, _offset_for(n, B))
        assert all(abs(d) <= bound for d in entries)
        assert bound <= 1 << B


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-50, max_value=50), min_size=4, max_size=4),
        min_size=2,
        max_size=6,
    )
)
def test_rank_matches_sympy(rows):
    ctx = FieldContext(1)
    got = field_rank(mat(ctx, rows), ctx)
    assert got == sympy.Matrix(rows).rank()


@settings(max_examples=25, deadline=None)
@given(
    st.integers(min_value=3, max_value=5).flatmap(
        lambda w: st.lists(
            st.lists(
                st.tuples(
                    st.integers(min_value=-9, max_value=9),
                    st.integers(min_value=-9, max_value=9),
                ),
                min_size=w,
                max_size=w,
            ),
            min_size=2,
            max_size=5,
        )
    )
)
def test_packed_matches_reference_over_quadratic(rows):
    ctx = FieldContext(-3)
    w = ctx.sqrt_disc()
    m = [[ctx.elem(r) + ctx.elem(s) * w for (r, s) in row] for row in rows]
    assert field_rank(m, ctx) == field_rank_reference(m, ctx)


def test_rank_invariant_under_row_scaling():
    ctx = FieldContext(-3)
    w = ctx.sqrt_disc()
    rows = [
        [ctx.elem(1), w, ctx.elem(3)],
        [ctx.elem(2) + w, ctx.elem(-1), ctx.zero],
    ]
    base = field_rank(rows, ctx)
    scale = ctx.elem(Fraction(7, 3)) + ctx.elem(2) * w
    scaled = [[scale * e for e in rows[0]], rows[1]]
    assert field_rank(scaled, ctx) == base


def test_large_entry_repack_path():
    # entries big enough that the adaptive width machinery has to engage
    ctx = FieldContext(1)
    rng = random.Random(99)
    rows = [
        [ctx.elem(rng.randrange(-(10**40), 10**40)) for _ in range(8)]
        for _ in range(8)
    ]
    plain = [[int(e.r) for e in row] for row in rows]
    assert field_rank(rows, ctx) == sympy.Matrix(plain).rank()


def test_wide_and_tall():
    ctx = FieldContext(1)
    wide = mat(ctx, [[1, 2, 3, 4, 5]])
    tall = mat(ctx, [[1], [2], [3]])
    assert field_rank(wide, ctx) == 1
    assert field_rank(tall, ctx) == 1
    assert nullity(wide, ctx) == 4
