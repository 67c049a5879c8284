import pytest

from triconic.field import FieldContext
from triconic.geometry import make_arrangement
from triconic.plot import SliceError, render_svg


@pytest.fixture
def arr(ctxq):
    return make_arrangement(
        [[1, 1, -1, 0, 0, 0], [1, 2, -1, 0, 0, 0], [2, 1, -1, 0, 0, 0]], ctxq
    )


def test_deterministic(arr):
    assert render_svg(arr) == render_svg(arr)


def test_basic_structure(arr):
    svg = render_svg(arr)
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    assert "polyline" in svg


def test_zero_slice_coefficient(arr):
    with pytest.raises(SliceError):
        render_svg(arr, slice_form=(1.0, 0.0, 0.0))


def test_empty_window(arr):
    with pytest.raises(SliceError):
        render_svg(arr, window=(2.0, 1.0, -1.0, 1.0))


def test_empty_real_slice_annotated(ctxq):
    # conics with no real points near the window: x^2 + y^2 + z^2 offsets
    arr = make_arrangement(
        [[1, 1, 1, 0, 0, 0], [1, 2, 1, 0, 0, 0], [2, 1, 1, 0, 0, 0]], ctxq
    )
    svg = render_svg(arr)
    assert "empty real slice" in svg


def test_complex_coefficient_legend(ctx3):
    w = ctx3.sqrt_disc()
    rows = [
        [ctx3.one, ctx3.one, -ctx3.one, ctx3.zero, ctx3.zero, ctx3.zero],
        [ctx3.one, ctx3.elem(2), -ctx3.one, ctx3.zero, w, ctx3.zero],
        [ctx3.elem(2), ctx3.one, -ctx3.one, ctx3.zero, ctx3.zero, ctx3.zero],
    ]
    arr = make_arrangement(rows, ctx3)
    svg = render_svg(arr)
    assert "complex coefficients, not drawn" in svg


def test_singular_point_markers(arr, ctxq):
    svg = render_svg(
        arr,
        singular_points=[("A1", (ctxq.one, ctxq.zero, ctxq.one))],
    )
    assert "A1" in svg
    assert "circle" in svg


def test_point_outside_window_noted(arr, ctxq):
    svg = render_svg(
        arr,
        window=(-1.0, -0.5, -1.0, -0.5),
        singular_points=[("A3", (ctxq.elem(10), ctxq.zero, ctxq.one))],
    )
    assert "outside chart window" in svg


def test_complex_point_noted(arr, ctx3):
    w = ctx3.sqrt_disc()
    rows = [[e for e in q.c] for q in arr.conics]
    arr3 = make_arrangement(
        [[ctx3.elem(str(e.r)) for e in row] for row in rows], ctx3
    )
    svg = render_svg(
        arr3,
        singular_points=[("A1", (ctx3.one, w, ctx3.zero))],
    )
    assert "complex point" in svg
