"""Deterministic SVG rendering of the real slice of an arrangement.

The drawing chart is {L = 1} for a linear form L = a X + b Y + c Z with
c != 0 (default L = Z, the standard affine chart).  Each conic restricted to
the chart is a quadratic in y for every fixed x, so each pixel column
contributes up to two points per conic; columns are joined into polylines
per branch.  Output depends only on the arrangement, the window, the slice,
and the singular-point data, so files are bit-stable across runs.
"""

from __future__ import annotations

import math

from .field import FieldElem
from .geometry import Arrangement, Conic

WIDTH = 640
HEIGHT = 640
COLUMNS = 640
COLORS = ("#1f5fbf", "#bf3f1f", "#1f8f4f")


class SliceError(ValueError):
    pass


def _fnum(v: float) -> str:
    return format(v, ".3f")


def _to_float(e: FieldElem) -> float:
    return float(e.r) + float(e.s) * math.sqrt(abs(e.ctx.D)) * (1 if e.ctx.D > 0 else 0)


def _is_real(e: FieldElem) -> bool:
    return e.ctx.D > 0 or e.s == 0


def _chart_coeffs(q: Conic, sl: tuple[float, float, float]):
    """Coefficients of Q(x, y, (1 - a x - b y)/c) * c^2 as polynomials in x.

    Returns (A, B, C) with A y^2 + B(x) y + C(x); A constant, B linear in x,
    C quadratic in x, all as float tuples (low degree first).
    """
    a, b, c = sl
    a1, a2, a3, a4, a5, a6 = (_to_float(e) for e in q.c)
    # z*c = 1 - a x - b y
    # c^2 Q = a1 c^2 x^2 + a2 c^2 y^2 + a3 (1-ax-by)^2 + a4 c^2 xy
    #       + a5 c x (1-ax-by) + a6 c y (1-ax-by)
    A = a2 * c * c + a3 * b * b - a6 * c * b
    B0 = -2 * a3 * b + a6 * c
    B1 = 2 * a3 * a * b + a4 * c * c - a5 * c * b - a6 * c * a
    C0 = a3
    C1 = -2 * a3 * a + a5 * c
    C2 = a1 * c * c + a3 * a * a - a5 * c * a
    return A, (B0, B1), (C0, C1, C2)


def _column_roots(A, B, C, x: float):
    b = B[0] + B[1] * x
    c = C[0] + C[1] * x + C[2] * x * x
    if abs(A) < 1e-12:
        if abs(b) < 1e-12:
            return None, None
        y = -c / b
        return y, None
    disc = b * b - 4 * A * c
    if disc < 0:
        return None, None
    s = math.sqrt(disc)
    return (-b + s) / (2 * A), (-b - s) / (2 * A)


def render_svg(arr: Arrangement, window=(-4.0, 4.0, -4.0, 4.0),
               slice_form=(0.0, 0.0, 1.0), singular_points=()) -> str:
    """Render the arrangement; `singular_points` is an iterable of
    (type name, coordinate triple of FieldElem)."""
    a, b, c = slice_form
    if abs(c) < 1e-12:
        raise SliceError("slice form must have a nonzero Z coefficient")
    x0, x1, y0, y1 = window
    if not (x1 > x0 and y1 > y0):
        raise SliceError("empty window")

    def px(x: float) -> float:
        return (x - x0) / (x1 - x0) * WIDTH

    def py(y: float) -> float:
        return HEIGHT - (y - y0) / (y1 - y0) * HEIGHT

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    # axes
    if x0 < 0 < x1:
        parts.append(
            f'<line x1="{_fnum(px(0))}" y1="0" x2="{_fnum(px(0))}" '
            f'y2="{HEIGHT}" stroke="#cccccc"/>'
        )
    if y0 < 0 < y1:
        parts.append(
            f'<line x1="0" y1="{_fnum(py(0))}" x2="{WIDTH}" '
            f'y2="{_fnum(py(0))}" stroke="#cccccc"/>'
        )

    drew_any = False
    skipped = []
    for idx, q in enumerate(arr.conics):
        if not all(_is_real(e) for e in q.c):
            skipped.append(f"conic {idx + 1}: complex coefficients, not drawn")
            continue
        A, B, C = _chart_coeffs(q, slice_form)
        branches = ([], [])
        runs = []
        for col in range(COLUMNS + 1):
            x = x0 + (x1 - x0) * col / COLUMNS
            r1, r2 = _column_roots(A, B, C, x)
            for bi, r in enumerate((r1, r2)):
                branch = branches[bi]
                if r is None or not (y0 - 1 <= r <= y1 + 1):
                    if branch:
                        runs.append(list(branch))
                        branch.clear()
                else:
                    branch.append((x, r))
        for branch in branches:
            if branch:
                runs.append(list(branch))
        color = COLORS[idx % 3]
        for run in runs:
            if len(run) < 2:
                continue
            drew_any = True
            pts = " ".join(f"{_fnum(px(x))},{_fnum(py(y))}" for x, y in run)
            parts.append(
                f'<polyline points="{pts}" fill="none" stroke="{color}" '
                f'stroke-width="1.5"/>'
            )

    legend = []
    for name, coords in singular_points:
        if all(_is_real(e) for e in coords):
            xs = [_to_float(e) for e in coords]
            lam = a * xs[0] + b * xs[1] + c * xs[2]
            if abs(lam) > 1e-12:
                cx, cy = xs[0] / lam, xs[1] / lam
                if x0 <= cx <= x1 and y0 <= cy <= y1:
                    parts.append(
                        f'<circle cx="{_fnum(px(cx))}" cy="{_fnum(py(cy))}" '
                        f'r="4" fill="black"/>'
                    )
                    parts.append(
                        f'<text x="{_fnum(px(cx) + 6)}" y="{_fnum(py(cy) - 6)}" '
                        f'font-size="12">{name}</text>'
                    )
                    continue
            legend.append(f"{name}: outside chart window")
        else:
            legend.append(f"{name}: complex point")

    legend = skipped + legend
    if not drew_any:
        legend.insert(0, "empty real slice in this window")
    for i, line in enumerate(legend):
        parts.append(
            f'<text x="8" y="{16 + 14 * i}" font-size="12" '
            f'fill="#555555">{line}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
