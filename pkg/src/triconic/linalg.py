"""Exact matrix rank over K = Q(sqrt(D)) by fraction-free elimination.

Ranks of the Jacobian multiplication maps (matrices up to ~140 x ~200) must be
exact, so elimination is Bareiss-style: every division is exact in the ring of
integers of K and intermediate entries are minors of the scaled input.

The fast path packs each matrix row into one big integer per component
(digits of width 2^B), so a whole-row update ``(piv * row_i - e * row_r) / prev``
costs a handful of GMP operations instead of a Python-level loop over
entries.  The digit width B is adaptive: a rigorous running bound on entry
magnitudes is checked before each pivot step, and when the bound approaches
the digit capacity the active rows are unpacked and repacked at a doubled
width, so packed digits can never silently overflow.
"""

from __future__ import annotations

import numpy as _np
from gmpy2 import divexact, gcd, lcm, mpz

from .field import FieldContext, FieldElem

_ZERO = mpz(0)


def field_rank(rows: list[list[FieldElem]], ctx: FieldContext) -> int:
    """Exact rank of a matrix over K."""
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    int_rows = [_clear_row(row) for row in rows]
    if all(s == 0 for row in int_rows for (_, s) in row):
        plain = [[a for (a, _) in row] for row in int_rows]
        return _packed_rank_int(plain, ncols)
    return _packed_rank_quad(int_rows, ncols, ctx.D)


def nullity(rows: list[list[FieldElem]], ctx: FieldContext) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rows[0]) - field_rank(rows, ctx)


def _clear_row(row: list[FieldElem]) -> list[tuple[mpz, mpz]]:
    """Scale a row to coprime integer entries; rank is scaling-invariant."""
    den = mpz(1)
    for e in row:
        den = lcm(den, e.r.denominator)
        den = lcm(den, e.s.denominator)
    out = []
    content = _ZERO
    for e in row:
        r = mpz((e.r * den).numerator)
        s = mpz((e.s * den).numerator)
        out.append((r, s))
        content = gcd(content, r, s)
    if content > 1:
        out = [(divexact(r, content), divexact(s, content)) for (r, s) in out]
    return out


# -- packing helpers ---------------------------------------------------------


def _pack(entries: list[mpz], B: int) -> mpz:
    acc = mpz(0)
    for j in reversed(range(len(entries))):
        acc = (acc << B) + entries[j]
    return acc


def _digit(P: mpz, j: int, B: int) -> mpz:
    """Digit j of a packed row, valid while all |entries| < 2^(B-2)."""
    mod_bits = B * (j + 1)
    t = P & ((mpz(1) << mod_bits) - 1)
    if t >> (mod_bits - 1):
        t -= mpz(1) << mod_bits
    if j:
        t = (t + (mpz(1) << (B * j - 1))) >> (B * j)
    return t


def _digit_bound(P: mpz, rem: int, B: int, offset: mpz) -> int:
    """Power-of-two upper bound on |digit| over the first `rem` digits.

    `offset` adds 2^(B-1) to every digit, which keeps them nonnegative
    without borrows, so the shifted number splits at byte boundaries (B is
    always a multiple of 8).  A digit equal to v has the byte pattern of
    v + 2^(B-1): all zero except the top byte 0x80 when v = 0.  The highest
    byte position deviating from that rest pattern bounds |v| by
    2^(8 (pos+1)), which is tight enough for width selection.
    """
    step = B // 8
    data = int(P + offset).to_bytes(step * rem, "little")
    arr = _np.frombuffer(data, dtype=_np.uint8).reshape(rem, step)
    # a digit v >= 0 leaves high bytes 0x00 with top byte 0x80; a digit
    # v < 0 leaves high bytes 0xFF with top byte 0x7F; the highest byte
    # deviating from whichever rest pattern applies bounds |v|
    rest_pos = _np.zeros(step, dtype=_np.uint8)
    rest_pos[-1] = 0x80
    rest_neg = _np.full(step, 0xFF, dtype=_np.uint8)
    rest_neg[-1] = 0x7F
    def top_deviation(rest):
        diff = arr != rest
        hit = diff.any(axis=1)
        t = _np.full(rem, -1, dtype=_np.int64)  # full match: |v| <= 1
        t[hit] = step - 1 - _np.argmax(diff[hit, ::-1], axis=1)
        return t

    top = _np.minimum(top_deviation(rest_pos), top_deviation(rest_neg))
    m = int(top.max())
    return 1 if m < 0 else 1 << (8 * (m + 1))


def _offset_for(rem: int, B: int) -> mpz:
    return ((mpz(1) << (B * rem)) - 1) // ((mpz(1) << B) - 1) << (B - 1)


# -- plain integer case ------------------------------------------------------


def _packed_rank_int(rows: list[list[mpz]], ncols: int) -> int:
    maxabs = max((abs(e) for row in rows for e in row), default=_ZERO)
    if maxabs == 0:
        return 0
    B = max(96, -(-(maxabs.bit_length() + 16) // 8) * 8)
    while maxabs >= mpz(1) << (B - 2):
        B *= 2
    packed = [_pack(row, B) for row in rows]
    nrows = len(packed)
    bound = maxabs
    prev = mpz(1)
    r = 0
    c = 0
    while c < ncols and r < nrows:
        # active rows always hold the current column in digit 0: processed
        # columns are shifted off below, keeping digit extraction cheap
        col = [_digit(packed[i], 0, B) for i in range(r, nrows)]
        p = next((k for k, e in enumerate(col) if e), None)
        if p is None:
            for i in range(r, nrows):
                packed[i] >>= B
            c += 1
            continue
        if p:
            packed[r], packed[r + p] = packed[r + p], packed[r]
            col[0], col[p] = col[p], col[0]
        piv = col[0]
        emax = max((abs(e) for e in col[1:]), default=_ZERO)
        new_bound = ((abs(piv) + emax) * bound) // abs(prev) + 1
        if new_bound >= mpz(1) << (B - 2):
            # the bound compounds a worst-case ratio per step and can run far
            # ahead of the true entries; reset it to the measured maximum
            # before paying for a wider repack
            rem = ncols - c
            offset = _offset_for(rem, B)
            bound = mpz(
                max((_digit_bound(packed[i], rem, B, offset)
                     for i in range(r, nrows)), default=0)
            ) + 1
            new_bound = ((abs(piv) + emax) * bound) // abs(prev) + 1
            if new_bound >= mpz(1) << (B - 2):
                # repack all active rows at a doubled digit width; current
                # entries are within the old bound, so they unpack cleanly
                B2 = 2 * B
                while new_bound >= mpz(1) << (B2 - 2):
                    B2 *= 2
                for i in range(r, nrows):
                    ent = [_digit(packed[i], j, B) for j in range(rem)]
                    packed[i] = _pack(ent, B2)
                B = B2
            continue
        prow = packed[r]
        for i in range(r + 1, nrows):
            e = col[i - r]
            if e:
                # the new digit 0 vanishes exactly, so the shift drops it
                packed[i] = divexact(piv * packed[i] - e * prow, prev) >> B
            else:
                packed[i] = divexact(piv * packed[i], prev) >> B
        bound = new_bound
        prev = piv
        r += 1
        c += 1
    return r


# -- quadratic extension case ------------------------------------------------


def _packed_rank_quad(
    rows: list[list[tuple[mpz, mpz]]], ncols: int, D: int
) -> int:
    maxabs = max(
        (max(abs(a), abs(s)) for row in rows for (a, s) in row), default=_ZERO
    )
    if maxabs == 0:
        return 0
    dd = mpz(D)
    blow = 1 + abs(D)  # per-product component magnification in Z[sqrt(D)]
    B = max(128, -(-(maxabs.bit_length() + 32) // 8) * 8)
    while maxabs >= mpz(1) << (B - 2):
        B *= 2
    pa_rows = [_pack([a for (a, _) in row], B) for row in rows]
    ps_rows = [_pack([s for (_, s) in row], B) for row in rows]
    nrows = len(pa_rows)
    bound = maxabs
    prev_a, prev_s = mpz(1), _ZERO
    r = 0
    c = 0
    while c < ncols and r < nrows:
        col = [
            (_digit(pa_rows[i], 0, B), _digit(ps_rows[i], 0, B))
            for i in range(r, nrows)
        ]
        p = next((k for k, (a, s) in enumerate(col) if a or s), None)
        if p is None:
            for i in range(r, nrows):
                pa_rows[i] >>= B
                ps_rows[i] >>= B
            c += 1
            continue
        if p:
            pa_rows[r], pa_rows[r + p] = pa_rows[r + p], pa_rows[r]
            ps_rows[r], ps_rows[r + p] = ps_rows[r + p], ps_rows[r]
            col[0], col[p] = col[p], col[0]
        piv_a, piv_s = col[0]
        norm = prev_a * prev_a - dd * prev_s * prev_s
        mag_piv = max(abs(piv_a), abs(piv_s))
        emax = max((max(abs(a), abs(s)) for (a, s) in col[1:]), default=_ZERO)
        mag_prev = max(abs(prev_a), abs(prev_s))

        def quad_bound(base: mpz) -> mpz:
            num_bound = blow * (mag_piv + emax) * base
            return (blow * num_bound * mag_prev) // abs(norm) + 1

        new_bound = quad_bound(bound)
        if new_bound >= mpz(1) << (B - 2):
            # the bound compounds a worst-case ratio per step and can run far
            # ahead of the true entries; reset it to the measured maximum
            # before paying for a wider repack
            rem = ncols - c
            offset = _offset_for(rem, B)
            bound = mpz(
                max((max(_digit_bound(pa_rows[i], rem, B, offset),
                         _digit_bound(ps_rows[i], rem, B, offset))
                     for i in range(r, nrows)),
                    default=0)
            ) + 1
            new_bound = quad_bound(bound)
            if new_bound >= mpz(1) << (B - 2):
                # repack all active rows at a doubled digit width; current
                # entries are within the old bound, so they unpack cleanly
                B2 = 2 * B
                while new_bound >= mpz(1) << (B2 - 2):
                    B2 *= 2
                for i in range(r, nrows):
                    ea = [_digit(pa_rows[i], j, B) for j in range(rem)]
                    es = [_digit(ps_rows[i], j, B) for j in range(rem)]
                    pa_rows[i] = _pack(ea, B2)
                    ps_rows[i] = _pack(es, B2)
                B = B2
            continue
        ra, rs = pa_rows[r], ps_rows[r]
        for i in range(r + 1, nrows):
            ea, es = col[i - r]
            # numerator = piv * row_i - e * row_r   (components in Z[sqrt(D)])
            na = piv_a * pa_rows[i] + dd * piv_s * ps_rows[i] - ea * ra - dd * es * rs
            ns = piv_a * ps_rows[i] + piv_s * pa_rows[i] - ea * rs - es * ra
            # divide by prev: multiply by the conjugate, then by 1/norm(prev)
            qa = prev_a * na - dd * prev_s * ns
            qs = prev_a * ns - prev_s * na
            # digit 0 of the new row vanishes exactly; shift it off
            pa_rows[i] = divexact(qa, norm) >> B
            ps_rows[i] = divexact(qs, norm) >> B
        bound = new_bound
        prev_a, prev_s = piv_a, piv_s
        r += 1
        c += 1
    return r


# -- reference implementation (kept independent for cross-checks) ------------


def field_rank_reference(rows: list[list[FieldElem]], ctx: FieldContext) -> int:
    """Plain Gaussian elimination over K; slow but direct."""
    if not rows or not rows[0]:
        return 0
    m = [row[:] for row in rows]
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [e * inv for e in m[r]]
        for i in range(r + 1, nrows):
            if not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r
