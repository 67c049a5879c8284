import pytest

from triconic.catalog import (
    FAMILIES,
    ConstraintViolation,
    TangencyError,
    VerificationFailed,
    build_tangent_conic,
    instantiate,
    instantiate_detail,
    known_arrangements,
    manifest,
    solve_constraint,
)
from triconic.field import FieldContext
from triconic.geometry import Conic
from triconic.intersect import pair_pattern
from triconic.singularities import weak_combinatorics


def elems(ctx, d):
    return {k: ctx.elem(v) for k, v in d.items()}


def test_manifest_shape():
    m = manifest()
    assert [f["id"] for f in m["families"]] == ["F1", "F2", "F3", "F4", "F5", "F6"]
    assert {f["name"] for f in m["fixtures"]} == {"Persson", "Pokora", "Example2"}
    for f in m["families"]:
        assert sum(f["expected_combinatorics"]) >= 3


def test_instantiate_f1(ctxq):
    inst = instantiate_detail("F1", elems(ctxq, {"u": "1/2"}), ctxq)
    assert inst.fid == "F1"
    assert inst.formula_path == "printed"
    wc = weak_combinatorics(inst.arrangement)
    assert wc == FAMILIES["F1"].expected


def test_instantiate_f2_constructive(ctxq):
    inst = instantiate_detail("F2", elems(ctxq, {"b": 0, "c": 1}), ctxq)
    assert inst.formula_path == "constructive"
    assert weak_combinatorics(inst.arrangement) == FAMILIES["F2"].expected


def test_missing_parameter(ctxq):
    with pytest.raises(ConstraintViolation):
        instantiate("F1", {}, ctxq)


def test_solve_constraint_f3(ctx3):
    sols = solve_constraint("F3", elems(ctx3, {"m": 1, "p": 0}), ctx3)
    assert len(sols) == 2
    assert sols[0]["a"] == -sols[1]["a"]
    for s in sols:
        # a^2 = -3 (m - p)^4
        d = s["m"] - s["p"]
        assert s["a"] * s["a"] == ctx3.elem(-3) * d * d * d * d
        arr = instantiate("F3", s, ctx3)
        assert weak_combinatorics(arr) == FAMILIES["F3"].expected


def test_solve_constraint_f3_needs_field(ctxq):
    with pytest.raises(ConstraintViolation):
        solve_constraint("F3", elems(ctxq, {"m": 1, "p": 0}), ctxq)


def test_solve_constraint_f5(ctx3):
    sols = solve_constraint("F5", elems(ctx3, {"p": 0, "q": 1}), ctx3)
    assert len(sols) == 2
    for s in sols:
        d = s["p"] - s["q"]
        mu = s["mu"]
        # 3 mu^2 + 3(p-q) mu + (p-q)^2 = 0
        three = ctx3.elem(3)
        assert (three * mu * mu + three * d * mu + d * d).is_zero()


def test_solve_constraint_degenerate(ctx3):
    with pytest.raises(ConstraintViolation):
        solve_constraint("F3", elems(ctx3, {"m": 1, "p": 1}), ctx3)


def test_verification_catches_wrong_counts(ctxq, monkeypatch):
    import triconic.catalog as cat

    spec = cat.FAMILIES["F1"]
    bad = spec.__class__(
        spec.fid, spec.params, spec.constraint_text,
        spec.expected._replace(n2=5), spec.needs_sqrt_minus3,
    )
    monkeypatch.setitem(cat.FAMILIES, "F1", bad)
    with pytest.raises(VerificationFailed):
        instantiate("F1", elems(ctxq, {"u": 2}), ctxq)


def test_build_tangent_conic_kinds(ctxq):
    q1 = Conic.make(ctxq, [1, 1, -1, 0, 0, 0])
    # tangent to the unit circle at [1:0:1] and at [0:1:1]
    t1 = (ctxq.one, ctxq.zero, -ctxq.one)
    t2 = (ctxq.zero, ctxq.one, -ctxq.one)
    lam = ctxq.elem(2)
    q_tt = build_tangent_conic(q1, "tt", (t1, t2), lam)
    assert pair_pattern(q1, q_tt) == (2, 2)
    q_a7 = build_tangent_conic(q1, "a7", (t1,), lam)
    assert pair_pattern(q1, q_a7) == (4,)


def test_build_tangent_conic_rejects_non_tangent(ctxq):
    q1 = Conic.make(ctxq, [1, 1, -1, 0, 0, 0])
    secant = (ctxq.one, ctxq.zero, ctxq.zero)  # X = 0 cuts the circle twice
    with pytest.raises(TangencyError):
        build_tangent_conic(q1, "a7", (secant,), ctxq.elem(1))


def test_known_arrangement_facts():
    for name, arr, facts in known_arrangements():
        assert len(arr.conics) == 3
        if "combinatorics" in facts:
            assert tuple(weak_combinatorics(arr)) == facts["combinatorics"]
