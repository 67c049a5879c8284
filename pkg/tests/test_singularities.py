import pytest

from triconic.singularities import (
    SINGULARITY_TYPES,
    UnsupportedSingularityError,
    WeakCombinatorics,
    classify_signature,
    singularity_report,
    type_by_name,
    weak_combinatorics,
)

EXPECTED_TYPES = {
    "A1": ((1,), 1),
    "A3": ((2,), 3),
    "A5": ((3,), 5),
    "A7": ((4,), 7),
    "D4": ((1, 1, 1), 4),
    "D6": ((1, 1, 2), 6),
    "D8": ((1, 1, 3), 8),
    "D10": ((1, 1, 4), 10),
    "J20": ((2, 2, 2), 10),
}


def test_type_table():
    assert len(SINGULARITY_TYPES) == 9
    for t in SINGULARITY_TYPES:
        sig, tau = EXPECTED_TYPES[t.name]
        assert t.signature == sig
        assert t.tau == tau
        assert t.pair_budget == sum(sig)


def test_classify_signature_sorts():
    assert classify_signature((2, 1, 1)).name == "D6"
    assert classify_signature((4,)).name == "A7"
    assert type_by_name("J20").tau == 10


def test_unsupported_signature():
    with pytest.raises(UnsupportedSingularityError):
        classify_signature((2, 2))
    with pytest.raises(UnsupportedSingularityError):
        classify_signature((1, 2, 3))


def test_tau_local_formula():
    wc = WeakCombinatorics(1, 1, 1, 1, 1, 1, 1, 1, 1)
    assert wc.tau_local == 1 + 3 + 4 + 5 + 6 + 7 + 8 + 10 + 10
    assert wc.point_count == 9
    zero = WeakCombinatorics(0, 0, 0, 0, 0, 0, 0, 0, 0)
    assert zero.tau_local == 0


def test_fixture_combinatorics(fixtures):
    wc = weak_combinatorics(fixtures["Example2"])
    assert tuple(wc) == (2, 3, 0, 0, 0, 1, 0, 0, 0)
    assert wc.tau_local == 2 + 9 + 7


def test_report_budget_and_counts(fixtures):
    rep = singularity_report(fixtures["Persson"])
    spent = sum(
        cp.sing_type.pair_budget * cp.locus.npoints for cp in rep.points
    )
    assert spent == 12
    assert rep.combinatorics.point_count == sum(
        cp.locus.npoints for cp in rep.points
    )


def test_report_invariant_under_seed(fixtures):
    a = weak_combinatorics(fixtures["Pokora"])
    b = weak_combinatorics(fixtures["Pokora"], seed=1234)
    assert a == b
