import pytest

from triconic.freeness import (
    DEGREE,
    dpw_expected_tau,
    freeness_report,
    global_tau,
    jacobian_partials,
    mdr,
    monomials,
    sextic_form,
    syzygy_kernel_dim,
)


def test_monomial_counts():
    # dim of the degree-k part of a three-variable polynomial ring
    for k in (0, 1, 5, 12):
        assert len(monomials(k)) == (k + 1) * (k + 2) // 2


def test_dpw_expected_tau():
    assert dpw_expected_tau(6, 2) == 25 - 2 * 3
    assert dpw_expected_tau(6, 1) == 25 - 4
    assert dpw_expected_tau(6, 2) == 19


def test_persson_free(persson):
    rep = freeness_report(persson)
    assert rep.free
    assert rep.mdr == 2
    assert rep.tau == 19
    assert rep.exponents == (2, 3)
    assert rep.mdr_label == "2"


def test_pokora_free(pokora):
    rep = freeness_report(pokora)
    assert rep.free
    assert rep.tau == dpw_expected_tau(DEGREE, rep.mdr)


def test_example2_not_free(example2):
    rep = freeness_report(example2)
    assert not rep.free
    assert rep.tau == 18
    assert rep.exponents is None


def test_tau_matches_local_sum(persson, example2):
    for arr in (persson, example2):
        rep = freeness_report(arr)
        assert rep.tau == rep.combinatorics.tau_local


def test_global_tau_direct(example2):
    partials = jacobian_partials(sextic_form(example2))
    assert global_tau(partials) == 18
    # no Jacobian relation in degree 1 or 2, so the mdr label is "greater than 2"
    assert mdr(partials) is None
    assert syzygy_kernel_dim(partials, 1) == 0
    assert syzygy_kernel_dim(partials, 2) == 0


def test_report_cached(persson):
    assert freeness_report(persson) is freeness_report(persson)
