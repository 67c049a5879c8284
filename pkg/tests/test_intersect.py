import pytest

from triconic.field import FieldContext
from triconic.geometry import Conic, make_arrangement
from triconic.intersect import (
    pair_multiplicity_patterns,
    pair_pattern,
    shared_point_analysis,
)


@pytest.fixture
def ctx():
    return FieldContext(1)


def test_pair_pattern_transversal(ctx):
    # unit circle and an ellipse meeting it in four distinct points
    q1 = Conic.make(ctx, [1, 1, -1, 0, 0, 0])
    q2 = Conic.make(ctx, [1, 4, -2, 0, 0, 0])
    assert pair_pattern(q1, q2) == (1, 1, 1, 1)


def test_pair_pattern_bitangent(ctx):
    # concentric circles meet only at the two circular points, each doubly
    q1 = Conic.make(ctx, [1, 1, -1, 0, 0, 0])
    q2 = Conic.make(ctx, [1, 1, -4, 0, 0, 0])
    assert pair_pattern(q1, q2) == (2, 2)


def test_pair_pattern_simple_tangency(ctx):
    # circles tangent at [1:0:1]: x^2+y^2-z^2 and (x-3z/4 style) tangency
    q1 = Conic.make(ctx, [1, 1, -1, 0, 0, 0])
    # circle with center (1/2, 0) and radius 1/2 is internally tangent at (1,0)
    q2 = Conic.make(ctx, [1, 1, 0, 0, -1, 0])
    assert pair_pattern(q1, q2) == (2, 1, 1)


def test_loci_cover_bezout_budget(fixtures):
    for arr in fixtures.values():
        analysis = shared_point_analysis(arr)
        per_pair = [0, 0, 0]
        for locus in analysis.loci:
            for k in range(3):
                per_pair[k] += locus.pair_mults[k] * locus.npoints
        assert per_pair == [4, 4, 4]


def test_pair_patterns_sum_to_four(fixtures):
    for arr in fixtures.values():
        analysis = shared_point_analysis(arr)
        for pat in pair_multiplicity_patterns(analysis):
            assert sum(pat) == 4


def test_explicit_points_lie_on_conics(fixtures):
    arr = fixtures["Example2"]
    analysis = shared_point_analysis(arr)
    saw_explicit = False
    for locus in analysis.loci:
        for pt in locus.points:
            saw_explicit = True
            for k, m in enumerate(locus.pair_mults):
                if m:
                    i, j = [(0, 1), (0, 2), (1, 2)][k]
                    assert arr.conics[i](*pt).is_zero()
                    assert arr.conics[j](*pt).is_zero()
    assert saw_explicit


def test_factor_degrees_match_counts(fixtures):
    analysis = shared_point_analysis(fixtures["Persson"])
    for locus in analysis.loci:
        assert locus.factor.degree == locus.npoints
        assert len(locus.points) in (0, locus.npoints)
