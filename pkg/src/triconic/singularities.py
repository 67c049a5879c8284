"""Classifying the singular points of a triple-conic sextic.

Every singular point of the union of three smooth conics in general position
relative to each other is an intersection point of some of the pairs.  Its
analytic type is determined by the multiset of pairwise intersection
multiplicities concentrated at the point.  The weak combinatorics of an
arrangement is the vector of counts of each type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .geometry import Arrangement, IDENTITY_SEED
from .intersect import (
    IntersectionAnalysis,
    InternalError,
    PointLocus,
    shared_point_analysis,
)


class UnsupportedSingularityError(ValueError):
    """An intersection profile outside the supported quasihomogeneous list."""


@dataclass(frozen=True)
class SingularityType:
    name: str
    signature: tuple[int, ...]  # pairwise multiplicities at the point, ascending
    tau: int                    # Tjurina number (= Milnor number for these types)

    @property
    def pair_budget(self) -> int:
        """Units of the Bezout bound 4 this point consumes on each pair it meets."""
        return sum(self.signature)


SINGULARITY_TYPES = (
    SingularityType("A1", (1,), 1),
    SingularityType("A3", (2,), 3),
    SingularityType("A5", (3,), 5),
    SingularityType("A7", (4,), 7),
    SingularityType("D4", (1, 1, 1), 4),
    SingularityType("D6", (1, 1, 2), 6),
    SingularityType("D8", (1, 1, 3), 8),
    SingularityType("D10", (1, 1, 4), 10),
    SingularityType("J20", (2, 2, 2), 10),
)

_BY_SIGNATURE = {t.signature: t for t in SINGULARITY_TYPES}
_BY_NAME = {t.name: t for t in SINGULARITY_TYPES}


def type_by_name(name: str) -> SingularityType:
    return _BY_NAME[name]


def classify_signature(signature: tuple[int, ...]) -> SingularityType:
    sig = tuple(sorted(signature))
    try:
        return _BY_SIGNATURE[sig]
    except KeyError:
        raise UnsupportedSingularityError(
            f"unsupported singularity with pair multiplicities {sig}"
        ) from None


def classify_locus(locus: PointLocus) -> SingularityType:
    return classify_signature(locus.pair_signature)


class WeakCombinatorics(NamedTuple):
    """Counts (n2, t3, n3, t5, d6, t7, d8, d10, j) of singular points by type.

    n2/t3/t5/t7 count A1/A3/A5/A7 points of a single pair, n3/d6/d8/d10 count
    the D-type points where all three conics meet, j counts J20 points.
    """

    n2: int
    t3: int
    n3: int
    t5: int
    d6: int
    t7: int
    d8: int
    d10: int
    j: int

    @property
    def tau_local(self) -> int:
        n2, t3, n3, t5, d6, t7, d8, d10, j = self
        return n2 + 3 * t3 + 4 * n3 + 5 * t5 + 6 * d6 + 7 * t7 + 8 * d8 + 10 * d10 + 10 * j

    @property
    def point_count(self) -> int:
        return sum(self)


_NAME_TO_FIELD = {
    "A1": "n2",
    "A3": "t3",
    "A5": "t5",
    "A7": "t7",
    "D4": "n3",
    "D6": "d6",
    "D8": "d8",
    "D10": "d10",
    "J20": "j",
}


@dataclass(frozen=True)
class ClassifiedPoint:
    sing_type: SingularityType
    locus: PointLocus


@dataclass(frozen=True)
class SingularityReport:
    combinatorics: WeakCombinatorics
    points: tuple[ClassifiedPoint, ...]
    analysis: IntersectionAnalysis


def singularity_report(arr: Arrangement, seed: int = IDENTITY_SEED) -> SingularityReport:
    analysis = shared_point_analysis(arr, seed)
    counts = {f: 0 for f in WeakCombinatorics._fields}
    points = []
    for locus in analysis.loci:
        st = classify_locus(locus)
        counts[_NAME_TO_FIELD[st.name]] += locus.npoints
        points.append(ClassifiedPoint(st, locus))
    wc = WeakCombinatorics(**counts)

    # Each pair meets its partner in total multiplicity 4 (Bezout for two
    # conics); across the three pairs this is 12, and each point consumes its
    # budget times its batch size.
    spent = sum(cp.sing_type.pair_budget * cp.locus.npoints for cp in points)
    if spent != 12:
        raise InternalError(f"pair budgets sum to {spent}, not 12")
    return SingularityReport(wc, tuple(points), analysis)


def weak_combinatorics(arr: Arrangement, seed: int = IDENTITY_SEED) -> WeakCombinatorics:
    return singularity_report(arr, seed).combinatorics
