"""Combinatorics of candidate weak-combinatorics vectors.

Two constraints tie a counting vector (n2, t3, n3, t5, d6, t7, d8, d10, j) to
a hypothetical free triple-conic sextic with minimal relation degree d1:

  * the pair budgets of all points sum to 12 (Bezout: three pairs times 4);
  * the local Tjurina numbers sum to (d-1)^2 - d1(d-1-d1) = 25 - d1(5-d1).

A vector passing both is still only a candidate: its points must also be
distributable over the three concrete pairs so that every pair receives
total intersection multiplicity exactly 4.  `pair_assignment_search` decides
this and lists the induced pair-type decompositions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .singularities import SINGULARITY_TYPES, WeakCombinatorics

TOTAL_BUDGET = 12

# order matches the WeakCombinatorics fields
_FIELD_TYPES = ("A1", "A3", "D4", "A5", "D6", "A7", "D8", "D10", "J20")
_TYPE = {t.name: t for t in SINGULARITY_TYPES}


def tau_of(wc: WeakCombinatorics) -> int:
    return wc.tau_local


def budget_of(wc: WeakCombinatorics) -> int:
    return sum(
        count * _TYPE[name].pair_budget
        for name, count in zip(_FIELD_TYPES, wc)
    )


def expected_tau(d1: int) -> int:
    return 25 - d1 * (5 - d1)


def enumerate_tuples(d1: int, include_j: bool = False) -> list[WeakCombinatorics]:
    """All counting vectors compatible with a free sextic of relation degree d1.

    Vectors without a J20 point are only admitted for d1 = 2: a free
    triple-conic sextic whose singularities are all of type ADE has
    exponents (2, 3).  With `include_j` the vectors containing a J20 point
    are added (these may occur for either admissible d1).
    """
    if d1 not in (1, 2):
        raise ValueError("the relation degree of a free sextic is 1 or 2")
    target_tau = expected_tau(d1)
    budgets = [_TYPE[name].pair_budget for name in _FIELD_TYPES]
    taus = [_TYPE[name].tau for name in _FIELD_TYPES]

    out: list[WeakCombinatorics] = []

    def rec(i: int, counts: list[int], budget: int, tau: int) -> None:
        if i == len(_FIELD_TYPES):
            if budget == TOTAL_BUDGET and tau == target_tau:
                wc = WeakCombinatorics(*counts)
                if wc.j == 0 and d1 != 2:
                    return
                if wc.j > 0 and not include_j:
                    return
                out.append(wc)
            return
        c = 0
        while budget + c * budgets[i] <= TOTAL_BUDGET and tau + c * taus[i] <= target_tau:
            rec(i + 1, counts + [c], budget + c * budgets[i], tau + c * taus[i])
            c += 1

    rec(0, [], 0, 0)
    out.sort()
    return out


PairPattern = tuple[int, ...]  # partition of 4, descending

PATTERN_NAMES = {
    (1, 1, 1, 1): "N",
    (2, 1, 1): "t",
    (2, 2): "tt",
    (3, 1): "a5",
    (4,): "a7",
}


@dataclass(frozen=True)
class FeasibilityVerdict:
    vector: WeakCombinatorics
    feasible: bool
    # distinct unordered triples of pair patterns realizing the vector
    decompositions: tuple[tuple[PairPattern, PairPattern, PairPattern], ...]

    @property
    def decomposition_names(self) -> tuple[tuple[str, str, str], ...]:
        return tuple(
            tuple(PATTERN_NAMES[p] for p in dec) for dec in self.decompositions
        )


def pair_assignment_search(wc: WeakCombinatorics) -> FeasibilityVerdict:
    """Decide whether the points can be spread over three concrete pairs.

    A-type points sit on a single pair and consume their whole budget there;
    D-type points sit on all three pairs, with the large multiplicity on one
    chosen pair and 1 on each of the others; J20 points consume 2 on every
    pair.  Feasible means every pair ends at total multiplicity exactly 4.
    """
    jobs = []  # (count, per-choice contribution [c0,c1,c2] parts)
    for name, count in zip(_FIELD_TYPES, wc):
        if count == 0:
            continue
        sig = _TYPE[name].signature
        if len(sig) == 1:
            jobs.append((count, "single", sig[0]))
        elif name == "J20":
            jobs.append((count, "all", 2))
        else:
            jobs.append((count, "spread", max(sig)))

    solutions: set[tuple[PairPattern, PairPattern, PairPattern]] = set()

    def rec(i: int, parts: tuple[tuple[int, ...], ...]) -> None:
        sums = tuple(sum(p) for p in parts)
        if any(s > 4 for s in sums):
            return
        if i == len(jobs):
            if all(s == 4 for s in sums):
                pats = tuple(
                    sorted((tuple(sorted(p, reverse=True)) for p in parts), reverse=True)
                )
                solutions.add(pats)
            return
        count, kind, w = jobs[i]
        if kind == "all":
            rec(i + 1, tuple(p + (2,) * count for p in parts))
            return
        for c0 in range(count + 1):
            for c1 in range(count + 1 - c0):
                c2 = count - c0 - c1
                comp = (c0, c1, c2)
                if kind == "single":
                    new = tuple(parts[k] + (w,) * comp[k] for k in range(3))
                else:
                    new = tuple(
                        parts[k] + (w,) * comp[k] + (1,) * (count - comp[k])
                        for k in range(3)
                    )
                rec(i + 1, new)

    rec(0, ((), (), ()))
    decs = tuple(sorted(solutions, reverse=True))
    return FeasibilityVerdict(wc, bool(decs), decs)


def pair_assignment_bruteforce(wc: WeakCombinatorics) -> bool:
    """Independent oracle: assign every point individually, no grouping."""
    points = []
    for name, count in zip(_FIELD_TYPES, wc):
        points.extend([name] * count)

    def options(name: str):
        sig = _TYPE[name].signature
        if name == "J20":
            return [(2, 2, 2)]
        if len(sig) == 1:
            w = sig[0]
            return [tuple(w if k == p else 0 for k in range(3)) for p in range(3)]
        w = max(sig)
        return [
            tuple(w if k == p else 1 for k in range(3)) for p in range(3)
        ]

    def rec(i: int, sums: tuple[int, int, int]) -> bool:
        if any(s > 4 for s in sums):
            return False
        if i == len(points):
            return sums == (4, 4, 4)
        return any(
            rec(i + 1, tuple(s + d for s, d in zip(sums, opt)))
            for opt in options(points[i])
        )

    return rec(0, (0, 0, 0))


def decomposition_graphs(wc: WeakCombinatorics) -> tuple[tuple[str, str, str], ...]:
    """Named pair-type multisets realizable for the vector (may be empty)."""
    return pair_assignment_search(wc).decomposition_names


# The published list of counting vectors with a J20 point.  Two of its
# entries fail the defining equations; the enumerator output is authoritative
# and `j_list_discrepancy` documents the difference.
PRINTED_J_VECTORS = (
    (0, 0, 1, 1, 0, 0, 0, 0, 1),
    (0, 1, 0, 0, 0, 1, 0, 0, 1),
    (0, 3, 0, 0, 0, 0, 0, 0, 1),
    (1, 0, 0, 0, 0, 0, 1, 0, 1),
    (1, 1, 0, 1, 0, 0, 0, 0, 1),
    (2, 0, 0, 0, 1, 0, 0, 0, 1),
)


def j_list_discrepancy() -> dict:
    """Compare the derived J20 vectors with the published list.

    Returns a dict with the derived list, the published list, and the
    entries found in exactly one of the two, each annotated with its
    tau / budget values so the reader can check the equations directly.
    """
    derived = tuple(
        tuple(t) for t in enumerate_tuples(2, include_j=True) if t.j > 0
    )
    printed = PRINTED_J_VECTORS

    def annotate(v):
        wc = WeakCombinatorics(*v)
        return {
            "vector": list(v),
            "tau": wc.tau_local,
            "budget": budget_of(wc),
            "satisfies_equations": wc.tau_local == expected_tau(2)
            and budget_of(wc) == TOTAL_BUDGET,
        }

    only_derived = [annotate(v) for v in derived if v not in printed]
    only_printed = [annotate(v) for v in printed if v not in derived]
    return {
        "derived": [list(v) for v in derived],
        "printed": [list(v) for v in printed],
        "only_in_derived": only_derived,
        "only_in_printed": only_printed,
        "note": (
            "the derived list is the set of exact solutions of the counting "
            "equations; entries only in the printed list fail them and are "
            "presumed misprints"
        ),
    }


# -- known realizability status (for catalog metadata) -----------------------

# vectors realized by the six catalog families (j omitted, = 0)
REALIZABLE_VECTORS = {
    (0, 1, 0, 0, 0, 0, 2, 0): 1,
    (0, 0, 1, 3, 0, 0, 0, 0): 2,
    (2, 0, 0, 2, 0, 1, 0, 0): 3,
    (2, 1, 0, 0, 0, 2, 0, 0): 4,
    (1, 0, 0, 2, 0, 0, 1, 0): 5,
    (1, 1, 0, 1, 0, 0, 0, 1): 6,
}

# combinatorially feasible but excluded by finer algebraic arguments
REFUTED_VECTORS = (
    (0, 4, 0, 0, 0, 1, 0, 0),
    (1, 2, 0, 1, 0, 1, 0, 0),
    (0, 1, 0, 2, 1, 0, 0, 0),
)


def realizability(wc: WeakCombinatorics) -> str:
    """One of 'realizable', 'refuted', 'infeasible' for ADE vectors with d1=2."""
    if not pair_assignment_search(wc).feasible:
        return "infeasible"
    key = tuple(wc)[:8]
    if wc.j == 0 and key in REALIZABLE_VECTORS:
        return "realizable"
    if wc.j == 0 and key in REFUTED_VECTORS:
        return "refuted"
    return "feasible"
