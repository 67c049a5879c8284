"""The full analysis pipeline and its machine-readable report."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .combinat import PATTERN_NAMES, REALIZABLE_VECTORS
from .field import FieldElem, rat_str
from .freeness import DEGREE, FreenessReport, dpw_expected_tau, freeness_report
from .geometry import Arrangement
from .intersect import pair_multiplicity_patterns
from .io import elem_to_json
from .singularities import SingularityReport, singularity_report
from .upoly import UniPoly


def _elem_str(e: FieldElem) -> str:
    if e.is_rational():
        return rat_str(e.r)
    base = rat_str(e.r)
    s = rat_str(e.s)
    return f"{base} + {s}*sqrt({e.ctx.D})"


def _poly_str(p: UniPoly) -> str:
    parts = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if c.is_zero():
            continue
        var = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        cs = _elem_str(c)
        if var and cs == "1":
            cs = ""
        parts.append(f"{cs}{'*' if cs and var else ''}{var}")
    return " + ".join(parts) if parts else "0"


def _location(locus, seed_used: int) -> str:
    if locus.points:
        x, y, z = locus.points[0]
        return f"[{_elem_str(x)} : {_elem_str(y)} : {_elem_str(z)}]"
    return (
        f"roots of {_poly_str(locus.factor)} with [X:Y] factor in the "
        f"frame of seed {seed_used}"
    )


@dataclass(frozen=True)
class AnalysisReport:
    arrangement: Arrangement
    singularities: SingularityReport
    freeness: FreenessReport
    seed: int
    elapsed: float

    def to_json(self) -> dict:
        sing = self.singularities
        free = self.freeness
        wc = tuple(free.combinatorics)
        patterns = pair_multiplicity_patterns(sing.analysis)
        pattern_names = sorted(PATTERN_NAMES[pat] for pat in patterns)
        d1 = free.mdr
        return {
            "seed": self.seed,
            "field": {"D": self.arrangement.ctx.D},
            "singular_points": [
                {
                    "type": cp.sing_type.name,
                    "count": cp.locus.npoints,
                    "location": _location(cp.locus, sing.analysis.seed_used),
                    "pair_multiplicities": list(cp.locus.pair_mults),
                    "points": [
                        [elem_to_json(c) for c in pt] for pt in cp.locus.points
                    ],
                }
                for cp in sing.points
            ],
            "weak_combinatorics": list(wc),
            "pair_decomposition": [
                "".join(str(m) for m in pat) for pat in patterns
            ],
            "pair_decomposition_names": pattern_names,
            "tau_local": sing.combinatorics.tau_local,
            "tau_global": free.tau,
            "mdr": free.mdr_label,
            "dpw": {
                "left": dpw_expected_tau(DEGREE, d1) if d1 is not None else None,
                "right": free.tau,
                "holds": free.free,
            },
            "free": free.free,
            "exponents": list(free.exponents) if free.exponents else None,
            "catalog_match": _catalog_match(wc, free.free),
            "coordinate_change": {
                "seed_used": sing.analysis.seed_used,
                "attempts": sing.analysis.attempts,
                "matrix": [
                    [elem_to_json(e) for e in row]
                    for row in sing.analysis.matrix
                ],
            },
            "elapsed_seconds": round(self.elapsed, 3),
        }


def _catalog_match(wc: tuple, free: bool) -> str | None:
    key = wc[:8]
    if free and wc[8] == 0 and key in REALIZABLE_VECTORS:
        return f"F{REALIZABLE_VECTORS[key]}"
    return None


def analyze(arr: Arrangement, seed: int = 0) -> AnalysisReport:
    start = time.monotonic()
    sing = singularity_report(arr, seed)
    free = freeness_report(arr, seed)
    return AnalysisReport(arr, sing, free, seed, time.monotonic() - start)


def report_text(rep: AnalysisReport) -> str:
    obj = rep.to_json()
    lines = []
    lines.append(f"field: Q(sqrt({obj['field']['D']}))" if obj["field"]["D"] != 1
                 else "field: Q")
    lines.append("singular points:")
    for sp in obj["singular_points"]:
        mult = "" if sp["count"] == 1 else f" x{sp['count']}"
        lines.append(
            f"  {sp['type']}{mult} at {sp['location']} "
            f"(pair multiplicities {tuple(sp['pair_multiplicities'])})"
        )
    lines.append(f"weak combinatorics: {tuple(obj['weak_combinatorics'])}")
    lines.append(
        "pair decomposition: "
        + ", ".join(obj["pair_decomposition"])
        + (
            f"  [{' + '.join(obj['pair_decomposition_names'])}]"
            if obj["pair_decomposition_names"] else ""
        )
    )
    lines.append(f"tau (local sum): {obj['tau_local']}")
    lines.append(f"tau (global):    {obj['tau_global']}")
    lines.append(f"mdr: {obj['mdr']}")
    if obj["dpw"]["left"] is not None:
        lines.append(
            f"du Plessis-Wall: expected tau {obj['dpw']['left']}, "
            f"actual {obj['dpw']['right']}"
        )
    lines.append(f"free: {'yes' if obj['free'] else 'no'}"
                 + (f", exponents {tuple(obj['exponents'])}" if obj["exponents"] else ""))
    if obj["catalog_match"]:
        lines.append(f"catalog match: family {obj['catalog_match']}")
    lines.append(f"elapsed: {obj['elapsed_seconds']}s")
    return "\n".join(lines) + "\n"
