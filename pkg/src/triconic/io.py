"""Reading and writing arrangement files (.conics.json).

A file holds a single JSON object: {"D": <square-free int>, "conics": [c1,
c2, c3]} where each conic is a list of 6 coefficients in the monomial order
[X^2, Y^2, Z^2, XY, XZ, YZ].  A coefficient is an integer, a rational string
like "-3/2", or an object {"r": ..., "s": ...} for r + s*sqrt(D).
"""

from __future__ import annotations

import json

from .field import FieldContext, FieldElem, FieldError, rat_str
from .geometry import Arrangement, ValidationError, make_arrangement


class ParseError(ValueError):
    pass


def parse_arrangement(text: str) -> Arrangement:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict):
        raise ParseError("top-level value must be an object")
    try:
        ctx = FieldContext(int(obj.get("D", 1)))
    except (FieldError, TypeError, ValueError) as e:
        raise ParseError(f"bad field discriminant: {e}") from None
    conics = obj.get("conics")
    if not isinstance(conics, list) or len(conics) != 3:
        raise ParseError("'conics' must be a list of exactly 3 conics")
    rows = []
    for i, raw in enumerate(conics):
        if not isinstance(raw, list) or len(raw) != 6:
            raise ParseError(f"conic {i + 1} must be a list of 6 coefficients")
        try:
            rows.append([ctx.from_json(e) for e in raw])
        except (ValueError, TypeError) as e:
            raise ParseError(f"conic {i + 1}: bad coefficient: {e}") from None
    return make_arrangement(rows, ctx)


def load_arrangement(path: str) -> Arrangement:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None
    return parse_arrangement(text)


def elem_to_json(e: FieldElem):
    if e.is_rational():
        r = rat_str(e.r)
        return int(r) if "/" not in r else r
    return {"r": rat_str(e.r), "s": rat_str(e.s)}


def arrangement_to_json(arr: Arrangement) -> dict:
    return {
        "D": arr.ctx.D,
        "conics": [[elem_to_json(e) for e in q.c] for q in arr.conics],
    }


def dump_arrangement(arr: Arrangement) -> str:
    return json.dumps(arrangement_to_json(arr), indent=2) + "\n"
