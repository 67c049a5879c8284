"""One pytest case per acceptance criterion.

Each check function raises AssertionError with a diagnostic on failure and
returns a human-readable detail string on success; the shared corpus of
analyzed arrangements is built once and reused across criteria.
"""

import pytest

from triconic import acceptance


@pytest.mark.parametrize(
    "cid,name,func",
    acceptance.CRITERIA,
    ids=[f"{cid}-{name}" for cid, name, _ in acceptance.CRITERIA],
)
def test_criterion(cid, name, func):
    detail = func()
    assert isinstance(detail, str) and detail
