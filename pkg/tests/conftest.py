from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from feckly.specs import build, default_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    """(spec, ring) for every shipped corpus entry."""
    return [(s, build(s)) for s in default_corpus()]


def transport(R, model, xs):
    """Package indices of model elements."""
    return {R.parse(x) for x in xs}
