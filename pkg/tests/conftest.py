import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gadc.generator import CensusSpec, enumerate_diagrams, fixtures


@pytest.fixture(scope="session")
def fx():
    return fixtures()


@pytest.fixture(scope="session")
def small_census():
    """All diagrams with C <= 3, any genus up to 3, all marker choices."""
    spec = CensusSpec(max_crossings=3, genus_range=(0, 3), filters=frozenset())
    return list(enumerate_diagrams(spec))


@pytest.fixture(scope="session")
def small_maps(small_census):
    """One diagram per underlying map of the small census."""
    seen = set()
    out = []
    for d in small_census:
        if d.pairing not in seen:
            seen.add(d.pairing)
            out.append(d)
    return out
