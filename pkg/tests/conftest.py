"""Shared fixtures: warmed graph censuses and their build timings."""
import time

import pytest

from wienerlab.verify import eulerian_census

# wall-clock seconds for the first (cold) build of each census, keyed by name
CENSUS_TIMINGS: dict[str, float] = {}


@pytest.fixture(scope="session")
def census9():
    t0 = time.perf_counter()
    rows = eulerian_census(9, jobs=8)
    CENSUS_TIMINGS.setdefault("census9", time.perf_counter() - t0)
    return rows


@pytest.fixture(scope="session")
def census10():
    t0 = time.perf_counter()
    rows = eulerian_census(10, jobs=8)
    CENSUS_TIMINGS.setdefault("census10", time.perf_counter() - t0)
    return rows


@pytest.fixture(scope="session")
def census_timings():
    return CENSUS_TIMINGS
