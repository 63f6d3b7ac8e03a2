import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kfsubnormal import all_subgroups, default_catalog  # noqa: E402
from kfsubnormal.catalog import get_entry  # noqa: E402

import oracles  # noqa: E402

SMALL = ("S3", "C4", "V4", "D8", "Q8", "C2^3", "D10", "D12", "A4", "C3:C4", "S3xC3", "F20", "C7:C3", "F7", "S4")


@lru_cache(maxsize=None)
def catalog():
    return tuple(default_catalog())


@lru_cache(maxsize=None)
def lattice(name):
    return all_subgroups(get_entry(name, list(catalog())).to_group())


@lru_cache(maxsize=None)
def oracle(name):
    e = get_entry(name, list(catalog()))
    return oracles.Oracle(oracles.perm_group([p.images for p in e.permutations()], e.degree))


def as_set(L, i):
    """A lattice subgroup as a frozenset of image tuples, for oracle comparison."""
    return frozenset(p.images for p in L.elements_of(i))


def index_of(L, S):
    return next(i for i in range(len(L)) if as_set(L, i) == S)


@pytest.fixture
def L_of():
    return lattice


@pytest.fixture
def oracle_of():
    return oracle


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    OUTCOMES = getattr(mod, "OUTCOMES", None)
    if not OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(OUTCOMES):
        ok, text = OUTCOMES[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {text}")
