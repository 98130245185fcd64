import random
from itertools import combinations

import pytest

from kneser_extremal.kneser import Family
from kneser_extremal.setcore import GroundParams

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


def fam(n, k, sets):
    return Family.from_sets(GroundParams(n, k), sets)


def brute_alpha(family):
    """Largest pairwise-intersecting subfamily by trying every subset, biggest first."""
    sets = [set(m.elements) for m in family.members]
    for size in range(len(sets), 0, -1):
        for combo in combinations(range(len(sets)), size):
            if all(sets[a] & sets[b] for a, b in combinations(combo, 2)):
                return size
    return 0


def random_family(rng: random.Random, params: GroundParams) -> Family:
    full = Family.full(params).members
    size = rng.randint(1, len(full))
    return Family(params, tuple(sorted(rng.sample(full, size))))
