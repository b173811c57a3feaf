import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rrreg.equigen import GeneratorSet, iter_generator_sets  # noqa: E402

HUCKABA = GeneratorSet(7, [0, 1, 5, 7])
DEG17 = GeneratorSet(17, [0, 1, 3, 5, 13, 14, 16, 17])


def exhaustive(dmax=7, dmin=1):
    return [E for d in range(dmin, dmax + 1) for E in iter_generator_sets(d)]


def random_ideals(count=200, dmax=12, seed=20240917):
    """Deterministic random ideals with 8 <= d <= dmax."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(8, dmax)
        out.append(GeneratorSet(d, [0, d] + [a for a in range(1, d) if rng.random() < 0.5]))
    return out


EXHAUSTIVE_7 = exhaustive(7)
RANDOM_12 = random_ideals()


def ideal_id(E):
    return f"d{E.d}-" + "_".join(map(str, E.exponents))


@pytest.fixture
def huckaba():
    return HUCKABA


@pytest.fixture
def deg17():
    return DEG17


# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
