import random
from pathlib import Path

import pytest

from thuim.model import QuantitativeDatabase

DATA = Path(__file__).parent / "data"

# Item ids of the running example: a=1 ... g=7.
A, B, C, D, E, F, G = range(1, 8)
NAMES = dict(zip("abcdefg", range(1, 8)))
PROFIT = {A: 3, B: 5, C: 1, D: 5, E: 3, F: 4, G: 2}
ROWS = [
    {D: 2, E: 5, F: 6},
    {A: 3, B: 8, D: 7, F: 1},
    {A: 5, B: 3, E: 4, F: 3},
    {A: 4, B: 6, C: 1, D: 4, F: 2},
    {B: 5, D: 3, E: 7, F: 6, G: 3},
    {A: 8, B: 7, D: 2, F: 1, G: 1},
    {A: 1, B: 1, C: 6, E: 5, F: 4, G: 2},
]


def ids(letters):
    return tuple(NAMES[ch] for ch in letters)


def iset(letters):
    return frozenset(ids(letters))


@pytest.fixture
def table1():
    return QuantitativeDatabase.from_quantities(ROWS, PROFIT)


@pytest.fixture
def table1_path():
    return DATA / "table1.txt"


def random_instance(rng: random.Random):
    """A small random (db, sigma, target) from the fuzzing distribution.

    4-12 items, 5-30 transactions, quantities and profits 1-9, sigma a
    0-30% fraction of total utility, target of 0-3 occurring items.
    """
    n_items = rng.randint(4, 12)
    profit = {x: rng.randint(1, 9) for x in range(1, n_items + 1)}
    rows = []
    for _ in range(rng.randint(5, 30)):
        k = rng.randint(1, n_items)
        rows.append({x: rng.randint(1, 9) for x in rng.sample(sorted(profit), k)})
    db = QuantitativeDatabase.from_quantities(rows, profit)
    sigma = int(db.total_utility * rng.uniform(0.0, 0.3))
    present = sorted(db.items)
    target = tuple(rng.sample(present, rng.randint(0, min(3, len(present)))))
    return db, sigma, target


ACCEPTANCE_REPORT: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)
