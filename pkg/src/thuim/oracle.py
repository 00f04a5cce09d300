"""Reference answers for checking the miner.

``brute_force_thuis`` enumerates every itemset and sums utilities straight
from the transactions, with no upper-bound pruning. ``mine_then_filter`` is
the mine-everything-then-select baseline.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

from .miner import MiningOutcome, mine
from .model import QuantitativeDatabase

MAX_BRUTE_FORCE_ITEMS = 20


class EnumerationLimitError(ValueError):
    pass


def brute_force_thuis(db: QuantitativeDatabase, sigma: int,
                      target: Iterable[int] = ()) -> dict[frozenset, int]:
    items = sorted(db.items)
    n = len(items)
    if n > MAX_BRUTE_FORCE_ITEMS:
        raise EnumerationLimitError(
            f"{n} distinct items exceeds the enumeration limit of {MAX_BRUTE_FORCE_ITEMS}")
    if n == 0:
        return {}
    col = {x: j for j, x in enumerate(items)}
    # utilities[t, j] = u(item j, T_t), 0 when absent
    utilities = np.zeros((len(db), n), dtype=np.int64)
    for r, t in enumerate(db):
        for x, u in zip(t.items, t.utilities):
            utilities[r, col[x]] = u
    present = utilities > 0
    tmask = (present * (1 << np.arange(n, dtype=np.int64))).sum(axis=1)

    want = 0
    for x in set(target):
        if x not in col:
            return {}
        want |= 1 << col[x]

    found: dict[frozenset, int] = {}
    chunk = 1 << 14
    for lo in range(1, 1 << n, chunk):
        masks = np.arange(lo, min(lo + chunk, 1 << n), dtype=np.int64)
        masks = masks[(masks & want) == want]
        if not len(masks):
            continue
        bits = (masks[:, None] >> np.arange(n, dtype=np.int64)) & 1
        contains = (tmask[None, :] & masks[:, None]) == masks[:, None]
        per_tx = bits @ utilities.T
        util = (per_tx * contains).sum(axis=1)
        support = contains.sum(axis=1)
        keep = (util >= sigma) & (support > 0)
        for m, u in zip(masks[keep].tolist(), util[keep].tolist()):
            found[frozenset(items[j] for j in range(n) if m >> j & 1)] = u
    return found


def mine_then_filter(db: QuantitativeDatabase, sigma: int, target: Iterable[int] = (),
                     order: str = "twu-asc") -> MiningOutcome:
    """Mine every HUI, then keep those containing the target.

    ``candidates`` and ``peak_elements`` are those of the untargeted run.
    """
    full = mine(db, sigma, (), order)
    want = set(target)
    full.results = [(X, u) for X, u in full.results if want <= set(X)]
    return full
